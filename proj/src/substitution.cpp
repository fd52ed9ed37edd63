#include "univoque/substitution.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <vector>

namespace univoque {

namespace {

const char* letter_image(char sub, char letter) {
  switch (sub) {
    case 'L': return letter == '0' ? "0" : "10";
    case 'M': return letter == '0' ? "01" : "10";
    case 'R': return letter == '0' ? "01" : "1";
  }
  throw ParseError(std::string("unknown substitution ") + sub);
}

// image of `letters` truncated to n letters
std::string image_prefix(char sub, std::string_view letters, std::size_t n) {
  std::string out;
  for (char c : letters) {
    out += letter_image(sub, c);
    if (out.size() >= n) break;
  }
  if (out.size() > n) out.resize(n);
  return out;
}

std::string apply_prefix(std::string_view directive, std::string letters, std::size_t n) {
  for (auto it = directive.rbegin(); it != directive.rend(); ++it)
    letters = image_prefix(*it, letters, n);
  return letters;
}

std::string primitive_root(const std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = s[i] == s[i - d];
    if (ok) return s.substr(0, d);
  }
  return s;
}

void check_directive(std::string_view s) {
  for (char c : s)
    if (c != 'L' && c != 'M' && c != 'R')
      throw ParseError(std::string("directive letters must be L, M or R, got ") + c);
}

}  // namespace

std::string image(char sub, std::string_view letters) {
  std::string out;
  out.reserve(2 * letters.size());
  for (char c : letters) out += letter_image(sub, c);
  return out;
}

std::string apply(std::string_view directive, std::string_view letters) {
  std::string s(letters);
  for (auto it = directive.rbegin(); it != directive.rend(); ++it) s = image(*it, s);
  return s;
}

Word apply(std::string_view directive, const Word& u) {
  return Word(univoque::apply(directive, u.preperiod()), univoque::apply(directive, u.period()));
}

std::optional<Word> preimage(char sub, const Word& u) {
  // Parse u token by token. Inside the periodic part the parse position
  // modulo the period determines the rest, so the first repeated position
  // closes the period of the preimage.
  const std::size_t pre = u.preperiod().size(), per = u.period().size();
  std::vector<long> seen(per, -1);
  std::string out;
  std::size_t p = 0;
  while (true) {
    if (p >= pre) {
      const std::size_t phase = (p - pre) % per;
      if (seen[phase] >= 0) {
        const auto cut = static_cast<std::size_t>(seen[phase]);
        return Word(out.substr(0, cut), out.substr(cut));
      }
      seen[phase] = static_cast<long>(out.size());
    }
    const char x = u.at(p), y = u.at(p + 1);
    switch (sub) {
      case 'M':
        if (x == y) return std::nullopt;
        out.push_back(x);
        p += 2;
        break;
      case 'L':
        if (x == '0') { out.push_back('0'); p += 1; }
        else if (y == '0') { out.push_back('1'); p += 2; }
        else return std::nullopt;
        break;
      case 'R':
        if (x == '1') { out.push_back('1'); p += 1; }
        else if (y == '1') { out.push_back('0'); p += 2; }
        else return std::nullopt;
        break;
      default:
        throw ParseError(std::string("unknown substitution ") + sub);
    }
  }
}

DirectiveSequence DirectiveSequence::make(std::string head, Tail tail, std::string block) {
  check_directive(head);
  DirectiveSequence d;
  d.tail = tail;
  if (tail == Tail::RepeatL) block = "L";
  if (tail == Tail::RepeatR) block = "R";
  if (tail == Tail::Finite) {
    d.head = std::move(head);
    return d;
  }
  check_directive(block);
  if (block.empty()) throw ParseError("empty periodic block");
  block = primitive_root(block);
  while (!head.empty() && head.back() == block.back()) {
    std::rotate(block.begin(), block.end() - 1, block.end());
    head.pop_back();
  }
  if (block == "L") d.tail = Tail::RepeatL;
  else if (block == "R") d.tail = Tail::RepeatR;
  else d.tail = Tail::Periodic;
  d.head = std::move(head);
  d.block = std::move(block);
  return d;
}

char DirectiveSequence::at(std::size_t i) const {
  if (i < head.size()) return head[i];
  if (!infinite()) return '\0';
  return block[(i - head.size()) % block.size()];
}

std::string DirectiveSequence::str() const {
  std::string s = head;
  if (infinite()) s += "(" + block + ")";
  if (truncated) s += "...";
  return s;
}

DirectiveSequence parse_directive(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    return DirectiveSequence::make(std::string(text), DirectiveSequence::Tail::Finite);
  }
  if (text.back() != ')') throw ParseError("directive tail must end with ')'");
  std::string head(text.substr(0, open));
  std::string block(text.substr(open + 1, text.size() - open - 2));
  return DirectiveSequence::make(std::move(head), DirectiveSequence::Tail::Periodic,
                                 std::move(block));
}

DirectiveSequence normalized_for_seed(const DirectiveSequence& d, char seed) {
  using Tail = DirectiveSequence::Tail;
  if (d.truncated) return d;
  DirectiveSequence out = d;
  if (out.tail == Tail::Finite)
    out = DirectiveSequence::make(out.head, seed == '0' ? Tail::RepeatL : Tail::RepeatR);
  const bool lr = out.tail == Tail::RepeatR && !out.head.empty() && out.head.back() == 'L';
  const bool rl = out.tail == Tail::RepeatL && !out.head.empty() && out.head.back() == 'R';
  if (lr || rl) {
    out.head.back() = 'M';
    out = DirectiveSequence::make(out.head, seed == '0' ? Tail::RepeatL : Tail::RepeatR);
  }
  return out;
}

std::optional<bool> is_primitive(const DirectiveSequence& d) {
  if (d.truncated) return std::nullopt;
  // a finite σ is not a sequence at all; count it as non-primitive
  return d.tail == DirectiveSequence::Tail::Periodic;
}

Cmp compare(const DirectiveSequence& a, const DirectiveSequence& b) {
  std::size_t limit;
  if (a.infinite() && b.infinite() && !a.truncated && !b.truncated)
    limit = std::max(a.head.size(), b.head.size()) + std::lcm(a.block.size(), b.block.size());
  else
    limit = std::max(a.head.size(), b.head.size()) + 1;
  auto rank = [](char c) { return c == 'L' ? 0 : c == 'M' ? 1 : 2; };
  for (std::size_t i = 0; i < limit; ++i) {
    const char x = a.at(i), y = b.at(i);
    if (x == '\0' || y == '\0') {
      if (x == '\0' && y == '\0' && !a.truncated && !b.truncated) return Cmp::Equal;
      return Cmp::Undecided;
    }
    if (x != y) return rank(x) < rank(y) ? Cmp::Less : Cmp::Greater;
  }
  return Cmp::Equal;
}

LimitWord limit_word(const DirectiveSequence& d, char seed) {
  using Tail = DirectiveSequence::Tail;
  if (seed != '0' && seed != '1') throw PreconditionError("seed must be 0 or 1");
  if (d.truncated) throw PreconditionError("limit word of a truncated directive");
  std::optional<Word> exact;
  switch (d.tail) {
    case Tail::Finite: exact = univoque::apply(d.head, Word::constant(seed)); break;
    // L̄(0̄) = 0̄, L̄(1̄) = 10̄;  R̄(0̄) = 01̄, R̄(1̄) = 1̄
    case Tail::RepeatL:
      exact = univoque::apply(d.head, seed == '0' ? Word::constant('0') : Word("1", "0"));
      break;
    case Tail::RepeatR:
      exact = univoque::apply(d.head, seed == '0' ? Word("0", "1") : Word::constant('1'));
      break;
    case Tail::Periodic: break;
  }
  if (exact) return {exact, WordStream::of(*exact)};
  return {std::nullopt,
          WordStream([d, seed](std::size_t n) { return limit_prefix(d, seed, n); })};
}

std::string limit_prefix(const DirectiveSequence& d, char seed, std::size_t n) {
  if (d.tail != DirectiveSequence::Tail::Periodic) return limit_word(d, seed).exact->prefix(n);
  // head·block^k applied to the seed letter is a prefix of the limit word
  // as soon as it has n letters
  for (std::size_t k = 1; k <= (1u << 20); k *= 2) {
    std::string tau = d.head;
    for (std::size_t i = 0; i < k; ++i) tau += d.block;
    std::string s = apply_prefix(tau, std::string(1, seed), n);
    if (s.size() >= n) return s;
  }
  throw PreconditionError("limit word does not grow: " + d.str());
}

NodeBoundaries node_boundaries(std::string_view w) {
  check_directive(w);
  const std::string sigma = std::string(w) + "M";
  return {univoque::apply(sigma, Word::constant('0')), univoque::apply(sigma, Word("01", "0")),
          univoque::apply(sigma, Word("0", "1")),      univoque::apply(sigma, Word("1", "0")),
          univoque::apply(sigma, Word("10", "1")),     univoque::apply(sigma, Word::constant('1'))};
}

std::shared_ptr<const NodeBoundaries> NodeCache::get(const std::string& w) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = nodes_.find(w); it != nodes_.end()) return it->second;
  }
  auto node = std::make_shared<const NodeBoundaries>(node_boundaries(w));
  std::unique_lock lock(mutex_);
  return nodes_.try_emplace(w, std::move(node)).first->second;
}

namespace {

Cmp from_ordering(std::strong_ordering o) {
  return o < 0 ? Cmp::Less : o > 0 ? Cmp::Greater : Cmp::Equal;
}

// One descent for both input kinds; `cmp` compares u with an exact word.
template <class Compare>
DirectiveSequence descend(char lead, Compare cmp, std::size_t max_depth) {
  using Tail = DirectiveSequence::Tail;
  auto done = [](std::string head, Tail t) { return DirectiveSequence::make(std::move(head), t); };
  auto stuck = [](std::string head) { return DirectiveSequence::prefix_only(std::move(head)); };

  if (lead == '0') {
    // [0̄, 010̄] is the L̄ interval, 01̄ alone is R̄
    const Cmp c = cmp(Word("01", "0"));
    if (c == Cmp::Undecided) return stuck("");
    if (c != Cmp::Greater) return done("", Tail::RepeatL);
    const Cmp e = cmp(Word("0", "1"));
    if (e == Cmp::Undecided) return stuck("");
    if (e == Cmp::Equal) return done("", Tail::RepeatR);
  } else {
    const Cmp c = cmp(Word("10", "1"));
    if (c == Cmp::Undecided) return stuck("");
    if (c != Cmp::Less) return done("", Tail::RepeatR);
    const Cmp e = cmp(Word("1", "0"));
    if (e == Cmp::Undecided) return stuck("");
    if (e == Cmp::Equal) return done("", Tail::RepeatL);
  }

  // Invariant: u lies strictly inside (w(010̄), w(01̄)), resp. (w(10̄), w(101̄)).
  std::string w;
  while (w.size() < max_depth) {
    const NodeBoundaries nb = node_boundaries(w);
    const std::string sigma = w + "M";
    if (lead == '0') {
      const Cmp c0 = cmp(nb.s0);
      if (c0 == Cmp::Undecided) return stuck(w);
      if (c0 == Cmp::Less) { w += 'L'; continue; }
      const Cmp c1 = cmp(nb.s010);
      if (c1 == Cmp::Undecided) return stuck(w);
      if (c1 != Cmp::Greater) return done(sigma, Tail::RepeatL);
      const Cmp c2 = cmp(nb.s01);
      if (c2 == Cmp::Undecided) return stuck(w);
      if (c2 == Cmp::Equal) return done(sigma, Tail::RepeatR);
      w += c2 == Cmp::Less ? 'M' : 'R';
    } else {
      const Cmp c0 = cmp(nb.s10);
      if (c0 == Cmp::Undecided) return stuck(w);
      if (c0 == Cmp::Less) { w += 'L'; continue; }
      if (c0 == Cmp::Equal) return done(sigma, Tail::RepeatL);
      const Cmp c1 = cmp(nb.s101);
      if (c1 == Cmp::Undecided) return stuck(w);
      if (c1 == Cmp::Less) { w += 'M'; continue; }
      const Cmp c2 = cmp(nb.s1);
      if (c2 == Cmp::Undecided) return stuck(w);
      if (c2 != Cmp::Greater) return done(sigma, Tail::RepeatR);
      w += 'R';
    }
  }
  return stuck(w);
}

}  // namespace

DirectiveSequence s_map(const Word& u, std::size_t max_depth) {
  return descend(u.at(0), [&](const Word& x) { return from_ordering(u <=> x); }, max_depth);
}

DirectiveSequence s_map(const WordStream& u, std::size_t max_depth, std::size_t stream_depth) {
  const std::string first = u.prefix(1);
  if (first.empty()) return DirectiveSequence::prefix_only("");
  // a stream equal to a node word would agree with it forever; past one
  // extra period beyond the default depth we give up
  auto cmp = [&](const Word& x) {
    return compare(u, x, stream_depth + x.preperiod().size() + 2 * x.period().size());
  };
  return descend(first[0], cmp, max_depth);
}

std::optional<std::string> common_node(const Word& u, const Word& v) {
  // every preimage step strictly shortens a word that is not eventually
  // constant, so the search is finite; the budget is a safety net
  struct Search {
    std::size_t budget;
    std::optional<std::string> run(const Word& x, const Word& y) {
      if (budget == 0 || x.eventually_constant() || y.eventually_constant()) return std::nullopt;
      --budget;
      if (preimage('M', x) && preimage('M', y)) return std::string();
      for (char c : {'L', 'M', 'R'}) {
        auto px = preimage(c, x);
        if (!px) continue;
        auto py = preimage(c, y);
        if (!py) continue;
        if (auto rest = run(*px, *py)) return c + *rest;
      }
      return std::nullopt;
    }
  };
  Search s{4 * (u.span() + v.span()) + 16};
  return s.run(u, v);
}

}  // namespace univoque
