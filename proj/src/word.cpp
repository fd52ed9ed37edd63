#include "univoque/word.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace univoque {

namespace {

void check_letters(const std::string& s) {
  for (char c : s)
    if (c != '0' && c != '1') throw ParseError("word letters must be 0 or 1");
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

}  // namespace

Word::Word(std::string preperiod, std::string period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  check_letters(pre_);
  check_letters(per_);
  if (per_.empty()) throw ParseError("empty period");
  per_ = primitive_root(per_);
  // absorb preperiod letters into the period by rotating it
  std::size_t cut = pre_.size();
  while (cut > 0 && pre_[cut - 1] == per_.back()) {
    std::rotate(per_.begin(), per_.end() - 1, per_.end());
    --cut;
  }
  pre_.resize(cut);
}

std::string Word::prefix(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (u == v) return std::strong_ordering::equal;
  const std::size_t a = u.period().size(), b = v.period().size();
  const std::size_t limit =
      std::max(u.preperiod().size(), v.preperiod().size()) + std::lcm(a, b);
  for (std::size_t i = 0; i < limit; ++i) {
    const char x = u.at(i), y = v.at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;  // unreachable for canonical words
}

Word parse_word(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw ParseError("word must look like PRE(PER): " + std::string(text));
  std::string pre(text.substr(0, open));
  std::string per(text.substr(open + 1, text.size() - open - 2));
  if (per.find_first_of("()") != std::string::npos)
    throw ParseError("nested parentheses in word: " + std::string(text));
  return Word(std::move(pre), std::move(per));
}

Word shift(const Word& u, std::size_t n) {
  const auto& pre = u.preperiod();
  if (n < pre.size()) return Word(pre.substr(n), u.period());
  std::string per = u.period();
  std::rotate(per.begin(), per.begin() + (n - pre.size()) % per.size(), per.end());
  return Word("", std::move(per));
}

Word reflect(const Word& u) {
  auto flip = [](std::string s) {
    for (char& c : s) c = c == '0' ? '1' : '0';
    return s;
  };
  return Word(flip(u.preperiod()), flip(u.period()));
}

namespace {

// Extremal suffix beginning with `lead`; every suffix is a shift by less
// than span() letters.
Word extremal(const Word& u, char lead, bool largest) {
  bool found = false;
  Word best = u;
  for (std::size_t i = 0; i < u.span(); ++i) {
    if (u.at(i) != lead) continue;
    Word s = shift(u, i);
    if (!found || (largest ? s > best : s < best)) best = std::move(s);
    found = true;
  }
  if (!found)
    throw PreconditionError(std::string("word has no suffix starting with ") + lead +
                            ": " + u.str());
  return best;
}

}  // namespace

Word sup0(const Word& u) { return extremal(u, '0', true); }
Word inf1(const Word& u) { return extremal(u, '1', false); }

bool in_sup0_class(const Word& u) {
  return u.at(0) == '0' && !u.eventually_constant() && sup0(u) == u;
}

bool in_inf1_class(const Word& v) {
  return v.at(0) == '1' && !v.eventually_constant() && inf1(v) == v;
}

struct WordStream::State {
  Generator gen;
  std::mutex mutex;
  std::string cache;
  bool exhausted = false;
};

WordStream::WordStream(Generator gen) : state_(std::make_shared<State>()) {
  state_->gen = std::move(gen);
}

WordStream WordStream::of(const Word& w) {
  return WordStream([w](std::size_t n) { return w.prefix(n); });
}

WordStream WordStream::of_prefix(std::string letters) {
  return WordStream([s = std::move(letters)](std::size_t n) { return s.substr(0, n); });
}

std::string WordStream::prefix(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  auto& cache = state_->cache;
  if (cache.size() < n && !state_->exhausted) {
    // grow geometrically so repeated small requests stay cheap
    std::string more = state_->gen(std::max(n, 2 * cache.size()));
    if (more.size() < std::max(n, 2 * cache.size())) state_->exhausted = true;
    cache = std::move(more);
  }
  return cache.substr(0, std::min(n, cache.size()));
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Equal: return "=";
    case Cmp::Greater: return ">";
    case Cmp::Undecided: return "Undecided";
  }
  return "?";
}

Cmp compare(const WordStream& s, const Word& w, std::size_t depth) {
  const std::string p = s.prefix(depth);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const char y = w.at(i);
    if (p[i] != y) return p[i] < y ? Cmp::Less : Cmp::Greater;
  }
  return Cmp::Undecided;
}

Cmp compare(const WordStream& s, const WordStream& t, std::size_t depth) {
  const std::string p = s.prefix(depth), q = t.prefix(depth);
  const std::size_t n = std::min(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != q[i]) return p[i] < q[i] ? Cmp::Less : Cmp::Greater;
  return Cmp::Undecided;
}

}  // namespace univoque
