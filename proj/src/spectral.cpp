#include "univoque/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace univoque {

std::string SubshiftAutomaton::dump() const {
  std::ostringstream os;
  for (std::size_t s = 0; s < next.size(); ++s)
    for (int c = 0; c < 2; ++c)
      if (next[s][c] >= 0) os << s << ' ' << c << " -> " << next[s][c] << '\n';
  return os.str();
}

namespace {

using Positions = std::vector<int>;
using State = std::pair<Positions, Positions>;

// m indexes the letter about to be compared; past the preperiod only the
// phase inside the period matters
int wrap(const Word& w, int m) {
  const int pre = static_cast<int>(w.preperiod().size());
  const int per = static_cast<int>(w.period().size());
  return m < pre + per ? m : pre + (m - pre) % per;
}

// nullopt when the letter violates a constraint
std::optional<State> step(const State& s, char c, const Word& a, const Word& b) {
  State out;
  for (int m : s.first) {
    const char x = a.at(m);
    if (c > x) return std::nullopt;
    if (c == x) out.first.push_back(wrap(a, m + 1));
  }
  for (int m : s.second) {
    const char x = b.at(m);
    if (c < x) return std::nullopt;
    if (c == x) out.second.push_back(wrap(b, m + 1));
  }
  // the suffix starting here ties with the first letter of a or b
  if (c == '0') out.first.push_back(wrap(a, 1));
  else out.second.push_back(wrap(b, 1));
  for (auto* v : {&out.first, &out.second}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return out;
}

// Keep the states that reach a cycle, then merge states with equal futures.
SubshiftAutomaton trim_and_minimize(std::vector<std::array<int, 2>> next) {
  const std::size_t n = next.size();
  std::vector<bool> live(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (!live[s]) continue;
      bool out = false;
      for (int t : next[s]) out = out || (t >= 0 && live[t]);
      if (!out) {
        live[s] = false;
        changed = true;
      }
    }
  }
  for (auto& row : next)
    for (int& t : row)
      if (t >= 0 && !live[t]) t = -1;

  // Moore refinement over the live part
  std::vector<int> block(n, 0);
  std::size_t blocks = 1;
  while (true) {
    std::map<std::array<int, 3>, int> sig;
    std::vector<int> refined(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
      if (!live[s]) continue;
      std::array<int, 3> key{block[s], next[s][0] < 0 ? -1 : block[next[s][0]],
                             next[s][1] < 0 ? -1 : block[next[s][1]]};
      auto [it, fresh] = sig.try_emplace(key, static_cast<int>(sig.size()));
      refined[s] = it->second;
    }
    const bool stable = sig.size() == blocks;
    block = std::move(refined);
    blocks = sig.size();
    if (stable) break;
  }

  // renumber from the initial state in BFS order so dumps are stable
  SubshiftAutomaton m;
  std::vector<int> id(blocks, -1);
  std::vector<std::size_t> rep(blocks, 0);
  for (std::size_t s = n; s-- > 0;)
    if (live[s]) rep[block[s]] = s;
  std::deque<int> queue{block[0]};
  id[block[0]] = 0;
  std::vector<int> order{block[0]};
  while (!queue.empty()) {
    const int bl = queue.front();
    queue.pop_front();
    for (int t : next[rep[bl]]) {
      if (t < 0 || id[block[t]] >= 0) continue;
      id[block[t]] = static_cast<int>(order.size());
      order.push_back(block[t]);
      queue.push_back(block[t]);
    }
  }
  m.next.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c = 0; c < 2; ++c) {
      const int t = next[rep[order[i]]][c];
      m.next[i][c] = t < 0 ? -1 : id[block[t]];
    }
  return m;
}

}  // namespace

SubshiftAutomaton build_automaton(const Word& a, const Word& b, bool validate) {
  if (a.at(0) != '0') throw PreconditionError("a must start with 0");
  if (b.at(0) != '1') throw PreconditionError("b must start with 1");
  if (validate) {
    if (sup0(a) != a) throw PreconditionError("a must equal its largest 0-suffix: " + a.str());
    if (inf1(b) != b) throw PreconditionError("b must equal its smallest 1-suffix: " + b.str());
  }

  std::map<State, int> index;
  std::vector<State> states;
  std::vector<std::array<int, 2>> next;
  auto intern = [&](State s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(std::move(s));
      next.push_back({-1, -1});
    }
    return it->second;
  };
  intern({});
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (int c = 0; c < 2; ++c) {
      auto t = step(states[i], static_cast<char>('0' + c), a, b);
      if (t) {
        const int j = intern(std::move(*t));
        next[i][c] = j;
      }
    }
  }
  // Ω always holds 0̄, so the initial state survives trimming
  return trim_and_minimize(std::move(next));
}

std::uint64_t path_count(const SubshiftAutomaton& m, std::size_t n) {
  std::vector<std::uint64_t> ways(m.size(), 0), nxt(m.size());
  ways[m.initial] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t s = 0; s < m.size(); ++s)
      if (ways[s])
        for (int t : m.next[s])
          if (t >= 0) nxt[t] += ways[s];
    std::swap(ways, nxt);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

namespace {

std::vector<std::vector<int>> strong_components(const SubshiftAutomaton& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> idx(n, -1), low(n, 0), stack;
  std::vector<bool> on(n, false);
  std::vector<std::vector<int>> out;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (int w : m.next[v]) {
      if (w < 0) continue;
      if (idx[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp.push_back(w);
      } while (w != v);
      out.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v)
    if (idx[v] < 0) visit(v);
  return out;
}

// Perron root of an irreducible component by power iteration on A + I,
// which is primitive; Collatz-Wielandt quotients bracket the root.
double perron_root(const SubshiftAutomaton& m, const std::vector<int>& comp, double tol) {
  std::vector<int> local(m.size(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> edges(comp.size());
  std::size_t edge_count = 0;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (int t : m.next[comp[i]])
      if (t >= 0 && local[t] >= 0) {
        edges[i].push_back(local[t]);
        ++edge_count;
      }
  if (edge_count == 0) return 0;
  if (edge_count == comp.size()) return 1;  // a single cycle

  std::vector<double> x(comp.size(), 1.0), y(comp.size());
  double lo = 0, hi = 3;
  for (int iter = 0; iter < 1000000; ++iter) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      y[i] = x[i];
      for (int j : edges[i]) y[i] += x[j];
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0;
    double norm = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < comp.size(); ++i) x[i] = y[i] / norm;
    if (hi - lo <= tol * lo) break;
  }
  return (lo + hi) / 2 - 1;
}

}  // namespace

double entropy(const SubshiftAutomaton& m, double tol) {
  double rho = 0;
  for (const auto& comp : strong_components(m)) rho = std::max(rho, perron_root(m, comp, tol));
  return rho > 1 ? std::log(rho) : 0.0;
}

double ifs_dimension(double r0, double r1, double tol) {
  if (!(r0 > 0 && r0 < 1 && r1 > 0 && r1 < 1))
    throw PreconditionError("contraction ratios must lie in (0,1)");
  auto excess = [&](double s) { return std::pow(r0, s) + std::pow(r1, s) - 1; };
  double lo = 0, hi = 1;
  while (excess(hi) > 0) hi *= 2;
  while (hi - lo > tol * std::max(1.0, hi)) {
    const double mid = (lo + hi) / 2;
    (excess(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

EntropyBounds truncated_entropy_bounds(const DigitRun& a, const DigitRun& b, std::size_t n) {
  EntropyBounds out;
  out.digits = std::min({n, a.certain_prefix(), b.certain_prefix()});
  if (out.digits < 2) throw PreconditionError("expansion digits too close to a boundary");
  const std::string pa = a.digits.substr(0, out.digits), pb = b.digits.substr(0, out.digits);
  out.lower = entropy(build_automaton(Word(pa, "0"), Word(pb, "1"), false));
  out.upper = entropy(build_automaton(Word(pa, "1"), Word(pb, "0"), false));
  return out;
}

namespace {

std::string repeat(const std::string& s, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += s;
  return out;
}

double ratio(const std::string& w, double q0, double q1) {
  const auto zeros = static_cast<double>(std::count(w.begin(), w.end(), '0'));
  const auto ones = static_cast<double>(w.size()) - zeros;
  return std::pow(q0, -zeros) * std::pow(q1, -ones);
}

constexpr std::size_t kMaxGeneratorPower = 256;

}  // namespace

DimensionWitness dimension_witness(const DigitRun& a, const DigitRun& b, double q0, double q1,
                                   std::size_t max_depth) {
  const WordStream sa = certain_stream(a), sb = certain_stream(b);
  const DirectiveSequence path_a = s_map(sa, max_depth);
  const DirectiveSequence path_b = s_map(sb, max_depth);
  auto ge = [](Cmp c) { return c != Cmp::Less; };  // ties at truncation count

  auto try_node = [&](const std::string& w) -> std::optional<DimensionWitness> {
    const std::string node = w + "M";
    auto img = [&](const Word& u) { return univoque::apply(node, u); };
    DimensionWitness out;
    out.node = w;
    if (ge(compare(sa, img(Word::constant('0')))) && compare(sb, img(Word("1", "0"))) == Cmp::Less) {
      for (std::size_t k = 0; k < kMaxGeneratorPower; ++k) {
        const Word probe = univoque::apply(w, Word("1", "0" + repeat("01", k)));
        if (compare(sb, probe) != Cmp::Less) continue;
        out.k = k;
        out.word0 = univoque::apply(w, "0" + repeat("01", k));
        out.word1 = univoque::apply(w, "0" + repeat("01", k + 1));
        break;
      }
    } else if (compare(sa, img(Word("0", "1"))) == Cmp::Greater &&
               compare(sb, img(Word::constant('1'))) != Cmp::Greater) {
      for (std::size_t k = 0; k < kMaxGeneratorPower; ++k) {
        const Word probe = univoque::apply(w, Word("0", "1" + repeat("10", k)));
        if (compare(sa, probe) != Cmp::Greater) continue;
        out.k = k;
        out.word0 = univoque::apply(w, "1" + repeat("10", k));
        out.word1 = univoque::apply(w, "1" + repeat("10", k + 1));
        break;
      }
    }
    if (out.word0.empty()) return std::nullopt;
    out.r0 = ratio(out.word0, q0, q1);
    out.r1 = ratio(out.word1, q0, q1);
    out.dimension = ifs_dimension(out.r0, out.r1);
    return out;
  };

  for (const auto* path : {&path_a, &path_b}) {
    std::string w;
    for (std::size_t i = 0;; ++i) {
      if (auto found = try_node(w)) return *found;
      const char c = path->at(i);
      if (c == '\0' || w.size() >= max_depth) break;
      w += c;
    }
  }
  throw PreconditionError("no node with a positive-dimension subsystem found along the directive path");
}

}  // namespace univoque
