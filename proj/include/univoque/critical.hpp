#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "univoque/classify.hpp"
#include "univoque/eval.hpp"
#include "univoque/substitution.hpp"

namespace univoque {

enum class CriticalCase { LeftFormula, RightFormula, PrimitiveLimit, DepthExhausted };

const char* to_string(CriticalCase c);
CriticalCase parse_critical_case(const std::string& s);

template <class Real>
struct CriticalResult {
  Bracket<Real> value;
  std::string node;             // w with σ = wM, or the prefix reached
  CriticalCase kind = CriticalCase::DepthExhausted;
  std::optional<Word> formula;  // boundary word whose g or g̃ gives the value
  Real witness = 0;             // (q0 − 1)(value − 1) at the bracket midpoint
};

struct DescentOptions {
  std::size_t max_depth = kDefaultMaxDepth;
  NodeCache* cache = nullptr;
  // node words longer than this stop the descent
  std::size_t max_word_span = std::size_t{1} << 20;
};

namespace detail {

template <class Real>
Bracket<Real> open_range(const Real& q0) {
  return {Real(1), q0 / (q0 - 1)};
}

// Every parameter whose directive starts with p has a ∈ [p(0̄), p(01̄)] and
// b ∈ [p(10̄), p(1̄)], and a grows while b shrinks with q1. That encloses the
// critical value. Eventually constant words give no bound.
template <class Real>
Bracket<Real> prefix_enclosure(const std::string& p, const Real& q0, const Real& tol) {
  Bracket<Real> out = open_range(q0);
  const Word lo_a = univoque::apply(p, Word::constant('0')), hi_a = univoque::apply(p, Word("0", "1"));
  const Word lo_b = univoque::apply(p, Word("1", "0")), hi_b = univoque::apply(p, Word::constant('1'));
  if (!lo_a.eventually_constant()) {
    const auto g = greedy_base(lo_a, q0, tol, false);
    out.lo = std::max(out.lo, g.bracket.lo);
  }
  if (!hi_a.eventually_constant()) {
    const auto g = greedy_base(hi_a, q0, tol, false);
    out.hi = std::min(out.hi, g.bracket.hi);
  }
  if (!hi_b.eventually_constant()) out.lo = std::max(out.lo, lazy_base(hi_b, q0, tol, false).lo);
  if (!lo_b.eventually_constant()) out.hi = std::min(out.hi, lazy_base(lo_b, q0, tol, false).hi);
  if (out.hi < out.lo) std::swap(out.lo, out.hi);  // only at rounding level
  return out;
}

template <class Real>
CriticalResult<Real> finish(const Real& q0, Bracket<Real> value, std::string node, CriticalCase kind,
                            std::optional<Word> formula = std::nullopt) {
  CriticalResult<Real> r;
  r.value = value;
  r.node = std::move(node);
  r.kind = kind;
  r.formula = std::move(formula);
  r.witness = (q0 - 1) * (value.mid() - 1);
  return r;
}

inline std::shared_ptr<const NodeBoundaries> node_of(const std::string& w, NodeCache* cache) {
  if (cache) return cache->get(w);
  return std::make_shared<const NodeBoundaries>(node_boundaries(w));
}

// Shared tail of both descents once the next letter is known.
template <class Real>
std::optional<CriticalResult<Real>> advance(std::string& w, char next, const Real& q0,
                                            const Real& tol, const DescentOptions& opt) {
  if (w.size() + 1 > opt.max_depth) {
    return finish(q0, prefix_enclosure(w, q0, tol), w, CriticalCase::DepthExhausted);
  }
  w += next;
  // below a few letters the enclosure is never tight; skip the solves
  if (w.size() >= 4) {
    const Bracket<Real> enc = prefix_enclosure(w, q0, tol);
    if (enc.width() <= tol) return finish(q0, enc, w, CriticalCase::PrimitiveLimit);
  }
  return std::nullopt;
}

}  // namespace detail

// 𝒢(q0): descent over w ∈ {L,R}*. At σ = wM the node covers
// [μ(σ0̄,σ10̄), μ(σ01̄,σ1̄)], split at μ(σ0̄,σ1̄) into the g_{σ(0̄)} and
// g̃_{σ(1̄)} pieces. Membership is read off from signs of g − g̃ at q0, which
// is equivalent to comparing q0 with μ; ties count as inside because the
// neighbouring formulas agree at shared endpoints.
template <class Real>
CriticalResult<Real> generalized_golden_ratio(const Real& q0, const Real& tol = Real(1e-12),
                                              const DescentOptions& opt = {}) {
  if (!(q0 > 1)) throw PreconditionError("q0 must exceed 1");
  std::string w;
  while (true) {
    const auto nb = detail::node_of(w, opt.cache);
    if (nb->s0.span() > opt.max_word_span)
      return detail::finish(q0, detail::prefix_enclosure(w, q0, tol), w, CriticalCase::DepthExhausted);
    const auto g0 = greedy_base(nb->s0, q0, tol, false);
    char next;
    if (root_order(g0, nb->s10, q0) > 0) {
      next = 'L';
    } else {
      const auto g01 = greedy_base(nb->s01, q0, tol, false);
      if (root_order(g01, nb->s1, q0) < 0) {
        next = 'R';
      } else if (root_order(g0, nb->s1, q0) >= 0) {
        return detail::finish(q0, g0.bracket, w, CriticalCase::LeftFormula, nb->s0);
      } else {
        return detail::finish(q0, lazy_base(nb->s1, q0, tol, false), w, CriticalCase::RightFormula,
                              nb->s1);
      }
    }
    if (auto done = detail::advance(w, next, q0, tol, opt)) return *done;
  }
}

// 𝒦(q0): descent over w ∈ {L,M,R}*. At σ = wM the left piece
// [μ(σ0̄,σ10̄), μ(σ010̄,σ10̄)] carries g̃_{σ(10̄)} and the right piece
// [μ(σ01̄,σ101̄), μ(σ01̄,σ1̄)] carries g_{σ(01̄)}; the gap between them
// belongs to the subtree wM.
template <class Real>
CriticalResult<Real> komornik_loreti(const Real& q0, const Real& tol = Real(1e-12),
                                     const DescentOptions& opt = {}) {
  if (!(q0 > 1)) throw PreconditionError("q0 must exceed 1");
  std::string w;
  while (true) {
    const auto nb = detail::node_of(w, opt.cache);
    if (nb->s0.span() > opt.max_word_span)
      return detail::finish(q0, detail::prefix_enclosure(w, q0, tol), w, CriticalCase::DepthExhausted);
    const auto g0 = greedy_base(nb->s0, q0, tol, false);
    char next;
    if (root_order(g0, nb->s10, q0) > 0) {
      next = 'L';
    } else if (root_order(greedy_base(nb->s010, q0, tol, false), nb->s10, q0) >= 0) {
      return detail::finish(q0, lazy_base(nb->s10, q0, tol, false), w, CriticalCase::LeftFormula,
                            nb->s10);
    } else {
      const auto g01 = greedy_base(nb->s01, q0, tol, false);
      if (root_order(g01, nb->s101, q0) > 0) next = 'M';
      else if (root_order(g01, nb->s1, q0) >= 0)
        return detail::finish(q0, g01.bracket, w, CriticalCase::RightFormula, nb->s01);
      else next = 'R';
    }
    if (auto done = detail::advance(w, next, q0, tol, opt)) return *done;
  }
}

struct CrossCheck {
  Cmp order = Cmp::Undecided;  // s(a) versus s(b)
  DirectiveSequence sa, sb;
  std::size_t digits_used = 0;
  bool boundary_hit = false;
  std::string common_prefix() const;
};

// s(a_{q0,q1}) against s(b_{q0,q1}) from n-digit expansions. Equal means the
// directives agree as far as the digits determine them.
CrossCheck ks_crosscheck(const std::string& q0, const std::string& q1, std::size_t n = 256,
                         std::size_t max_depth = kDefaultMaxDepth);

template <class Real>
CrossCheck ks_crosscheck(const Real& q0, const Real& q1, std::size_t n = 256,
                         std::size_t max_depth = kDefaultMaxDepth) {
  return ks_crosscheck(format_real(q0, 40), format_real(q1, 40), n, max_depth);
}

enum class CurveKind { G, K, Both };

struct CurveRow {
  double q0 = 0;
  char which = 'G';  // 'G' or 'K'
  double lo = 0, hi = 0;
  std::string node;
  CriticalCase kind = CriticalCase::DepthExhausted;

  bool operator==(const CurveRow&) const = default;
};

// Uniform n-point grid on [lo, hi] in hardware precision; rows sorted by q0.
std::vector<CurveRow> sample_curve(double lo, double hi, std::size_t n, CurveKind which,
                                   double tol = 1e-12, std::size_t max_depth = kDefaultMaxDepth,
                                   unsigned threads = 0);

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);
std::vector<CurveRow> read_curve_csv(std::istream& is);

// Label of U_{q0,q1} from the position of q1 against the critical brackets.
// Within tol of a critical value the expansion words decide when their
// directives split before a boundary digit; otherwise Undecided.
template <class Real>
Classification classify_univoque(const Real& q0, const Real& q1, const Real& tol = Real(1e-12),
                                 std::size_t max_depth = kDefaultMaxDepth) {
  if (!(q0 > 1) || !(q1 > 1)) throw PreconditionError("bases must exceed 1");
  if (!is_regular(q0, q1))
    return {Label::PositiveEntropy, 0, "q0 + q1 < q0 q1: U is the full shift"};
  DescentOptions opt;
  opt.max_depth = max_depth;
  const auto g = generalized_golden_ratio(q0, tol, opt);
  const std::string gs = "G in [" + format_real(g.value.lo, 17) + ", " + format_real(g.value.hi, 17) + "]";
  if (q1 < g.value.lo - tol) return {Label::Trivial, g.node.size(), gs};
  const auto k = komornik_loreti(q0, tol, opt);
  const std::string ks = gs + " K in [" + format_real(k.value.lo, 17) + ", " + format_real(k.value.hi, 17) + "]";
  if (q1 > k.value.hi + tol) return {Label::PositiveEntropy, k.node.size(), ks};
  if (q1 > g.value.hi + tol && q1 < k.value.lo - tol) return {Label::CountableNontrivial, k.node.size(), ks};

  // At 𝒢 itself V may be countable while U is trivial, so only the
  // strict sides are read off the expansion words.
  const auto check = ks_crosscheck(q0, q1, 256, max_depth);
  const bool near_g = q1 <= g.value.hi + tol;
  if (!near_g && check.order == Cmp::Greater && !check.boundary_hit)
    return {Label::PositiveEntropy, check.common_prefix().size(), ks + " directives split upward"};
  return {Label::Undecided, check.common_prefix().size(), ks + " q1 within tolerance of a critical value"};
}

}  // namespace univoque
