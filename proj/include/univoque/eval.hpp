#pragma once

#include <algorithm>
#include <string>

#include "univoque/real.hpp"
#include "univoque/substitution.hpp"
#include "univoque/word.hpp"

namespace univoque {

template <class Real>
struct Bracket {
  Real lo;
  Real hi;

  Real mid() const { return (lo + hi) / 2; }
  Real width() const { return hi - lo; }
  bool contains(const Real& x) const { return lo <= x && x <= hi; }
};

template <class Real>
bool is_regular(const Real& q0, const Real& q1) {
  return q0 + q1 >= q0 * q1;
}

namespace detail {

// Sum over k of [i_k = counted] / (q_{i_1}…q_{i_k}): preperiod directly,
// then one period closed off geometrically. Long words stop once the
// remaining terms are below working precision (the tail of any word is at
// most 1/(min q − 1) times the current weight).
template <class Real>
Real digit_series(const Word& u, const Real& q0, const Real& q1, char counted) {
  const Real qmin = q0 < q1 ? q0 : q1;
  const bool truncate = qmin > 1;
  const Real cutoff = truncate ? Real(epsilon_of<Real>() * (qmin - 1) / 64) : Real(0);
  Real weight = 1, sum = 0;
  for (char c : u.preperiod()) {
    weight /= c == '0' ? q0 : q1;
    if (c == counted) sum += weight;
    if (weight < cutoff) return sum;
  }
  const Real w0 = weight, s0 = sum;
  for (char c : u.period()) {
    weight /= c == '0' ? q0 : q1;
    if (c == counted) sum += weight;
    if (weight < cutoff) return sum;
  }
  return s0 + (sum - s0) / (1 - weight / w0);
}

}  // namespace detail

// π_{q0,q1}(u) = Σ i_k / (q_{i_1}…q_{i_k})
template <class Real>
Real project(const Word& u, const Real& q0, const Real& q1) {
  return detail::digit_series(u, q0, q1, '1');
}

// π̃_{q0,q1}(v) = Σ (1 − i_k) / (q_{i_1}…q_{i_k}) = π_{q1,q0}(reflect v)
template <class Real>
Real project_dual(const Word& v, const Real& q0, const Real& q1) {
  return detail::digit_series(v, q0, q1, '0');
}

// f_u(q0,q1) = q0 (q1 π(u) − 1); its zero set is where u is the
// quasi-greedy expansion of 1/q1.
template <class Real>
Real greedy_defect(const Word& u, const Real& q0, const Real& q1) {
  return q0 * (q1 * project(u, q0, q1) - 1);
}

// f̃_v(q0,q1) = q1 (q0 π̃(v) − 1), the quasi-lazy counterpart.
template <class Real>
Real lazy_defect(const Word& v, const Real& q0, const Real& q1) {
  return q1 * (q0 * project_dual(v, q0, q1) - 1);
}

// Root q1 of a defect function. below_one encodes g_u(q0) = 1.
template <class Real>
struct BaseRoot {
  bool below_one = false;
  Bracket<Real> bracket;

  Real value() const { return bracket.mid(); }
};

namespace detail {

inline constexpr int kMaxBisections = 2000;

// Bisection for a function decreasing in q1, positive at lo.
template <class Real, class F>
Bracket<Real> bisect_decreasing(F f, Real lo, Real hi, const Real& tol) {
  for (int i = 0; i < kMaxBisections && hi - lo > tol; ++i) {
    const Real m = (lo + hi) / 2;
    if (m <= lo || m >= hi) break;  // out of working precision
    if (f(m) > 0) lo = m;
    else hi = m;
  }
  return {lo, hi};
}

template <class Real, class F>
Real upper_start(F f, const Real& q0) {
  // the root lies below q0/(q0−1); widen only as a safety net
  Real hi = q0 / (q0 - 1);
  hi += (hi - 1) / 1024;
  for (int i = 0; i < 64 && f(hi) > 0; ++i) hi = 1 + 2 * (hi - 1);
  return hi;
}

}  // namespace detail

// g_u(q0): the q1 at which u is the quasi-greedy expansion of 1/q1.
// With validate=false the caller vouches for sup0(u) = u.
template <class Real>
BaseRoot<Real> greedy_base(const Word& u, const Real& q0, const Real& tol, bool validate = true) {
  if (!(q0 > 1)) throw PreconditionError("q0 must exceed 1");
  if (validate && !in_sup0_class(u))
    throw PreconditionError("word must equal its largest 0-suffix and not be eventually constant: " +
                            u.str());
  auto f = [&](const Real& q1) { return greedy_defect(u, q0, q1); };
  if (!(f(Real(1)) > 0)) return {true, {Real(1), Real(1)}};
  const Real hi = detail::upper_start(f, q0);
  return {false, detail::bisect_decreasing(f, Real(1), hi, tol)};
}

// g̃_v(q0): the q1 at which v is the quasi-lazy expansion of 1/(q0(q1−1)).
template <class Real>
Bracket<Real> lazy_base(const Word& v, const Real& q0, const Real& tol, bool validate = true) {
  if (!(q0 > 1)) throw PreconditionError("q0 must exceed 1");
  if (validate && !in_inf1_class(v))
    throw PreconditionError("word must equal its smallest 1-suffix and not be eventually constant: " +
                            v.str());
  auto f = [&](const Real& q1) { return lazy_defect(v, q0, q1); };
  const Real hi = detail::upper_start(f, q0);
  return detail::bisect_decreasing(f, Real(1), hi, tol);
}

// Sign of g_u(x) − g̃_v(x) using one root solve: f̃_v is decreasing in q1,
// so its sign at the bracket of g_u(x) tells which root is larger.
// Zero when the two roots cannot be separated at this tolerance.
template <class Real>
int root_order(const Word& u, const Word& v, const Real& x, const Real& tol) {
  const BaseRoot<Real> g = greedy_base(u, x, tol, false);
  if (g.below_one) return -1;  // g̃_v(x) > 1 always
  if (lazy_defect(v, x, g.bracket.hi) > 0) return -1;
  if (lazy_defect(v, x, g.bracket.lo) < 0) return 1;
  return 0;
}

template <class Real>
int root_order(const BaseRoot<Real>& g, const Word& v, const Real& x) {
  if (g.below_one) return -1;
  if (lazy_defect(v, x, g.bracket.hi) > 0) return -1;
  if (lazy_defect(v, x, g.bracket.lo) < 0) return 1;
  return 0;
}

// μ_{u,v}: the unique x with g_u(x) = g̃_v(x), where g_u > g̃_v to the left.
// Only pairs lying in the image of a common node σM are accepted.
template <class Real>
Bracket<Real> crossing(const Word& u, const Word& v, const Real& tol) {
  if (!in_sup0_class(u)) throw PreconditionError("u must equal its largest 0-suffix: " + u.str());
  if (!in_inf1_class(v)) throw PreconditionError("v must equal its smallest 1-suffix: " + v.str());
  if (!common_node(u, v))
    throw PreconditionError("u and v are not images of a common node: " + u.str() + ", " + v.str());

  const Real inner = std::max(Real(tol / 1000000), Real(epsilon_of<Real>() * 4096));
  auto sign = [&](const Real& x) { return root_order(u, v, x, inner); };

  Real lo = 1 + Real(1) / 64;
  for (int i = 0; i < 60 && sign(lo) <= 0; ++i) lo = 1 + (lo - 1) / 2;
  Real hi = 2;
  for (int i = 0; i < 40 && sign(hi) >= 0; ++i) hi *= 2;
  if (sign(lo) <= 0 || sign(hi) >= 0)
    throw PreconditionError("no sign change of g_u - g~_v for " + u.str() + ", " + v.str());

  for (int i = 0; i < detail::kMaxBisections && hi - lo > tol; ++i) {
    const Real m = (lo + hi) / 2;
    if (m <= lo || m >= hi) break;
    const int s = sign(m);
    if (s > 0) lo = m;
    else if (s < 0) hi = m;
    else {
      // the two roots agree to the inner tolerance at m
      const Real half = tol / 2;
      return {std::max(lo, Real(m - half)), std::min(hi, Real(m + half))};
    }
  }
  return {lo, hi};
}

// Affine identification of a {(d0,q0),(d1,q1)} system with {(0,q0),(1,q1)}:
// value = offset + scale · π_{q0,q1}.
template <class Real>
struct AffineReduction {
  Real offset;
  Real scale;
};

template <class Real>
AffineReduction<Real> reduce_system(const Real& d0, const Real& q0, const Real& d1, const Real& q1) {
  if (!(q0 > 1) || !(q1 > 1)) throw PreconditionError("bases must exceed 1");
  using std::abs;
  const Real shifted = d0 * (q1 - 1) / (q0 - 1);
  const Real scale = d1 - shifted;
  const Real size = abs(d1) + abs(shifted);
  if (abs(scale) <= size * epsilon_of<Real>() * 16)
    throw PreconditionError("degenerate digit system: every expansion has the same value");
  return {d0 / (q0 - 1), scale};
}

}  // namespace univoque
