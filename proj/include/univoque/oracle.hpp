#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "univoque/eval.hpp"
#include "univoque/word.hpp"

namespace univoque::oracle {

inline constexpr std::size_t kMaxBlockLength = 22;

// Number of length-n words that extend to an element of Ω_{a,b}: every
// word is checked letter by letter against each open suffix comparison, then
// a depth-first continuation of bounded length must survive.
std::uint64_t block_count(const Word& a, const Word& b, std::size_t n);

// A_1..A_n in one pass; entry k-1 holds A_k.
std::vector<std::uint64_t> block_counts(const Word& a, const Word& b, std::size_t n);

// Largest late/early log-increment quotient still read as polynomial.
inline constexpr double kGrowthSlowdown = 0.84;

enum class Growth { TrivialLike, SubexponentialLike, ExponentialLike };

const char* to_string(Growth g);

// Growth shape of A_n up to N. Polynomial counts have log-increments that
// shrink like 1/n, exponential ones keep a constant positive increment.
Growth brute_classify(const Word& a, const Word& b, std::size_t N = 18);
Growth growth_of(const std::vector<std::uint64_t>& counts);

enum class Membership { In, Out, Boundary };

const char* to_string(Membership m);

// Hole test on the shifts of u: u is univoque iff no π(shift^k u) lands in
// [1/q1, 1/(q0(q1−1))]. Shifts past the span repeat earlier ones.
template <class Real>
Membership verify_membership(const Real& q0, const Real& q1, const Word& u, std::size_t n,
                             const Real& tol) {
  if (!(q0 > 1) || !(q1 > 1)) throw PreconditionError("bases must exceed 1");
  if (!is_regular(q0, q1)) throw PreconditionError("membership test needs a regular pair");
  using std::abs;
  const Real lo = 1 / q1, hi = 1 / (q0 * (q1 - 1));
  bool boundary = false;
  const std::size_t last = std::min(n, u.span());
  for (std::size_t k = 0; k <= last; ++k) {
    const Real x = project(shift(u, k), q0, q1);
    if (abs(x - lo) <= tol || abs(x - hi) <= tol) boundary = true;
    else if (lo < x && x < hi) return Membership::Out;
  }
  return boundary ? Membership::Boundary : Membership::In;
}

}  // namespace univoque::oracle
