#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "univoque/classify.hpp"
#include "univoque/critical.hpp"
#include "univoque/word.hpp"

namespace univoque {

// Deterministic presentation of the prefixes of Ω_{a,b} (equivalently its
// factors, since Ω is shift invariant). Every state has an infinite future;
// next[s][c] < 0 means the letter is rejected.
struct SubshiftAutomaton {
  int initial = 0;
  std::vector<std::array<int, 2>> next;

  std::size_t size() const { return next.size(); }
  std::string dump() const;  // one line "state letter -> state" per edge
};

// States are sets of open comparisons: for each earlier 0 the position in a
// its suffix is still tied with, likewise for each earlier 1 and b.
// Positions past the preperiod wrap modulo the period.
SubshiftAutomaton build_automaton(const Word& a, const Word& b, bool validate = true);

// Number of words of length n readable from the initial state.
std::uint64_t path_count(const SubshiftAutomaton& m, std::size_t n);

// Natural log of the largest Perron root over strongly connected components.
double entropy(const SubshiftAutomaton& m, double tol = 1e-12);

// λ with r0^λ + r1^λ = 1.
double ifs_dimension(double r0, double r1, double tol = 1e-12);

// Entropy enclosure of Ω_{a,b} for a = a_{q0,q1}, b = b_{q0,q1} from their
// first n certain digits. Cutting a to a_n·0̄ and b to b_n·1̄ shrinks the set,
// cutting to a_n·1̄ and b_n·0̄ enlarges it. The run stops at the first
// uncertain digit.
struct EntropyBounds {
  double lower = 0;
  double upper = 0;
  std::size_t digits = 0;
};

EntropyBounds truncated_entropy_bounds(const DigitRun& a, const DigitRun& b, std::size_t n);

template <class Real>
EntropyBounds truncated_entropy_bounds(const Real& q0, const Real& q1, std::size_t n) {
  return truncated_entropy_bounds(greedy_word(q0, q1, n), lazy_word(q0, q1, n), n);
}

// Lower bound for dim π(U_{q0,q1}) from a two-map subsystem
// Y = {σ(0(01)^k), σ(0(01)^{k+1})}^∞ inside U (or the mirrored pair).
struct DimensionWitness {
  double dimension = 0;
  std::string node;  // σ
  std::size_t k = 0;
  std::string word0, word1;
  double r0 = 0, r1 = 0;
};

DimensionWitness dimension_witness(const DigitRun& a, const DigitRun& b, double q0, double q1,
                                   std::size_t max_depth = kDefaultMaxDepth);

template <class Real>
DimensionWitness univoque_dimension_witness(const Real& q0, const Real& q1,
                                            std::size_t digits = 512) {
  if (!(q0 > 1) || !(q1 > 1)) throw PreconditionError("bases must exceed 1");
  const double d0 = to_double(q0), d1 = to_double(q1);
  if (!is_regular(q0, q1)) {
    // U is the full shift and the two maps do not overlap
    DimensionWitness w;
    w.r0 = 1 / d0;
    w.r1 = 1 / d1;
    w.word0 = "0";
    w.word1 = "1";
    w.dimension = ifs_dimension(w.r0, w.r1);
    return w;
  }
  const auto kl = komornik_loreti(q0);
  if (!(q1 > kl.value.hi))
    throw PreconditionError("q1 must exceed the Komornik-Loreti value " + format_real(kl.value.hi, 17));
  return dimension_witness(greedy_word(q0, q1, digits), lazy_word(q0, q1, digits), d0, d1);
}

template <class Real>
double univoque_dimension_lower_bound(const Real& q0, const Real& q1) {
  return univoque_dimension_witness(q0, q1).dimension;
}

}  // namespace univoque
