#pragma once

#include <cmath>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "univoque/eval.hpp"
#include "univoque/real.hpp"
#include "univoque/substitution.hpp"
#include "univoque/word.hpp"

namespace univoque {

enum class Label { Trivial, CountableNontrivial, UncountableZeroEntropy, PositiveEntropy, Undecided };

const char* to_string(Label l);

struct Classification {
  Label label = Label::Undecided;
  std::size_t depth = 0;  // directive letters examined
  std::string detail;
};

// Digits of an expansion with a per-digit certainty mark: boundary[i] is set
// when the orbit sat within tolerance of the switching point at step i.
struct DigitRun {
  std::string digits;
  std::vector<bool> boundary;

  // number of leading digits that are certain
  std::size_t certain_prefix() const;
};

// Quasi-greedy (q0,q1)-expansion of x: emit 1 iff q1·x − 1 > tol.
template <class Real>
DigitRun quasi_greedy(const Real& q0, const Real& q1, Real x, std::size_t n, const Real& tol) {
  if (!(q0 > 1) || !(q1 > 1)) throw PreconditionError("bases must exceed 1");
  if (!is_regular(q0, q1)) throw PreconditionError("quasi-greedy expansion needs q0 + q1 >= q0 q1");
  if (x < 0 || x > 1 / (q1 - 1)) throw PreconditionError("x outside [0, 1/(q1-1)]");
  using std::abs;
  DigitRun run;
  run.digits.reserve(n);
  run.boundary.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Real t = q1 * x - 1;
    run.boundary.push_back(abs(t) <= tol);
    if (t > tol) {
      run.digits.push_back('1');
      x = t;
    } else {
      run.digits.push_back('0');
      x *= q0;
    }
  }
  return run;
}

// Quasi-lazy expansion as the reflection of a quasi-greedy one in the
// swapped bases: (q1−1)π_{q0,q1}(u) + (q0−1)π_{q1,q0}(reflect u) = 1.
template <class Real>
DigitRun quasi_lazy(const Real& q0, const Real& q1, const Real& x, std::size_t n, const Real& tol) {
  if (!(q0 > 1) || !(q1 > 1)) throw PreconditionError("bases must exceed 1");
  const Real mirrored = (1 - (q1 - 1) * x) / (q0 - 1);
  DigitRun run = quasi_greedy(q1, q0, mirrored, n, tol);
  for (char& c : run.digits) c = c == '0' ? '1' : '0';
  return run;
}

namespace detail {

// The mpfr default precision is process-wide, so high-precision digit runs
// take a lock while they change it.
class MpfrScope {
 public:
  explicit MpfrScope(unsigned digits10);
  ~MpfrScope();
  MpfrScope(const MpfrScope&) = delete;
  MpfrScope& operator=(const MpfrScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

// a_{q0,q1} and b_{q0,q1} from decimal base strings; precision grows with n
// because the orbit error grows like max(q0,q1)^n.
DigitRun greedy_digits(const std::string& q0, const std::string& q1, std::size_t n);
DigitRun lazy_digits(const std::string& q0, const std::string& q1, std::size_t n);

}  // namespace detail

// a_{q0,q1}: the quasi-greedy expansion of 1/q1 (starts 01).
template <class Real>
DigitRun greedy_word(const Real& q0, const Real& q1, std::size_t n) {
  return detail::greedy_digits(format_real(q0, 40), format_real(q1, 40), n);
}

// b_{q0,q1}: the quasi-lazy expansion of 1/(q0(q1−1)) (starts 10).
template <class Real>
DigitRun lazy_word(const Real& q0, const Real& q1, std::size_t n) {
  return detail::lazy_digits(format_real(q0, 40), format_real(q1, 40), n);
}

// Stream over the certain digits of a run; comparisons past them are undecided.
WordStream certain_stream(const DigitRun& run);

// A bound of Ω_{a,b}: an exact word, the limit word of a directive
// sequence, or an arbitrary stream.
struct Bound {
  std::optional<Word> word;
  std::optional<DirectiveSequence> directive;
  char seed = '0';
  std::optional<WordStream> stream;

  static Bound exact(Word w);
  static Bound limit(DirectiveSequence d, char seed);
  static Bound from_stream(WordStream s);

  char first_letter() const;
  DirectiveSequence directive_image(std::size_t max_depth) const;  // s of the bound
};

// Ω_{a,b}: sequences all of whose suffixes are ≤ a or ≥ b.
Classification classify_omega(const Bound& a, const Bound& b,
                              std::size_t max_depth = kDefaultMaxDepth);
Classification classify_omega(const Word& a, const Word& b,
                              std::size_t max_depth = kDefaultMaxDepth);

enum class SigmaLabel { Empty, Countable, UncountableZeroEntropy, PositiveEntropy, Undecided };

const char* to_string(SigmaLabel l);

// Σ_{a,b}: sequences all of whose suffixes lie in [a, b].
SigmaLabel classify_sigma(const Word& a, const Word& b, std::size_t max_depth = kDefaultMaxDepth);

// Position of the first letter where s(a) and s(b) differ, or where both
// carry M; the classification hinges on this letter.
std::size_t splitting_index(const DirectiveSequence& sa, const DirectiveSequence& sb);

}  // namespace univoque
