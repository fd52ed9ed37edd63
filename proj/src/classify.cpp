#include "univoque/classify.hpp"

#include <algorithm>

namespace univoque {

const char* to_string(Label l) {
  switch (l) {
    case Label::Trivial: return "Trivial";
    case Label::CountableNontrivial: return "CountableNontrivial";
    case Label::UncountableZeroEntropy: return "UncountableZeroEntropy";
    case Label::PositiveEntropy: return "PositiveEntropy";
    case Label::Undecided: return "Undecided";
  }
  return "?";
}

const char* to_string(SigmaLabel l) {
  switch (l) {
    case SigmaLabel::Empty: return "Empty";
    case SigmaLabel::Countable: return "Countable";
    case SigmaLabel::UncountableZeroEntropy: return "UncountableZeroEntropy";
    case SigmaLabel::PositiveEntropy: return "PositiveEntropy";
    case SigmaLabel::Undecided: return "Undecided";
  }
  return "?";
}

std::size_t DigitRun::certain_prefix() const {
  const auto it = std::find(boundary.begin(), boundary.end(), true);
  return static_cast<std::size_t>(it - boundary.begin());
}

namespace detail {

namespace {
std::recursive_mutex& mpfr_mutex() {
  static std::recursive_mutex m;
  return m;
}

unsigned digits_for(const Mpfr& q0, const Mpfr& q1, std::size_t n) {
  const double qmax = std::max(q0.convert_to<double>(), q1.convert_to<double>());
  return static_cast<unsigned>(static_cast<double>(n) * std::log10(std::max(qmax, 2.0))) + 50;
}
}  // namespace

MpfrScope::MpfrScope(unsigned digits10)
    : lock_(mpfr_mutex()), saved_(Mpfr::default_precision()) {
  Mpfr::default_precision(digits10);
}

MpfrScope::~MpfrScope() { Mpfr::default_precision(saved_); }

DigitRun greedy_digits(const std::string& q0s, const std::string& q1s, std::size_t n) {
  if (n == 0) return {};
  unsigned digits;
  {
    MpfrScope probe(40);
    digits = digits_for(Mpfr(q0s), Mpfr(q1s), n);
  }
  MpfrScope scope(digits);
  const Mpfr q0(q0s), q1(q1s);
  const Mpfr tol = pow(Mpfr(10), -static_cast<int>(digits / 2));
  // the first digit is 0 by definition: 1/q1 sits exactly on the switch
  DigitRun rest = quasi_greedy(q0, q1, Mpfr(q0 / q1), n - 1, tol);
  DigitRun run;
  run.digits = "0" + rest.digits;
  run.boundary.push_back(false);
  run.boundary.insert(run.boundary.end(), rest.boundary.begin(), rest.boundary.end());
  return run;
}

DigitRun lazy_digits(const std::string& q0s, const std::string& q1s, std::size_t n) {
  // b_{q0,q1} = reflect(a_{q1,q0})
  DigitRun run = greedy_digits(q1s, q0s, n);
  for (char& c : run.digits) c = c == '0' ? '1' : '0';
  return run;
}

}  // namespace detail

WordStream certain_stream(const DigitRun& run) {
  return WordStream::of_prefix(run.digits.substr(0, run.certain_prefix()));
}

Bound Bound::exact(Word w) {
  Bound b;
  b.word = std::move(w);
  return b;
}

Bound Bound::limit(DirectiveSequence d, char seed) {
  Bound b;
  auto lw = limit_word(d, seed);
  if (lw.exact) b.word = *lw.exact;
  b.stream = lw.stream;
  b.directive = std::move(d);
  b.seed = seed;
  return b;
}

Bound Bound::from_stream(WordStream s) {
  Bound b;
  b.stream = std::move(s);
  return b;
}

char Bound::first_letter() const {
  if (word) return word->at(0);
  const std::string p = stream->prefix(1);
  return p.empty() ? '\0' : p[0];
}

DirectiveSequence Bound::directive_image(std::size_t max_depth) const {
  // s(d(seed̄)) = d once d is in the s-map's normal form
  if (directive) return normalized_for_seed(*directive, seed);
  if (word) return s_map(*word, max_depth);
  return s_map(*stream, max_depth);
}

std::size_t splitting_index(const DirectiveSequence& sa, const DirectiveSequence& sb) {
  for (std::size_t i = 0;; ++i) {
    const char x = sa.at(i), y = sb.at(i);
    if (x == '\0' || y == '\0' || x != y || x == 'M') return i;
    if (i > sa.head.size() + sb.head.size() + sa.block.size() * sb.block.size() + 4)
      return i;  // equal {L,R} tails forever
  }
}

Classification classify_omega(const Bound& a, const Bound& b, std::size_t max_depth) {
  if (a.first_letter() != '0') throw PreconditionError("a must start with 0");
  if (b.first_letter() != '1') throw PreconditionError("b must start with 1");

  const DirectiveSequence sa = a.directive_image(max_depth);
  const DirectiveSequence sb = b.directive_image(max_depth);
  const std::string trace = "s(a)=" + sa.str() + " s(b)=" + sb.str();

  switch (compare(sa, sb)) {
    case Cmp::Greater:
      return {Label::PositiveEntropy, splitting_index(sa, sb), trace};
    case Cmp::Equal:
      if (is_primitive(sa).value_or(false))
        return {Label::UncountableZeroEntropy, sa.head.size(), trace};
      return {Label::CountableNontrivial, sa.head.size(), trace};
    case Cmp::Less: {
      // Below the first letter where the sequences split or share an M,
      // both lie in the same {L,R} branch. Sharing an M means a ≥ σM(0̄) and
      // b ≤ σM(1̄) for that prefix σ; splitting with s(a) < s(b) means
      // a < τ(0̄), b ≥ τ(10̄) or a ≤ τ(01̄), b > τ(1̄) for the node τ there.
      const std::size_t k = splitting_index(sa, sb);
      if (sa.at(k) == 'M' && sb.at(k) == 'M')
        return {Label::CountableNontrivial, k, trace};
      return {Label::Trivial, k, trace};
    }
    case Cmp::Undecided:
      break;
  }
  const std::size_t depth = std::min(sa.head.size(), sb.head.size());
  // an M shared before the descent stopped already rules out triviality,
  // but countable versus positive entropy stays open
  return {Label::Undecided, depth, trace};
}

Classification classify_omega(const Word& a, const Word& b, std::size_t max_depth) {
  return classify_omega(Bound::exact(a), Bound::exact(b), max_depth);
}

SigmaLabel classify_sigma(const Word& a, const Word& b, std::size_t max_depth) {
  const Word zero_b("0" + b.preperiod(), b.period());
  const Word one_a("1" + a.preperiod(), a.period());
  switch (classify_omega(zero_b, one_a, max_depth).label) {
    case Label::Trivial: return SigmaLabel::Empty;
    case Label::CountableNontrivial: return SigmaLabel::Countable;
    case Label::UncountableZeroEntropy: return SigmaLabel::UncountableZeroEntropy;
    case Label::PositiveEntropy: return SigmaLabel::PositiveEntropy;
    case Label::Undecided: return SigmaLabel::Undecided;
  }
  return SigmaLabel::Undecided;
}

}  // namespace univoque
