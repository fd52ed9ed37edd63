#include "univoque/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "univoque/classify.hpp"
#include "univoque/critical.hpp"
#include "univoque/eval.hpp"
#include "univoque/spectral.hpp"
#include "univoque/substitution.hpp"

namespace univoque::cli {

namespace {

struct Config {
  unsigned precision = 33;
  std::string tol;  // empty: derived from precision
  std::size_t max_depth = kDefaultMaxDepth;
  std::string output;
};

// Raw option text; numbers are parsed once the working type is known.
struct Options {
  std::string q0, q1, u, v, a, b, x, r0, r1, d0, d1;
  std::string mode = "quasi-greedy";
  std::string word, directive, what = "both", from, to;
  std::size_t digits = 64, length = 64, samples = 101, blocks = 0;
  std::size_t directive_depth = kDefaultMaxDepth;
  char seed = '0';
  bool dump = false;
  unsigned threads = 0;
};

struct Undecided {};

bool is_directive_text(const std::string& s) {
  return s.find_first_of("LMR") != std::string::npos;
}

template <class Real>
Real parse_real(const std::string& s) {
  // validate the syntax with strtod; the value itself is read in Real
  const char* begin = s.c_str();
  char* end = nullptr;
  std::strtod(begin, &end);
  if (s.empty() || end != begin + s.size()) throw ParseError("not a number: '" + s + "'");
  if constexpr (std::is_same_v<Real, double>) return std::strtod(begin, nullptr);
  else return Real(s);
}

template <class Real>
std::string show(const Bracket<Real>& b, int digits) {
  return "[" + format_real(b.lo, digits) + ", " + format_real(b.hi, digits) + "]";
}

template <class Real>
void print_critical(std::ostream& out, const CriticalResult<Real>& r, int digits) {
  out << show(r.value, digits) << " node=" << r.node << " case=" << to_string(r.kind);
  if (r.formula) out << " formula=" << r.formula->str();
  out << " witness=" << format_real(r.witness, std::min(digits, 17)) << '\n';
}

Bound bound_from_text(const std::string& text, char seed) {
  if (is_directive_text(text)) return Bound::limit(parse_directive(text), seed);
  return Bound::exact(parse_word(text));
}

template <class Real>
int execute(const std::string& cmd, const Options& o, const Config& cfg, std::ostream& out) {
  const int digits = static_cast<int>(cfg.precision);
  const Real tol = cfg.tol.empty() ? Real(pow(Real(10), -static_cast<int>(cfg.precision * 2 / 3)))
                                   : parse_real<Real>(cfg.tol);
  if (!(tol > 0)) throw PreconditionError("tol must be positive");
  DescentOptions opt;
  opt.max_depth = cfg.max_depth;

  if (cmd == "gr") {
    print_critical(out, generalized_golden_ratio(parse_real<Real>(o.q0), tol, opt), digits);
  } else if (cmd == "kl") {
    print_critical(out, komornik_loreti(parse_real<Real>(o.q0), tol, opt), digits);
  } else if (cmd == "mu") {
    out << show(crossing(parse_word(o.u), parse_word(o.v), tol), digits) << '\n';
  } else if (cmd == "classify-omega") {
    const auto c = classify_omega(bound_from_text(o.a, '0'), bound_from_text(o.b, '1'), cfg.max_depth);
    out << to_string(c.label) << " depth=" << c.depth << ' ' << c.detail << '\n';
    if (c.label == Label::Undecided) throw Undecided{};
  } else if (cmd == "classify-u") {
    const auto c = classify_univoque(parse_real<Real>(o.q0), parse_real<Real>(o.q1), tol, cfg.max_depth);
    out << to_string(c.label) << " depth=" << c.depth << ' ' << c.detail << '\n';
    if (c.label == Label::Undecided) throw Undecided{};
  } else if (cmd == "expand") {
    const Real q0 = parse_real<Real>(o.q0), q1 = parse_real<Real>(o.q1);
    DigitRun run;
    const bool greedy = o.mode == "quasi-greedy";
    if (!greedy && o.mode != "quasi-lazy") throw ParseError("mode must be quasi-greedy or quasi-lazy");
    if (o.x.empty()) {
      run = greedy ? detail::greedy_digits(o.q0, o.q1, o.digits) : detail::lazy_digits(o.q0, o.q1, o.digits);
    } else {
      const Real x = parse_real<Real>(o.x);
      run = greedy ? quasi_greedy(q0, q1, x, o.digits, tol) : quasi_lazy(q0, q1, x, o.digits, tol);
    }
    out << run.digits << '\n' << "certain=" << run.certain_prefix() << '\n';
  } else if (cmd == "smap") {
    out << s_map(parse_word(o.word), o.directive_depth).str() << '\n';
  } else if (cmd == "limit-word") {
    out << limit_prefix(parse_directive(o.directive), o.seed, o.length) << '\n';
  } else if (cmd == "entropy") {
    const auto m = build_automaton(parse_word(o.a), parse_word(o.b));
    out << "entropy=" << format_real(entropy(m), 17) << " states=" << m.size() << '\n';
    for (std::size_t n = 1; n <= o.blocks; ++n) out << "A_" << n << '=' << path_count(m, n) << '\n';
    if (o.dump) out << m.dump();
  } else if (cmd == "dim") {
    if (!o.r0.empty() || !o.r1.empty()) {
      if (o.r0.empty() || o.r1.empty()) throw PreconditionError("give both --r0 and --r1");
      out << format_real(ifs_dimension(std::stod(o.r0), std::stod(o.r1)), 15) << '\n';
    } else {
      const auto w = univoque_dimension_witness(parse_real<Real>(o.q0), parse_real<Real>(o.q1));
      out << format_real(w.dimension, 15) << " node=" << w.node << " k=" << w.k << " words=" << w.word0
          << ',' << w.word1 << '\n';
    }
  } else if (cmd == "curve") {
    CurveKind which;
    if (o.what == "gr") which = CurveKind::G;
    else if (o.what == "kl") which = CurveKind::K;
    else if (o.what == "both") which = CurveKind::Both;
    else throw ParseError("--what must be gr, kl or both");
    const double ctol = cfg.tol.empty() ? 1e-12 : std::stod(cfg.tol);
    const auto rows = sample_curve(parse_real<double>(o.from), parse_real<double>(o.to), o.samples, which,
                                   ctol, cfg.max_depth, o.threads);
    if (cfg.output.empty() || cfg.output == "-") {
      write_curve_csv(out, rows);
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw PreconditionError("cannot write " + cfg.output);
      write_curve_csv(file, rows);
    }
  } else if (cmd == "reduce") {
    const auto r = reduce_system(parse_real<Real>(o.d0), parse_real<Real>(o.q0), parse_real<Real>(o.d1),
                                 parse_real<Real>(o.q1));
    out << "offset=" << format_real(r.offset, digits) << " scale=" << format_real(r.scale, digits) << '\n';
  } else {
    throw ParseError("unknown subcommand " + cmd);
  }
  return kOk;
}

unsigned default_precision() {
  if (const char* env = std::getenv(kPrecisionEnv)) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw ParseError(std::string(kPrecisionEnv) + " is not a digit count");
    }
  }
  return 33;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical bases and univoque sets for two-base expansions", "univoque"};
  app.require_subcommand(1);
  Config cfg;
  Options o;
  try {
    cfg.precision = default_precision();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  app.add_option("--precision", cfg.precision, "decimal digits (env " + std::string(kPrecisionEnv) + ")")
      ->check(CLI::Range(15u, 100000u));
  app.add_option("--tol", cfg.tol, "bracket tolerance");
  app.add_option("--max-depth", cfg.max_depth, "directive letters before giving up")
      ->check(CLI::PositiveNumber);

  auto* gr = app.add_subcommand("gr", "generalized golden ratio G(q0)");
  gr->add_option("q0", o.q0)->required();
  auto* kl = app.add_subcommand("kl", "generalized Komornik-Loreti constant K(q0)");
  kl->add_option("q0", o.q0)->required();
  auto* mu = app.add_subcommand("mu", "crossing point of g_u and g~_v");
  mu->add_option("--u", o.u)->required();
  mu->add_option("--v", o.v)->required();
  auto* com = app.add_subcommand("classify-omega", "size of Omega_{a,b} (words or directives)");
  com->add_option("--a", o.a)->required();
  com->add_option("--b", o.b)->required();
  auto* cu = app.add_subcommand("classify-u", "size of U_{q0,q1}");
  cu->add_option("--q0", o.q0)->required();
  cu->add_option("--q1", o.q1)->required();
  auto* ex = app.add_subcommand("expand", "quasi-greedy or quasi-lazy digits");
  ex->add_option("--q0", o.q0)->required();
  ex->add_option("--q1", o.q1)->required();
  ex->add_option("--mode", o.mode);
  ex->add_option("--digits", o.digits);
  ex->add_option("--x", o.x, "value to expand (default 1/q1, resp. 1/(q0(q1-1)))");
  auto* sm = app.add_subcommand("smap", "directive sequence of a word");
  sm->add_option("--word", o.word)->required();
  sm->add_option("--directive-depth", o.directive_depth);
  auto* lw = app.add_subcommand("limit-word", "prefix of a directive limit word");
  lw->add_option("--directive", o.directive)->required();
  lw->add_option("--length", o.length);
  lw->add_option("--seed", o.seed)->check(CLI::IsMember({'0', '1'}));
  auto* en = app.add_subcommand("entropy", "entropy of Omega_{a,b}");
  en->add_option("--a", o.a)->required();
  en->add_option("--b", o.b)->required();
  en->add_option("--blocks", o.blocks, "print A_1..A_n");
  en->add_flag("--dump", o.dump, "print the automaton");
  auto* dim = app.add_subcommand("dim", "dimension lower bound, or the two-map similarity dimension");
  dim->add_option("--q0", o.q0);
  dim->add_option("--q1", o.q1);
  dim->add_option("--r0", o.r0);
  dim->add_option("--r1", o.r1);
  auto* cv = app.add_subcommand("curve", "sample G and K on a grid as CSV");
  cv->add_option("--from", o.from)->required();
  cv->add_option("--to", o.to)->required();
  cv->add_option("--samples", o.samples);
  cv->add_option("--what", o.what);
  cv->add_option("--out", cfg.output);
  cv->add_option("--threads", o.threads);
  auto* rd = app.add_subcommand("reduce", "affine reduction of a {(d0,q0),(d1,q1)} system");
  for (auto [name, field] : {std::pair{"--d0", &o.d0}, {"--q0", &o.q0}, {"--d1", &o.d1}, {"--q1", &o.q1}})
    rd->add_option(name, *field)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cfg.precision <= 33) return execute<Quad>(cmd, o, cfg, out);
    detail::MpfrScope scope(cfg.precision);
    return execute<Mpfr>(cmd, o, cfg, out);
  } catch (const Undecided&) {
    return kUndecided;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace univoque::cli
