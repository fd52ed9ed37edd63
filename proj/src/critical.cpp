#include "univoque/critical.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace univoque {

const char* to_string(CriticalCase c) {
  switch (c) {
    case CriticalCase::LeftFormula: return "LeftFormula";
    case CriticalCase::RightFormula: return "RightFormula";
    case CriticalCase::PrimitiveLimit: return "PrimitiveLimit";
    case CriticalCase::DepthExhausted: return "DepthExhausted";
  }
  return "?";
}

CriticalCase parse_critical_case(const std::string& s) {
  for (auto c : {CriticalCase::LeftFormula, CriticalCase::RightFormula,
                 CriticalCase::PrimitiveLimit, CriticalCase::DepthExhausted})
    if (s == to_string(c)) return c;
  throw ParseError("unknown case " + s);
}

std::string CrossCheck::common_prefix() const {
  std::string p;
  for (std::size_t i = 0;; ++i) {
    const char x = sa.at(i), y = sb.at(i);
    if (x == '\0' || x != y || i > sa.head.size() + sb.head.size()) return p;
    p += x;
  }
}

CrossCheck ks_crosscheck(const std::string& q0, const std::string& q1, std::size_t n,
                         std::size_t max_depth) {
  const DigitRun a = detail::greedy_digits(q0, q1, n);
  const DigitRun b = detail::lazy_digits(q0, q1, n);
  CrossCheck r;
  r.sa = s_map(certain_stream(a), max_depth);
  r.sb = s_map(certain_stream(b), max_depth);
  r.digits_used = n;
  r.boundary_hit = a.certain_prefix() < n || b.certain_prefix() < n;
  r.order = compare(r.sa, r.sb);
  // no split within the known letters: equal to the available depth,
  // unless a boundary digit cut the run short
  if (r.order == Cmp::Undecided && !r.boundary_hit) r.order = Cmp::Equal;
  return r;
}

std::vector<CurveRow> sample_curve(double lo, double hi, std::size_t n, CurveKind which, double tol,
                                   std::size_t max_depth, unsigned threads) {
  if (!(lo > 1) || !(hi > lo)) throw PreconditionError("need 1 < from < to");
  if (n < 2) throw PreconditionError("need at least two samples");

  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);

  const std::size_t per_point = which == CurveKind::Both ? 2 : 1;
  std::vector<CurveRow> rows(n * per_point);
  NodeCache g_cache, k_cache;

  auto work = [&](std::size_t i) {
    const double q0 = grid[i];
    std::size_t slot = i * per_point;
    auto put = [&](char tag, const CriticalResult<double>& r) {
      rows[slot++] = {q0, tag, r.value.lo, r.value.hi, r.node, r.kind};
    };
    if (which != CurveKind::K) {
      DescentOptions opt{max_depth, &g_cache};
      put('G', generalized_golden_ratio(q0, tol, opt));
    }
    if (which != CurveKind::G) {
      DescentOptions opt{max_depth, &k_cache};
      put('K', komornik_loreti(q0, tol, opt));
    }
  };

  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<std::size_t>(t, n));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return rows;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(t);
  for (unsigned k = 0; k < t; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (std::size_t i = k; i < n; i += t) work(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError("bad number " + s);
  return x;
}

}  // namespace

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "q0,which,value_lo,value_hi,node,case\n";
  for (const auto& r : rows)
    os << shortest(r.q0) << ',' << r.which << ',' << shortest(r.lo) << ',' << shortest(r.hi) << ','
       << r.node << ',' << to_string(r.kind) << '\n';
}

std::vector<CurveRow> read_curve_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "q0,which,value_lo,value_hi,node,case")
    throw ParseError("missing curve CSV header");
  std::vector<CurveRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6) throw ParseError("curve CSV row needs 6 fields: " + line);
    if (f[1].size() != 1) throw ParseError("bad curve tag " + f[1]);
    rows.push_back({parse_double(f[0]), f[1][0], parse_double(f[2]), parse_double(f[3]), f[4],
                    parse_critical_case(f[5])});
  }
  return rows;
}

}  // namespace univoque
