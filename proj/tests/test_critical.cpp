#include <doctest.h>

#include <sstream>

#include "univoque/critical.hpp"

using namespace univoque;

namespace {

const Quad kTol("1e-20");
const Quad kPhi = (1 + sqrt(Quad(5))) / 2;

bool near(const Quad& x, const Quad& y, const Quad& eps = Quad("1e-15")) { return abs(x - y) <= eps; }

}  // namespace

TEST_CASE("generalized golden ratio examples") {
  auto g = generalized_golden_ratio(Quad("1.55"), kTol);
  CHECK(near(g.value.mid(), 1 / Quad("0.55")));
  CHECK(g.node == "");
  CHECK(g.kind == CriticalCase::LeftFormula);
  REQUIRE(g.formula.has_value());
  CHECK(*g.formula == parse_word("(01)"));

  g = generalized_golden_ratio(Quad("1.75"), kTol);
  CHECK(near(g.value.mid(), Quad("2.75") / Quad("1.75")));
  CHECK(g.kind == CriticalCase::RightFormula);
  CHECK(*g.formula == parse_word("(10)"));

  CHECK(near(generalized_golden_ratio(kPhi, kTol).value.mid(), kPhi));
  CHECK_THROWS_AS(generalized_golden_ratio(Quad(1), kTol), PreconditionError);
}

TEST_CASE("Komornik-Loreti examples") {
  auto k = komornik_loreti(Quad("1.5"), kTol);
  CHECK(near(k.value.mid(), Quad(2)));
  CHECK(k.node == "");
  CHECK(k.kind == CriticalCase::LeftFormula);
  CHECK(*k.formula == parse_word("10(01)"));

  k = komornik_loreti(Quad("1.9"), kTol);
  CHECK(near(k.value.mid(), Quad("2.8") / (Quad("1.9") * Quad("0.9"))));
  CHECK(k.kind == CriticalCase::RightFormula);
  CHECK(*k.formula == parse_word("01(10)"));
  CHECK_THROWS_AS(komornik_loreti(Quad("0.5"), kTol), PreconditionError);
}

TEST_CASE("Komornik-Loreti constant sits on the Thue-Morse limit") {
  // q_KL is the root of Σ t_i q^{-i} = 1 with t the Thue-Morse word shifted by one
  Quad lo("1.7"), hi("1.9");
  auto f = [](const Quad& q) {
    Quad s = 0, w = 1;
    for (unsigned i = 1; i < 400; ++i) {
      w /= q;
      if (__builtin_popcount(i) % 2) s += w;
    }
    return s - 1;
  };
  for (int i = 0; i < 120; ++i) {
    const Quad m = (lo + hi) / 2;
    (f(m) > 0 ? lo : hi) = m;
  }
  const Quad q_kl = (lo + hi) / 2;
  const auto k = komornik_loreti(q_kl, kTol);
  CHECK(near(k.value.mid(), q_kl, Quad("1e-12")));
  // nodes on the M-branch pinch to q_KL faster than the tolerance, so the descent stops on a deep M-node
  CHECK(k.node.size() >= 4);
  CHECK(k.node.find_first_not_of('M') == std::string::npos);
}

TEST_CASE("results respect the value range") {
  for (double q = 1.05; q < 4; q += 0.137) {
    const Quad q0(q);
    for (const auto& r : {generalized_golden_ratio(q0, kTol), komornik_loreti(q0, kTol)}) {
      CHECK(r.value.lo > 1);
      CHECK(r.value.hi < q0 / (q0 - 1) + kTol);
    }
  }
}

TEST_CASE("involution, inequality chain and monotonicity on a grid") {
  Quad prev_g = 100, prev_k = 100;
  for (int i = 0; i < 40; ++i) {
    const Quad q = Quad("1.1") + Quad("1.9") * i / 39;
    const auto g = generalized_golden_ratio(q, kTol), k = komornik_loreti(q, kTol);
    const Quad gv = g.value.mid(), kv = k.value.mid();
    CHECK(near(generalized_golden_ratio(gv, kTol).value.mid(), q, Quad("1e-8")));
    CHECK(near(komornik_loreti(kv, kTol).value.mid(), q, Quad("1e-8")));
    const Quad pg = (q - 1) * (gv - 1), pk = (q - 1) * (kv - 1);
    const Quad eps("1e-15");
    CHECK(std::max(1 / (q + 1), 1 / (gv + 1)) <= pg + eps);
    CHECK(pg <= Quad("0.5") + eps);
    CHECK(Quad("0.5") <= pk + eps);
    CHECK(pk < std::min(q / (q + 1), kv / (kv + 1)));
    CHECK(gv <= kv + eps);
    CHECK(gv < prev_g);
    CHECK(kv < prev_k);
    prev_g = gv;
    prev_k = kv;
  }
}

TEST_CASE("coincidence of G and K") {
  for (const Quad& q : {Quad("1.5"), Quad(2)}) {
    CHECK(near((q - 1) * (generalized_golden_ratio(q, kTol).value.mid() - 1), Quad("0.5"), Quad("1e-9")));
    CHECK(near((q - 1) * (komornik_loreti(q, kTol).value.mid() - 1), Quad("0.5"), Quad("1e-9")));
  }
  // at φ the G-product meets 1/(q0+1) instead (φ² = φ + 1)
  const Quad pg = (kPhi - 1) * (generalized_golden_ratio(kPhi, kTol).value.mid() - 1);
  CHECK(near(pg, 1 / (kPhi + 1)));
  const Quad q("1.7");
  CHECK(Quad("0.5") - (q - 1) * (generalized_golden_ratio(q, kTol).value.mid() - 1) > Quad("1e-3"));
  CHECK((q - 1) * (komornik_loreti(q, kTol).value.mid() - 1) - Quad("0.5") > Quad("1e-3"));
}

TEST_CASE("s-map cross-check") {
  CHECK(ks_crosscheck(Quad("1.9"), Quad("1.70"), 200).order == Cmp::Greater);
  CHECK(ks_crosscheck(Quad("1.9"), Quad("1.55"), 200).order == Cmp::Less);
  const auto at = ks_crosscheck(Quad(2), Quad("1.5"), 200);
  CHECK((at.order == Cmp::Equal || at.order == Cmp::Undecided));
}

TEST_CASE("node of K matches the common s-map prefix of the expansion words") {
  for (const char* text : {"1.62", "1.7", "1.75", "1.76", "1.83", "1.95"}) {
    const Quad q0(text);
    const auto k = komornik_loreti(q0, kTol);
    if (k.kind != CriticalCase::LeftFormula && k.kind != CriticalCase::RightFormula) continue;
    const auto check = ks_crosscheck(q0, k.value.mid(), 400);
    INFO(text << " node " << k.node << " common " << check.common_prefix());
    CHECK(check.common_prefix().substr(0, k.node.size()) == k.node);
  }
}

TEST_CASE("curve sampling") {
  const auto g = sample_curve(1.5, 2.0, 3, CurveKind::G);
  REQUIRE(g.size() == 3);
  CHECK(g[0].lo == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(g[1].lo == doctest::Approx(11.0 / 7).epsilon(1e-10));
  CHECK(g[2].lo == doctest::Approx(1.5).epsilon(1e-10));

  const auto k = sample_curve(1.5, 2.0, 3, CurveKind::K);
  CHECK(k[1].lo > g[1].hi);
  CHECK(k[1].hi < 1.75 / 0.75);

  const auto two = sample_curve(1.2, 3.0, 2, CurveKind::Both);
  REQUIRE(two.size() == 4);
  CHECK(two[0].lo > two[2].hi);
  CHECK(two[1].lo > two[3].hi);
  CHECK_THROWS_AS(sample_curve(2.0, 1.5, 3, CurveKind::G), PreconditionError);
}

TEST_CASE("curve CSV round trip is exact") {
  const auto rows = sample_curve(1.1, 3.0, 25, CurveKind::Both, 1e-12, kDefaultMaxDepth, 4);
  std::stringstream ss;
  write_curve_csv(ss, rows);
  CHECK(ss.str().rfind("q0,which,value_lo,value_hi,node,case\n", 0) == 0);
  CHECK(read_curve_csv(ss) == rows);
  std::stringstream bad("q0,which\n");
  CHECK_THROWS_AS(read_curve_csv(bad), ParseError);
}

TEST_CASE("critical cases round trip through text") {
  for (auto c : {CriticalCase::LeftFormula, CriticalCase::RightFormula, CriticalCase::PrimitiveLimit,
                 CriticalCase::DepthExhausted})
    CHECK(parse_critical_case(to_string(c)) == c);
}
