#include <doctest.h>

#include <random>

#include "univoque/word.hpp"

using namespace univoque;

namespace {

std::string expand(const Word& w, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += w.at(i);
  return s;
}

Word random_word(std::mt19937& rng, std::size_t max_pre, std::size_t max_per) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre), per_len(1, max_per);
  std::bernoulli_distribution bit;
  std::string pre, per;
  for (std::size_t i = pre_len(rng); i > 0; --i) pre += bit(rng) ? '1' : '0';
  for (std::size_t i = per_len(rng); i > 0; --i) per += bit(rng) ? '1' : '0';
  return Word(pre, per);
}

}  // namespace

TEST_CASE("parse_word canonicalizes") {
  auto w = parse_word("(01)");
  CHECK(w.preperiod() == "");
  CHECK(w.period() == "01");

  w = parse_word("0(10)");
  CHECK(w.preperiod() == "");
  CHECK(w.period() == "01");

  w = parse_word("01(1)");
  CHECK(w.preperiod() == "0");
  CHECK(w.period() == "1");

  CHECK(parse_word("(0101)") == parse_word("(01)"));
  CHECK(parse_word("1(11)").str() == "(1)");
}

TEST_CASE("parse_word rejects malformed text") {
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("01"), ParseError);
  CHECK_THROWS_AS(parse_word("0()"), ParseError);
  CHECK_THROWS_AS(parse_word("(012)"), ParseError);
  CHECK_THROWS_AS(parse_word("(01"), ParseError);
}

TEST_CASE("lexicographic comparison") {
  CHECK(parse_word("01(10)") > parse_word("(01)"));
  CHECK(parse_word("(0)") < parse_word("01(0)"));
  CHECK(parse_word("(10)") > parse_word("10(01)"));
  CHECK(parse_word("(01)") == parse_word("0(10)"));
}

TEST_CASE("extremal suffixes") {
  CHECK(sup0(parse_word("(01)")) == parse_word("(01)"));
  CHECK(inf1(parse_word("(10)")) == parse_word("(10)"));
  CHECK(sup0(parse_word("1(10)")) == parse_word("(01)"));
  CHECK(sup0(parse_word("0010(1)")) == parse_word("0(1)"));
  CHECK_THROWS_AS(sup0(parse_word("(1)")), PreconditionError);
}

TEST_CASE("reflect and shift") {
  CHECK(reflect(parse_word("(01)")) == parse_word("(10)"));
  CHECK(reflect(parse_word("01(10)")) == parse_word("10(01)"));
  CHECK(reflect(parse_word("(0)")) == parse_word("(1)"));
  CHECK(shift(parse_word("01(10)"), 2) == parse_word("(10)"));
  CHECK(shift(parse_word("(01)"), 1) == parse_word("(10)"));
  const auto u = parse_word("0110(001)");
  CHECK(shift(u, 0) == u);
  CHECK(shift(u, 1000) == shift(u, 1000 % 3 + 3));
}

TEST_CASE("comparison agrees with long prefixes on random pairs") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const Word u = random_word(rng, 8, 8), v = random_word(rng, 8, 8);
    const std::string su = expand(u, 200), sv = expand(v, 200);
    const auto c = u <=> v;
    if (su < sv) CHECK(c == std::strong_ordering::less);
    else if (su > sv) CHECK(c == std::strong_ordering::greater);
    else CHECK(c == std::strong_ordering::equal);
    CHECK((v <=> u) == (0 <=> c));
  }
}

TEST_CASE("canonical form survives re-parsing an expansion") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, 6, 6);
    const std::size_t n = 3 * u.span();
    const std::string s = expand(u, n);
    // the last period's worth of letters repeats from there on
    const std::size_t per = u.period().size();
    const Word again(s.substr(0, n - per), s.substr(n - per));
    CHECK(again == u);
    CHECK(Word(u.preperiod(), u.period()) == u);
  }
}

TEST_CASE("sup0 is idempotent and reflect swaps sup0 with inf1") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, 6, 6);
    const std::string s = expand(u, u.span());
    if (s.find('0') == std::string::npos || s.find('1') == std::string::npos) continue;
    CHECK(sup0(sup0(u)) == sup0(u));
    CHECK(reflect(sup0(u)) == inf1(reflect(u)));
  }
}

TEST_CASE("sup0 matches the largest 0-suffix among all shifts") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 5, 5);
    // shifts beyond the span repeat, so 2·span of them cover every suffix
    std::string best;
    bool any = false;
    for (std::size_t k = 0; k < 2 * u.span(); ++k) {
      const std::string s = expand(u, k + 120).substr(k);
      if (s[0] != '0') continue;
      if (!any || s > best) best = s;
      any = true;
    }
    if (!any) continue;
    CHECK(expand(sup0(u), 120) == best);
  }
}

TEST_CASE("streams are deterministic and compare against words") {
  const auto tm = WordStream([](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += __builtin_popcountll(i) % 2 ? '1' : '0';
    return s;
  });
  CHECK(tm.prefix(8) == "01101001");
  CHECK(tm.prefix(20).substr(0, 8) == tm.prefix(8));
  CHECK(compare(tm, parse_word("(01)")) == Cmp::Greater);
  CHECK(compare(tm, parse_word("011(0)")) == Cmp::Greater);
  CHECK(compare(tm, parse_word("0110(1)")) == Cmp::Less);

  const auto w = WordStream::of(parse_word("01(10)"));
  CHECK(compare(w, parse_word("01(10)")) == Cmp::Undecided);
  const auto finite = WordStream::of_prefix("0110");
  CHECK(compare(finite, parse_word("(01)")) == Cmp::Greater);
  CHECK(compare(finite, parse_word("0110(0)")) == Cmp::Undecided);
}
