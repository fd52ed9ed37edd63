#include <doctest.h>

#include <random>

#include "univoque/substitution.hpp"

using namespace univoque;

namespace {

// Letter-by-letter substitution, written out independently of the library.
std::string substitute(const std::string& directive, std::string s) {
  for (auto it = directive.rbegin(); it != directive.rend(); ++it) {
    std::string t;
    for (char c : s) {
      if (*it == 'L') t += c == '0' ? "0" : "10";
      else if (*it == 'M') t += c == '0' ? "01" : "10";
      else t += c == '0' ? "01" : "1";
    }
    s = t;
  }
  return s;
}

std::string prefix_of(const Word& w, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += w.at(i);
  return s;
}

std::string random_directive(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string w;
  for (std::size_t i = len(rng); i > 0; --i) w += "LMR"[letter(rng)];
  return w;
}

}  // namespace

TEST_CASE("apply on periodic words") {
  CHECK(univoque::apply("M", parse_word("(0)")) == parse_word("(01)"));
  CHECK(univoque::apply("LM", parse_word("(0)")) == parse_word("(010)"));
  CHECK(univoque::apply("M", parse_word("1(0)")) == parse_word("10(01)"));
  CHECK(univoque::apply("R", parse_word("1(0)")) == parse_word("1(01)"));
  CHECK_THROWS_AS(univoque::apply("X", parse_word("(0)")), ParseError);
}

TEST_CASE("apply agrees with letterwise substitution") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::string d = random_directive(rng, 6);
    const Word u((i % 2 ? "1" : "0") + std::string(i % 3, '1'), i % 4 ? "01" : "0");
    const Word img = univoque::apply(d, u);
    const std::string direct = substitute(d, prefix_of(u, 80));
    CHECK(prefix_of(img, 80) == direct.substr(0, 80));
  }
}

TEST_CASE("preimage inverts a substitution") {
  CHECK(preimage('M', parse_word("(01)")) == parse_word("(0)"));
  CHECK(preimage('M', parse_word("10(01)")) == parse_word("1(0)"));
  CHECK(preimage('L', parse_word("(010)")) == parse_word("(01)"));
  CHECK_FALSE(preimage('M', parse_word("(0)")).has_value());
  CHECK_FALSE(preimage('L', parse_word("(011)")).has_value());
}

TEST_CASE("directive parsing and canonical tails") {
  const auto d = parse_directive("LM(R)");
  CHECK(d.head == "LM");
  CHECK(d.tail == DirectiveSequence::Tail::RepeatR);
  CHECK(d.str() == "LM(R)");

  CHECK(parse_directive("(M)").tail == DirectiveSequence::Tail::Periodic);
  CHECK(parse_directive("(MM)") == parse_directive("(M)"));
  CHECK(parse_directive("LL(L)") == parse_directive("(L)"));
  CHECK(parse_directive("R(LR)") == parse_directive("(RL)"));
  CHECK(parse_directive("LM").tail == DirectiveSequence::Tail::Finite);
  CHECK_THROWS_AS(parse_directive("LQ"), ParseError);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(parse_directive("(M)")) == true);
  CHECK(is_primitive(parse_directive("LM(R)")) == false);
  CHECK(is_primitive(parse_directive("(LR)")) == true);
  CHECK(is_primitive(parse_directive("LRM")) == false);
  CHECK_FALSE(is_primitive(DirectiveSequence::prefix_only("MM")).has_value());
}

TEST_CASE("limit words") {
  CHECK(limit_word(parse_directive("(L)"), '1').exact == parse_word("1(0)"));
  CHECK(limit_word(parse_directive("(R)"), '0').exact == parse_word("0(1)"));
  CHECK(limit_prefix(parse_directive("(M)"), '0', 8) == "01101001");

  std::string thue_morse;
  for (unsigned i = 0; i < 16; ++i) thue_morse += __builtin_popcount(i) % 2 ? '1' : '0';
  CHECK(limit_prefix(parse_directive("(M)"), '0', 16) == thue_morse);
  CHECK(limit_prefix(parse_directive("(M)"), '1', 16) == substitute("MMMM", "1"));

  // a Sturmian limit: the two seeds give words that differ only in their first two letters
  const auto lr = parse_directive("(LR)");
  CHECK(limit_prefix(lr, '0', 64).substr(2) == limit_prefix(lr, '1', 64).substr(2));
  CHECK(limit_prefix(lr, '0', 2) == "01");
  CHECK(limit_prefix(lr, '1', 2) == "10");
  CHECK(limit_prefix(lr, '0', 64) == substitute("LRLRLRLRLR", "0").substr(0, 64));
}

TEST_CASE("node boundaries at the root and below L") {
  const auto root = node_boundaries("");
  CHECK(root.s0 == parse_word("(01)"));
  CHECK(root.s010 == parse_word("0110(01)"));
  CHECK(root.s01 == parse_word("01(10)"));
  CHECK(root.s10 == parse_word("10(01)"));
  CHECK(root.s101 == parse_word("1001(10)"));
  CHECK(root.s1 == parse_word("(10)"));
  CHECK(root.s01 < root.s10);

  const auto l = node_boundaries("L");
  CHECK(l.s0 == parse_word("01(001)"));
  CHECK(l.s01 == parse_word("01(010)"));
}

TEST_CASE("node boundaries are ordered inside a node and across nodes") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::string w = random_directive(rng, 6);
    const auto nb = node_boundaries(w);
    CHECK(nb.s0 <= nb.s010);
    CHECK(nb.s010 <= nb.s01);
    CHECK(nb.s01 < nb.s10);
    CHECK(nb.s10 <= nb.s101);
    CHECK(nb.s101 <= nb.s1);

    std::string w2 = w;
    std::uniform_int_distribution<int> letter(0, 2);
    for (char& c : w2) c = "LMR"[letter(rng)];
    if (w == w2) continue;
    const auto& lo = w < w2 ? w : w2;  // 'L' < 'M' < 'R' in ASCII
    const auto& hi = w < w2 ? w2 : w;
    const auto a = node_boundaries(lo), b = node_boundaries(hi);
    CHECK(a.s01 < b.s0);
    CHECK(a.s1 < b.s10);
  }
}

TEST_CASE("s_map on basic words") {
  CHECK(s_map(parse_word("(0)")) == parse_directive("(L)"));
  CHECK(s_map(parse_word("(01)")) == parse_directive("M(L)"));
  CHECK(s_map(parse_word("0(1)")) == parse_directive("(R)"));
  CHECK(s_map(parse_word("(10)")) == parse_directive("M(R)"));
  CHECK(s_map(parse_word("(1)")) == parse_directive("(R)"));
}

TEST_CASE("s_map inverts limit words with constant tails") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::string head = random_directive(rng, 6);
    const char seed = i % 2 ? '1' : '0';
    const auto d = DirectiveSequence::make(head, i % 4 < 2 ? DirectiveSequence::Tail::RepeatL
                                                           : DirectiveSequence::Tail::RepeatR);
    const auto lw = limit_word(d, seed);
    REQUIRE(lw.exact.has_value());
    CHECK(s_map(*lw.exact) == normalized_for_seed(d, seed));
  }
}

TEST_CASE("s_map on a Thue-Morse stream") {
  const auto tm = WordStream([](std::size_t n) { return limit_prefix(parse_directive("(M)"), '0', n); });
  const auto d = s_map(tm, 8);
  CHECK(d.truncated);
  CHECK(d.head == "MMMMMMMM");
}

TEST_CASE("sup0 commutes with substitutions") {
  std::mt19937 rng(29);
  std::bernoulli_distribution bit;
  for (int i = 0; i < 200; ++i) {
    const std::string sigma = random_directive(rng, 5);
    std::string pre = "0", per;
    for (int k = 0; k < 3; ++k) pre += bit(rng) ? '1' : '0';
    for (int k = 0; k < 3; ++k) per += bit(rng) ? '1' : '0';
    const Word u(pre, per);
    CHECK(sup0(univoque::apply(sigma, u)) == univoque::apply(sigma, sup0(u)));
    const Word v = reflect(u);
    CHECK(inf1(univoque::apply(sigma, v)) == univoque::apply(sigma, inf1(v)));
  }
}

TEST_CASE("common nodes") {
  CHECK(common_node(parse_word("(01)"), parse_word("(10)")) == std::string(""));
  CHECK(common_node(parse_word("(010)"), parse_word("(100)")) == std::string("L"));
  CHECK_FALSE(common_node(parse_word("(01)"), parse_word("(100)")).has_value());
}
