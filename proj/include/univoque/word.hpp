#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace univoque {

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The infinite binary sequence pre·per·per·…, held in canonical form: the
// period is primitive and the preperiod is as short as possible, so two
// words are equal as sequences iff their members are equal.
class Word {
 public:
  Word(std::string preperiod, std::string period);

  static Word constant(char letter) { return Word("", std::string(1, letter)); }

  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return per_; }

  char at(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  std::string prefix(std::size_t n) const;

  // letters needed before the word starts repeating
  std::size_t span() const { return pre_.size() + per_.size(); }
  bool eventually_constant() const { return per_.size() == 1; }

  std::string str() const { return pre_ + "(" + per_ + ")"; }

  bool operator==(const Word&) const = default;

 private:
  std::string pre_;
  std::string per_;
};

// Lexicographic order on infinite words.
std::strong_ordering operator<=>(const Word& u, const Word& v);

Word parse_word(std::string_view text);

Word shift(const Word& u, std::size_t n);
Word reflect(const Word& u);

// Largest suffix beginning with 0, smallest suffix beginning with 1.
Word sup0(const Word& u);
Word inf1(const Word& u);

// sup0(u) = u and u is not eventually constant
bool in_sup0_class(const Word& u);
// inf1(v) = v and v is not eventually constant
bool in_inf1_class(const Word& v);

// A lazily produced binary sequence. The generator returns the first n
// letters, or fewer if the source is finite (a digit run, say).
class WordStream {
 public:
  using Generator = std::function<std::string(std::size_t)>;

  explicit WordStream(Generator gen);
  static WordStream of(const Word& w);
  static WordStream of_prefix(std::string letters);  // finite source

  std::string prefix(std::size_t n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

enum class Cmp { Less, Equal, Greater, Undecided };

const char* to_string(Cmp c);

inline constexpr std::size_t kDefaultStreamDepth = 4096;

// Compares a stream against an exact word on the first `depth` letters.
// Undecided if they agree that far or the stream runs out first.
Cmp compare(const WordStream& s, const Word& w, std::size_t depth = kDefaultStreamDepth);
Cmp compare(const WordStream& s, const WordStream& t, std::size_t depth = kDefaultStreamDepth);

}  // namespace univoque
