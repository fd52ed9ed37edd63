#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "univoque/word.hpp"

namespace univoque {

// Substitutions L: 0→0, 1→10;  M: 0→01, 1→10;  R: 0→01, 1→1.
// A directive string σ1σ2…σn acts as σ1∘σ2∘…∘σn.
std::string image(char sub, std::string_view letters);
std::string apply(std::string_view directive, std::string_view letters);
Word apply(std::string_view directive, const Word& u);

// Inverse of a single substitution on an infinite word, if u lies in its image.
std::optional<Word> preimage(char sub, const Word& u);

// A word over {L,M,R}, finite or with an exact tail. Tails are kept in
// canonical form: the periodic block is primitive, single-letter blocks are
// RepeatL/RepeatR, and the head never ends with a letter the tail absorbs.
// `truncated` marks a finite prefix of an unknown infinite sequence.
struct DirectiveSequence {
  enum class Tail { Finite, RepeatL, RepeatR, Periodic };

  std::string head;
  Tail tail = Tail::Finite;
  std::string block;  // repeated part; "L"/"R" for the Repeat tails
  bool truncated = false;

  static DirectiveSequence make(std::string head, Tail tail, std::string block = {});
  static DirectiveSequence prefix_only(std::string head) {
    DirectiveSequence d;
    d.head = std::move(head);
    d.truncated = true;
    return d;
  }

  bool infinite() const { return tail != Tail::Finite; }
  // i-th letter, or '\0' beyond the known letters
  char at(std::size_t i) const;
  std::string str() const;

  bool operator==(const DirectiveSequence&) const = default;
};

// "LM(R)" = LM·R̄, "(M)" = M̄, "(LR)" = (LR)^∞, "LM" finite.
DirectiveSequence parse_directive(std::string_view text);

// The form the s-map assigns to the limit word d(seed̄): a finite head gets
// the tail fixing seed̄, and the junctions L·R̄, R·L̄ become M·L̄ or M·R̄
// (L R̄(0̄) = M(0̄) = R L̄(0̄), L R̄(1̄) = M(1̄) = R L̄(1̄)).
DirectiveSequence normalized_for_seed(const DirectiveSequence& d, char seed);

// nullopt when d is truncated.
std::optional<bool> is_primitive(const DirectiveSequence& d);

// Lexicographic with L < M < R. Undecided when a truncated operand runs out.
Cmp compare(const DirectiveSequence& a, const DirectiveSequence& b);

struct LimitWord {
  std::optional<Word> exact;  // set unless the tail is a primitive periodic block
  WordStream stream;
};

LimitWord limit_word(const DirectiveSequence& d, char seed);
std::string limit_prefix(const DirectiveSequence& d, char seed, std::size_t n);

// Boundary words of the node σ = wM.
struct NodeBoundaries {
  Word s0;    // σ(0̄)
  Word s010;  // σ(010̄)
  Word s01;   // σ(01̄)
  Word s10;   // σ(10̄)
  Word s101;  // σ(101̄)
  Word s1;    // σ(1̄)
};

NodeBoundaries node_boundaries(std::string_view w);

// Shared, thread-safe memo of node boundaries keyed by w.
class NodeCache {
 public:
  std::shared_ptr<const NodeBoundaries> get(const std::string& w);

 private:
  std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const NodeBoundaries>> nodes_;
};

inline constexpr std::size_t kDefaultMaxDepth = 48;

// The directive sequence d with d(0̄) ≤ u ≤ d(01̄) (u starting with 0) or
// d(10̄) ≤ u ≤ d(1̄) (u starting with 1). Truncated after max_depth letters,
// or earlier when a stream comparison is undecided.
DirectiveSequence s_map(const Word& u, std::size_t max_depth = kDefaultMaxDepth);
DirectiveSequence s_map(const WordStream& u, std::size_t max_depth = kDefaultMaxDepth,
                        std::size_t stream_depth = kDefaultStreamDepth);

// Some σ over {L,M,R} with u, v both in the image of σM, if one exists.
std::optional<std::string> common_node(const Word& u, const Word& v);

}  // namespace univoque
