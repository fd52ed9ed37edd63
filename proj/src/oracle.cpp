#include "univoque/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace univoque::oracle {

const char* to_string(Growth g) {
  switch (g) {
    case Growth::TrivialLike: return "TrivialLike";
    case Growth::SubexponentialLike: return "SubexponentialLike";
    case Growth::ExponentialLike: return "ExponentialLike";
  }
  return "?";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::Boundary: return "Boundary";
  }
  return "?";
}

namespace {

// Word under construction plus, for every position, whether the suffix
// starting there is still tied with a (started by 0) or b (started by 1).
class Enumerator {
 public:
  Enumerator(const Word& a, const Word& b, std::size_t n)
      : a_(a), b_(b), slack_(std::max<std::size_t>(32, 4 * (a.span() + b.span()))), counts_(n, 0) {}

  std::vector<std::uint64_t> run() {
    walk();
    return counts_;
  }

 private:
  // Appends c if no open comparison is violated; the tie list for the new
  // word is pushed onto the stack.
  bool push(char c) {
    std::vector<std::size_t> open;
    const std::vector<std::size_t>* prev = ties_.empty() ? nullptr : &ties_.back();
    const std::size_t len = word_.size();
    if (prev) {
      for (std::size_t start : *prev) {
        const bool lower = word_[start] == '0';
        const char ref = (lower ? a_ : b_).at(len - start);
        if (lower ? c > ref : c < ref) return false;
        if (c == ref) open.push_back(start);
      }
    }
    open.push_back(len);  // new suffix ties with a[0] or b[0]
    word_.push_back(c);
    ties_.push_back(std::move(open));
    return true;
  }

  void pop() {
    word_.pop_back();
    ties_.pop_back();
  }

  bool extends(std::size_t more) {
    if (more == 0) return true;
    for (char c : {'0', '1'}) {
      if (!push(c)) continue;
      const bool ok = extends(more - 1);
      pop();
      if (ok) return true;
    }
    return false;
  }

  void walk() {
    const std::size_t len = word_.size();
    if (len > 0) {
      if (!extends(slack_)) return;  // dead words have no live extensions either
      ++counts_[len - 1];
    }
    if (len == counts_.size()) return;
    for (char c : {'0', '1'}) {
      if (!push(c)) continue;
      walk();
      pop();
    }
  }

  const Word& a_;
  const Word& b_;
  std::size_t slack_;
  std::vector<std::uint64_t> counts_;
  std::string word_;
  std::vector<std::vector<std::size_t>> ties_;
};

}  // namespace

std::vector<std::uint64_t> block_counts(const Word& a, const Word& b, std::size_t n) {
  if (a.at(0) != '0') throw PreconditionError("a must start with 0");
  if (b.at(0) != '1') throw PreconditionError("b must start with 1");
  if (n > kMaxBlockLength)
    throw PreconditionError("block length above " + std::to_string(kMaxBlockLength));
  return Enumerator(a, b, n).run();
}

std::uint64_t block_count(const Word& a, const Word& b, std::size_t n) {
  if (n == 0) return 1;
  return block_counts(a, b, n).back();
}

Growth growth_of(const std::vector<std::uint64_t>& counts) {
  const std::size_t n = counts.size();
  if (n < 9) throw PreconditionError("growth test needs at least 9 lengths");
  if (counts[n - 1] <= 2) return Growth::TrivialLike;
  auto at = [&](std::size_t k) { return std::log(static_cast<double>(counts[k - 1])); };
  const double late = at(n) - at(n - 4);
  const double early = at(n - 4) - at(n - 8);
  // polynomial n^d: late/early ≈ ln(n/(n−4)) / ln((n−4)/(n−8)), which is
  // about 0.75 at n = 18; any exponential rate pushes the quotient toward 1
  if (late <= kGrowthSlowdown * early) return Growth::SubexponentialLike;
  return Growth::ExponentialLike;
}

Growth brute_classify(const Word& a, const Word& b, std::size_t N) {
  if (N > 20) throw PreconditionError("brute classification is capped at N = 20");
  return growth_of(block_counts(a, b, N));
}

}  // namespace univoque::oracle
