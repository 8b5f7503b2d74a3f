#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sl3 {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Ordered boundary signs of an epsilon-web. Empty means closed.
class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  /// Accepts "+--+" as well as whitespace-separated "+ - - +".
  static SignSequence parse(std::string_view text);

  const std::vector<Sign>& signs() const noexcept { return signs_; }
  std::size_t size() const noexcept { return signs_.size(); }
  bool empty() const noexcept { return signs_.empty(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }

  int sum() const;
  /// Sum of the signs divisible by 3.
  bool admissible() const { return sum() % 3 == 0; }

  /// Reverse order and flip every sign: the boundary of a mirrored web.
  SignSequence mirrored() const;

  std::string to_string() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;
  friend auto operator<=>(const SignSequence&, const SignSequence&) = default;

 private:
  std::vector<Sign> signs_;
};

/// All admissible sign sequences of length exactly n, in lexicographic order
/// with '+' before '-'.
std::vector<SignSequence> admissible_sequences(int n);

}  // namespace sl3
