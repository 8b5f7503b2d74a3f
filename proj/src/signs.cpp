#include "sl3/signs.hpp"

#include "sl3/error.hpp"

#include <algorithm>
#include <cctype>

namespace sl3 {

SignSequence SignSequence::parse(std::string_view text) {
  std::vector<Sign> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      signs.push_back(Sign::Plus);
    } else if (c == '-') {
      signs.push_back(Sign::Minus);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError,
                  std::string("unexpected character '") + c + "' in sign sequence at column " + std::to_string(i + 1));
    }
  }
  return SignSequence(std::move(signs));
}

int SignSequence::sum() const {
  int s = 0;
  for (Sign x : signs_) s += static_cast<int>(x);
  return s;
}

SignSequence SignSequence::mirrored() const {
  std::vector<Sign> out(signs_.rbegin(), signs_.rend());
  for (Sign& s : out) s = flip(s);
  return SignSequence(std::move(out));
}

std::string SignSequence::to_string() const {
  std::string s;
  s.reserve(signs_.size());
  for (Sign x : signs_) s.push_back(x == Sign::Plus ? '+' : '-');
  return s;
}

std::vector<SignSequence> admissible_sequences(int n) {
  std::vector<SignSequence> out;
  if (n < 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Sign> signs(n);
    for (int i = 0; i < n; ++i) signs[i] = (mask >> (n - 1 - i)) & 1U ? Sign::Minus : Sign::Plus;
    SignSequence eps(std::move(signs));
    if (eps.admissible()) out.push_back(std::move(eps));
  }
  return out;
}

}  // namespace sl3
