#include "sl3/laurent.hpp"

#include "sl3/error.hpp"

#include <cctype>
#include <sstream>

namespace sl3 {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::quantum_int(int n) {
  if (n <= 0) {
    throw Error(ErrorCode::InvalidArgument, "quantum integer [n] requires n >= 1, got " + std::to_string(n));
  }
  LaurentPoly p;
  for (int e = n - 1; e >= 1 - n; e -= 2) p.terms_.emplace(e, BigInt(1));
  return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> LaurentPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> LaurentPoly::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    auto it = terms_.find(-e);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

bool LaurentPoly::is_monic_symmetric() const {
  return is_symmetric() && !terms_.empty() && leading_coefficient() == 1;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  }
  return p;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (e == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term(sign);
      skip_ws();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_digits();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (at_end() || peek() != 'q') {
        return LaurentPoly::monomial(sign * coeff, 0);
      }
    }
    if (at_end() || peek() != 'q') fail(have_coeff ? "expected 'q' after '*'" : "expected a term");
    ++pos_;
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      int esign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = esign * static_cast<int>(parse_digits());
    }
    return LaurentPoly::monomial(sign * coeff, exponent);
  }

  BigInt parse_digits() {
    BigInt v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1) + " in '" +
                                           std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
LaurentPoly quantum_int(int n) { return LaurentPoly::quantum_int(n); }

}  // namespace sl3
