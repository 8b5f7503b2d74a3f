#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sl3 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in one variable q with integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero entries, so two
/// equal polynomials always have identical maps. The zero polynomial is the
/// empty map.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt coeff, int exponent);
  /// [n] = q^(n-1) + q^(n-3) + ... + q^(1-n). Throws for n <= 0.
  static LaurentPoly quantum_int(int n);
  /// Parses the syntax produced by to_string(), e.g. "2*q^2 + 1 - q^-3".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest exponent with a nonzero coefficient; nullopt stands for the
  /// -infinity degree of the zero polynomial.
  std::optional<int> degree() const;
  std::optional<int> low_degree() const;
  BigInt coefficient(int exponent) const;
  BigInt leading_coefficient() const;

  bool is_symmetric() const;
  bool is_monic_symmetric() const;
  bool has_nonnegative_coefficients() const;

  /// Multiplication by q^k.
  LaurentPoly shift(int k) const;
  LaurentPoly pow(unsigned n) const;
  /// Evaluation at q = 1.
  BigInt at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Terms with descending exponents: "q^2 + 1 + q^-2", "2*q^12 + 80*q^10 + ...".
  std::string to_string() const;

 private:
  void add_term(int exponent, const BigInt& coeff);

  Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly quantum_int(int n);

}  // namespace sl3
