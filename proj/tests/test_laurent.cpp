#include "sl3/error.hpp"
#include "sl3/laurent.hpp"
#include "sl3/signs.hpp"

#include <doctest.h>

#include <random>

using namespace sl3;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::monomial(static_cast<long long>(rng() % 21) - 10, static_cast<int>(rng() % 13) - 6);
  return p;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(LaurentPoly::quantum_int(1) == LaurentPoly(1));
  CHECK(LaurentPoly::quantum_int(3).to_string() == "q^2 + 1 + q^-2");
  CHECK(LaurentPoly::quantum_int(3).degree() == 2);
  CHECK(LaurentPoly::quantum_int(3).coefficient(0) == 1);
  CHECK_THROWS_AS(LaurentPoly::quantum_int(0), Error);
  for (int n = 1; n <= 9; ++n) {
    auto p = quantum_int(n);
    CHECK(p.is_monic_symmetric());
    CHECK(p.degree() == n - 1);
    CHECK(p.at_one() == n);
  }
}

TEST_CASE("degree of [3]^6 and of zero") {
  auto p = quantum_int(3).pow(6);
  CHECK(p.degree() == 12);
  CHECK(p.low_degree() == -12);
  CHECK(p.coefficient(0) == 141);
  CHECK(p.coefficient(2) == 126);
  CHECK_FALSE(LaurentPoly().degree().has_value());
  CHECK(LaurentPoly().is_zero());
}

TEST_CASE("symmetry predicates") {
  CHECK((quantum_int(2) * quantum_int(3)).is_symmetric());
  CHECK_FALSE(LaurentPoly::monomial(1, 1).is_symmetric());
  auto w = LaurentPoly::parse("2*q^12 + 80*q^10 + 80*q^-10 + 2*q^-12");
  CHECK(w.is_symmetric());
  CHECK_FALSE(w.is_monic_symmetric());
  CHECK(w.leading_coefficient() == 2);
  CHECK(quantum_int(3).shift(2).to_string() == "q^4 + q^2 + 1");
}

TEST_CASE("text round trip") {
  for (const char* s : {"0", "1", "-1", "q", "-q^-1", "2*q^12 + 80*q^10 + 28612 - 3*q^-4", "q^2 + 1 + q^-2"}) {
    CAPTURE(s);
    CHECK(LaurentPoly::parse(s).to_string() == s);
  }
  CHECK(LaurentPoly::parse("q^-2 + q^2 + 1") == quantum_int(3));
  CHECK_THROWS_AS(LaurentPoly::parse("q^"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("2*x"), Error);
}

TEST_CASE("coefficients are arbitrary precision") {
  auto p = LaurentPoly::monomial(BigInt(1) << 100, 3);
  CHECK((p * p).coefficient(6) == (BigInt(1) << 200));
  CHECK(LaurentPoly::parse((p * p).to_string()) == p * p);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a * LaurentPoly(1) == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("sign sequences") {
  auto e = SignSequence::parse("+--++--++--+");
  CHECK(e.size() == 12);
  CHECK(e.sum() == 0);
  CHECK(e.admissible());
  CHECK(SignSequence::parse("+ - - +") == SignSequence::parse("+--+"));
  CHECK_FALSE(SignSequence::parse("++").admissible());
  CHECK(SignSequence::parse("+++").admissible());
  CHECK(SignSequence::parse("++-").mirrored().to_string() == "+--");
  CHECK_THROWS_AS(SignSequence::parse("+x-"), Error);
}
