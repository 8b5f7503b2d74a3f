#include "sl3/error.hpp"
#include "sl3/foam.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace sl3;
using sl3::testing::fixture;

namespace {

PreFoam one(const std::string& file, const std::string& name) {
  for (auto& f : parse_foam_file(fixture(file)))
    if (f.name == name) return f;
  FAIL("no foam " << name);
  return {};
}

PreFoam single_facet(int genus, int dots) {
  PreFoam f;
  f.name = "s";
  f.facets.push_back({"s", genus, dots, 0, 0});
  return f;
}

}  // namespace

TEST_CASE("Frobenius algebra") {
  auto x = FrobElement::x_power;
  CHECK(frob_trace(x(2)) == -1);
  CHECK(frob_trace(x(1)) == 0);
  CHECK(frob_trace(x(0)) == 0);
  CHECK(frob_mul(x(2), x(1)) == FrobElement{});
  CHECK(frob_mul(x(1), x(1)) == x(2));
  FrobTensor2 d2 = frob_comul(x(2));
  CHECK(d2[2][2] == -1);
  FrobTensor2 d0 = frob_comul(x(0));
  CHECK(d0[0][2] == -1);
  CHECK(d0[1][1] == -1);
  CHECK(d0[2][0] == -1);
  CHECK(d0[0][0] == 0);
  FrobTensor2 d1 = frob_comul(x(1));
  CHECK(d1[1][2] == -1);
  CHECK(d1[2][1] == -1);
  CHECK(d1[1][1] == 0);
  FrobElement h = handle_element();
  CHECK(h.c[2] == -3);
  CHECK(h.c[0] == 0);
  CHECK(frob_trace(h) == 3);
  CHECK(frob_mul(h, h) == FrobElement{});
  CHECK(FrobElement::degree_of_power(0) == -2);
  CHECK(FrobElement::degree_of_power(2) == 2);
}

TEST_CASE("theta values") {
  CHECK(theta_value(0, 1, 2) == 1);
  CHECK(theta_value(1, 2, 0) == 1);
  CHECK(theta_value(2, 0, 1) == 1);
  CHECK(theta_value(0, 2, 1) == -1);
  CHECK(theta_value(0, 0, 0) == 0);
  CHECK(theta_value(1, 1, 1) == 0);
  CHECK(theta_value(3, 1, 2) == 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        CHECK(theta_value(a, b, c) == theta_value(b, c, a));
        bool perm = a + b + c == 3 && a != b && b != c && a != c && std::max({a, b, c}) == 2;
        CHECK((theta_value(a, b, c) != 0) == perm);
      }
}

TEST_CASE("closed surfaces") {
  CHECK(evaluate(single_facet(0, 2)) == -1);
  CHECK(evaluate(single_facet(0, 0)) == 0);
  CHECK(evaluate(single_facet(0, 1)) == 0);
  CHECK(evaluate(single_facet(1, 0)) == 3);
  CHECK(evaluate(single_facet(2, 0)) == 0);
  CHECK(evaluate(single_facet(0, 3)) == 0);
  CHECK(evaluate(one("spheres.foam", "torus")) == 3);
  CHECK(evaluate(one("spheres.foam", "sphere2")) == -1);
}

TEST_CASE("foams with singular circles") {
  CHECK(evaluate(one("theta.foam", "theta012")) == theta_value(0, 1, 2));
  PreFoam t = one("foam_t.foam", "t");
  CHECK(degree(t) == 0);
  CHECK(evaluate(t) == -2);
  // six spheres with two dots each
  PreFoam six;
  six.name = "six";
  for (int i = 0; i < 6; ++i) six = disjoint_union(six, single_facet(0, 2));
  CHECK(evaluate(six) == 1);
}

TEST_CASE("contraction order") {
  PreFoam t = one("foam_t.foam", "t");
  std::vector<int> order(t.circles.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(evaluate(t, order) == -2);
  }
  CHECK_THROWS_AS(evaluate(t, std::vector<int>{0, 0, 1, 2, 3, 4}), Error);
}

TEST_CASE("malformed foams") {
  try {
    parse_foams("foam a\nfacet d genus=0 dots=0 slots=1\n");
    evaluate(parse_foams("foam a\nfacet d genus=0 dots=0 slots=1\n").front());
    FAIL("expected NOT_CLOSED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }
  try {
    evaluate(parse_foams("foam a\nfacet d genus=0 dots=0 slots=1\nsingular c d:0 d:0 d:0\n").front());
    FAIL("expected MALFORMED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Malformed);
  }
  CHECK_THROWS_AS(evaluate(parse_foams("foam a\nfacet d genus=0 dots=0 slots=1\nsingular c d:0 d:1 d:2\n").front()),
                  Error);
  CHECK_THROWS_AS(parse_foams("foam a\nfacet d genus=x dots=0 slots=1\n"), Error);
  CHECK_THROWS_AS(parse_foams("facet d genus=0 dots=0 slots=1\n"), Error);
  CHECK_THROWS_AS(parse_foams("foam a\nsingular c d:0 e:0 f:0\n"), Error);
}

TEST_CASE("text round trip") {
  for (const char* file : {"foam_t.foam", "spheres.foam", "theta.foam"})
    for (const auto& f : parse_foam_file(fixture(file))) {
      PreFoam g = parse_foams(to_text(f)).front();
      CHECK(to_text(g) == to_text(f));
      CHECK(evaluate(g) == evaluate(f));
    }
}
