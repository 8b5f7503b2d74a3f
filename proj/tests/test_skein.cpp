#include "sl3/classify.hpp"
#include "sl3/error.hpp"
#include "sl3/skein.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sl3;
using sl3::testing::load;

namespace {

const LaurentPoly q3 = quantum_int(3);
const LaurentPoly q2 = quantum_int(2);

}  // namespace

TEST_CASE("local relations") {
  CHECK(kuperberg_bracket(load("circle.web")) == q3);
  CHECK(kuperberg_bracket(load("theta.web")) == q2 * q3);
  CHECK(kuperberg_bracket(Web::empty()) == LaurentPoly(1));
  CHECK(kuperberg_bracket(Web::circles(2)) == q3 * q3);
  Web c = load("circle.web");
  CHECK(kuperberg_bracket(disjoint_union(c, c, Host::inside_circle(0))) == q3 * q3);
  CHECK_THROWS_AS(kuperberg_bracket(load("y.web")), Error);
}

TEST_CASE("single reduction steps") {
  Web theta = load("theta.web");
  auto feats = reducible_features(theta);
  REQUIRE_FALSE(feats.empty());
  CHECK(feats.front().kind == FeatureKind::Digon);
  SkeinElement r = reduce_feature(theta, feats.front());
  REQUIRE(r.size() == 1);
  CHECK(r.terms().begin()->second.web == load("circle.web"));
  CHECK(r.terms().begin()->second.coeff == q2);

  SkeinElement rc = reduce_circle(load("circle.web"), reducible_features(load("circle.web")).front().face);
  CHECK(rc.coefficient(Web::empty()) == q3);

  CHECK_THROWS_AS(reduce_digon(theta, 0), Error);  // the unbounded face
}

TEST_CASE("square resolution") {
  // A closed web with a square: glue of a two-rung ladder with plain arcs.
  Web arcs = insert_arc(insert_arc(Web::empty(), 0, Sign::Plus), 2, Sign::Plus);
  Web ladder = insert_h(insert_h(arcs, 1), 1);
  Web closed = glue(ladder, arcs);
  auto feats = reducible_features(closed);
  const Feature* sq = nullptr;
  for (const auto& f : feats)
    if (f.kind == FeatureKind::Square) sq = &f;
  REQUIRE(sq != nullptr);
  SkeinElement r = resolve_square(closed, sq->face);
  CHECK(r.size() == 2);
  LaurentPoly sum;
  for (const auto& [key, t] : r.terms()) {
    CHECK(t.coeff == LaurentPoly(1));
    CHECK(t.web.vertex_count() == closed.vertex_count() - 4);
    sum += kuperberg_bracket(t.web);
  }
  CHECK(kuperberg_bracket(closed) == sum);
}

TEST_CASE("reduce to non-elliptic") {
  Web y = load("y.web");
  SkeinElement fixed = reduce_to_nonelliptic(y);
  CHECK(fixed.size() == 1);
  CHECK(fixed.coefficient(y) == LaurentPoly(1));

  // one digon next to the border
  Web a = insert_arc(Web::empty(), 0, Sign::Plus);
  Web d = insert_h(a, 0);
  REQUIRE(bounded_face_profile(d) == std::vector<int>{2});
  SkeinElement r = reduce_to_nonelliptic(d);
  REQUIRE(r.size() == 1);
  CHECK(r.terms().begin()->second.coeff == q2);
  CHECK(r.terms().begin()->second.web.boundary().to_string() == "-+");
  CHECK(is_non_elliptic(r.terms().begin()->second.web));

  const SkeinElement reduced = reduce_to_nonelliptic(load("semi_superficial.web"));
  for (const auto& [k, t] : reduced.terms())
    CHECK(is_non_elliptic(t.web));
}

TEST_CASE("skein elements") {
  Web y = load("y.web");
  SkeinElement e = SkeinElement::single(y, q3);
  e.add(y, LaurentPoly(1));
  CHECK(e.coefficient(y) == q3 + LaurentPoly(1));
  e.add(y, -(q3 + LaurentPoly(1)));
  CHECK(e.is_zero());
  CHECK_THROWS_AS(e.add(load("arc.web"), 1), Error);
  CHECK(SkeinElement::single(y).scaled(q2).coefficient(y) == q2);
}

TEST_CASE("graded hom dimension") {
  Web arc = load("arc.web");
  CHECK(graded_hom_dim(arc, arc).to_string() == "q^4 + q^2 + 1");
  CHECK(graded_hom_dim(load("y.web"), load("y.web")).to_string() == "q^6 + 2*q^4 + 2*q^2 + 1");
  Web w0 = load("kk_w0.web");
  CHECK(graded_hom_dim(w0, w0) == q3.pow(6).shift(12));
  CHECK_THROWS_AS(graded_hom_dim(arc, load("y.web")), Error);
  Web digon = insert_h(arc, 0);
  try {
    graded_hom_dim(digon, digon);
    FAIL("expected NOT_NON_ELLIPTIC");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNonElliptic);
  }
}

TEST_CASE("self-pairings of the example webs") {
  Web w0 = load("kk_w0.web");
  CHECK(kuperberg_bracket(glue(w0, w0)) == q3.pow(6));
  Web w = load("kk_w.web");
  CHECK(kuperberg_bracket(glue(w, w)) ==
        LaurentPoly::parse("2*q^12 + 80*q^10 + 902*q^8 + 4604*q^6 + 13158*q^4 + 23684*q^2 + 28612 + 23684*q^-2 + "
                           "13158*q^-4 + 4604*q^-6 + 902*q^-8 + 80*q^-10 + 2*q^-12"));
}

TEST_CASE("evaluator policies agree") {
  Web g = glue(load("semi_superficial.web"), load("semi_superficial.web"));
  LaurentPoly ref = BracketEvaluator().bracket(g);
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    CHECK(BracketEvaluator(ReductionPolicy::Random, seed).bracket(g) == ref);
}
