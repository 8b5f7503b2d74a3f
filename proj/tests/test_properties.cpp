// Randomized and exhaustive property checks across modules.
#include "sl3/classify.hpp"
#include "sl3/enumerate.hpp"
#include "sl3/foam.hpp"
#include "sl3/skein.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sl3;
using namespace sl3::testing;

namespace {

std::vector<Web> corpus_for(int max_len) {
  std::vector<Web> out;
  for (int l = 0; l <= max_len; ++l)
    for (const auto& eps : admissible_sequences(l)) {
      auto webs = enumerate_non_elliptic(eps, default_vertex_budget(eps));
      out.insert(out.end(), webs.begin(), webs.end());
    }
  return out;
}

bool is_positive_constant(const LaurentPoly& p) {
  return p.terms().size() == 1 && p.terms().begin()->first == 0 && p.terms().begin()->second > 0;
}

bool degree_at_most_one(const LaurentPoly& p) {
  return p.is_symmetric() && p.has_nonnegative_coefficients() && !p.is_zero() && *p.degree() <= 1;
}

}  // namespace

TEST_CASE("confluence, symmetry and positivity") {
  const auto& corpus = closed_corpus();
  std::vector<LaurentPoly> ref;
  BracketEvaluator canonical;
  for (const auto& w : corpus) ref.push_back(canonical.bracket(w));
  for (std::uint64_t policy = 1; policy <= 20; ++policy) {
    BracketEvaluator eval(ReductionPolicy::Random, policy * 7919);
    int mismatches = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) mismatches += eval.bracket(corpus[i]) != ref[i];
    CHECK(mismatches == 0);
  }
  for (const auto& p : ref) {
    CHECK(p.is_symmetric());
    CHECK(p.has_nonnegative_coefficients());
  }
}

TEST_CASE("memoized evaluator matches plain rewriting") {
  const auto& corpus = closed_corpus();
  std::mt19937_64 rng(99);
  int checked = 0;
  for (const auto& w : corpus) {
    if (w.vertex_count() > 14) continue;
    CHECK(naive_bracket(w, rng) == kuperberg_bracket(w));
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("multiplicativity under nesting") {
  const auto& corpus = closed_corpus();
  for (std::size_t i = 0; i + 1 < 40; i += 2) {
    const Web& a = corpus[i];
    const Web& b = corpus[i + 1];
    LaurentPoly expect = kuperberg_bracket(a) * kuperberg_bracket(b);
    CHECK(kuperberg_bracket(disjoint_union(a, b)) == expect);
    if (a.map().dart_count() > 0) CHECK(kuperberg_bracket(disjoint_union(a, b, Host::face_left_of(0))) == expect);
  }
}

TEST_CASE("transpose on random non-elliptic pairs") {
  std::vector<std::vector<Web>> by_eps;
  for (int l = 2; l <= 8; ++l)
    for (const auto& eps : admissible_sequences(l)) {
      auto webs = enumerate_non_elliptic(eps, default_vertex_budget(eps));
      if (webs.size() >= 2) by_eps.push_back(webs);
    }
  std::mt19937_64 rng(5);
  BracketEvaluator eval;
  for (int i = 0; i < 100; ++i) {
    const auto& webs = by_eps[rng() % by_eps.size()];
    const Web& a = webs[rng() % webs.size()];
    const Web& b = webs[rng() % webs.size()];
    CHECK(eval.bracket(glue(a, b)) == eval.bracket(glue(b, a)));
  }
}

TEST_CASE("superficial semi-non-elliptic webs reduce with positive integers") {
  auto base = corpus_for(6);
  std::vector<Web> inputs;
  for (const auto& v : rung_variants(base, 2))
    if (is_superficial(v) && is_semi_non_elliptic(v) && !is_non_elliptic(v)) inputs.push_back(v);
  REQUIRE(inputs.size() >= 50);
  BracketEvaluator eval;
  for (const auto& w : inputs) {
    SkeinElement r = reduce_to_nonelliptic(w, eval);
    CHECK_FALSE(r.is_zero());
    for (const auto& [key, t] : r.terms()) {
      CHECK(is_positive_constant(t.coeff));
      CHECK(is_non_elliptic(t.web));
      CHECK(is_superficial(t.web));
      CHECK(t.web.vertex_count() < w.vertex_count());
    }
  }
}

TEST_CASE("1-elliptic and semi-superficial coefficients have degree at most one") {
  auto base = corpus_for(6);
  std::vector<Web> inputs;
  for (const auto& v : rung_variants(base, 3))
    if (is_superficial(v) && is_1_elliptic(v) && !is_semi_non_elliptic(v)) inputs.push_back(v);
  REQUIRE(inputs.size() >= 20);
  BracketEvaluator eval;
  for (const auto& w : inputs) {
    const SkeinElement reduced = reduce_to_nonelliptic(w, eval);
    for (const auto& [key, t] : reduced.terms()) CHECK(degree_at_most_one(t.coeff));
  }

  Web s = load("semi_superficial.web");
  std::vector<Web> semi;
  for (int k = 0; k < static_cast<int>(s.boundary().size()); ++k) {
    semi.push_back(rotate_boundary(s, k));
    semi.push_back(mirror(rotate_boundary(s, k)));
  }
  for (const auto& w : semi) {
    REQUIRE(is_semi_superficial(w));
    const SkeinElement reduced = reduce_to_nonelliptic(w, eval);
    for (const auto& [key, t] : reduced.terms()) CHECK(degree_at_most_one(t.coeff));
  }
}

TEST_CASE("foams of nonzero degree vanish") {
  std::mt19937_64 rng(31);
  int nonzero_degree = 0, zero_degree = 0, nonzero_values = 0;
  while (nonzero_degree < 100 || zero_degree < 30) {
    PreFoam f = random_foam(rng);
    if (degree(f) != 0) {
      if (nonzero_degree >= 100) continue;
      ++nonzero_degree;
      CHECK(evaluate(f) == 0);
    } else {
      ++zero_degree;
      nonzero_values += evaluate(f) != 0;
      // cyclic rotation of every triple keeps the value
      PreFoam g = f;
      for (auto& c : g.circles) std::rotate(c.legs.begin(), c.legs.begin() + 1, c.legs.end());
      CHECK(evaluate(g) == evaluate(f));
      // disjoint union multiplies
      PreFoam h = random_foam(rng);
      CHECK(evaluate(disjoint_union(f, h)) == evaluate(f) * evaluate(h));
    }
  }
  CHECK(nonzero_values > 0);
}
