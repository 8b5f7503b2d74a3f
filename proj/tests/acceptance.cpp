// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "sl3/certify.hpp"
#include "sl3/classify.hpp"
#include "sl3/enumerate.hpp"
#include "sl3/foam.hpp"
#include "sl3/skein.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

using namespace sl3;
using namespace sl3::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && limit_s > 0 && s > limit_s) {
    o.ok = false;
    o.detail = "over the " + std::to_string(limit_s) + " s limit";
  }
  failures += !o.ok;
  std::printf("[%s] %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

bool has_coefficients(const LaurentPoly& p, std::initializer_list<int> top_down) {
  int e = 12;
  for (int c : top_down) {
    if (p.coefficient(e) != c || p.coefficient(-e) != c) return false;
    e -= 2;
  }
  return p.is_symmetric() && p.degree() == 12;
}

}  // namespace

int main() {
  const LaurentPoly q3 = quantum_int(3);

  criterion(1, "circle, digon and square relations", 1.0, [&] {
    Outcome o;
    o.require(kuperberg_bracket(load("circle.web")) == q3, "circle");
    o.require(kuperberg_bracket(load("theta.web")) == quantum_int(2) * q3, "theta");
    Web cube = load("cube.web");
    FaceMap fm = cube.faces();
    int square = -1;
    for (std::size_t f = 1; f < fm.size(); ++f)
      if (fm.faces[f].sides == 4 && fm.faces[f].simple()) square = static_cast<int>(f);
    o.require(square >= 0, "no square in cube.web");
    if (square < 0) return o;
    LaurentPoly sum;
    const SkeinElement reduced = resolve_square(cube, square);
    for (const auto& [key, t] : reduced.terms()) {
      BracketEvaluator fresh;
      sum += t.coeff * fresh.bracket(t.web);
    }
    o.require(BracketEvaluator().bracket(cube) == sum, "cube != sum of resolutions");
    return o;
  });

  criterion(2, "bracket of glued w0 is [3]^6", 5.0, [&] {
    Outcome o;
    Web w0 = load("kk_w0.web");
    LaurentPoly p = BracketEvaluator().bracket(glue(w0, w0));
    o.require(p == q3.pow(6) && has_coefficients(p, {1, 6, 21, 50, 90, 126, 141}), p.to_string());
    return o;
  });

  criterion(3, "bracket of glued w: 2, 80, 902, 4604, 13158, 23684, 28612", 60.0, [&] {
    Outcome o;
    Web w = load("kk_w.web");
    LaurentPoly p = BracketEvaluator().bracket(glue(w, w));
    o.require(has_coefficients(p, {2, 80, 902, 4604, 13158, 23684, 28612}), p.to_string());
    return o;
  });

  criterion(4, "certificates on w and w0", 60.0, [&] {
    Outcome o;
    Web w = load("kk_w.web"), w0 = load("kk_w0.web");
    Certificate c0 = certify_indecomposable(w0);
    Certificate c = certify_indecomposable(w);
    o.require(c0.kind == Verdict::Indecomposable, "w0 not INDECOMPOSABLE");
    o.require(c.kind == Verdict::Inconclusive && c.witness.leading_coefficient() == 2, "w not INCONCLUSIVE/2");
    o.require(!is_superficial(w), "w superficial");
    o.require(is_superficial(w0) && is_non_elliptic(w0), "w0 not superficial non-elliptic");
    return o;
  });

  criterion(5, "foam values", 1.0, [&] {
    Outcome o;
    auto sphere = [](int g, int d) {
      PreFoam f;
      f.facets.push_back({"s", g, d, 0, 0});
      return f;
    };
    o.require(evaluate(sphere(0, 2)) == -1, "double-dotted sphere");
    o.require(evaluate(sphere(0, 0)) == 0 && evaluate(sphere(0, 1)) == 0, "sphere with 0 or 1 dot");
    o.require(evaluate(sphere(1, 0)) == 3, "torus");
    o.require(evaluate(parse_foam_file(fixture("foam_t.foam")).front()) == -2, "foam t");
    return o;
  });

  criterion(6, "key lemma up to length 6", 600.0, [&] {
    Outcome o;
    KeyLemmaReport r = verify_key_lemma(6, std::nullopt, static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    o.require(r.all_nice(), std::to_string(r.counterexamples.size()) + " counterexamples");
    o.detail = o.ok ? std::to_string(r.pairs_checked) + " pairs, all nice" : o.detail;
    return o;
  });

  criterion(7, "property suites", 0, [&] {
    Outcome o;
    std::mt19937_64 rng(2024);
    const std::vector<Web>& corpus = closed_corpus();
    std::vector<LaurentPoly> ref;
    for (const auto& w : corpus) ref.push_back(BracketEvaluator().bracket(w));
    int violations = 0;
    for (std::uint64_t policy = 1; policy <= 20; ++policy) {
      BracketEvaluator eval(ReductionPolicy::Random, policy);
      for (std::size_t i = 0; i < corpus.size(); ++i) violations += eval.bracket(corpus[i]) != ref[i];
    }
    o.require(violations == 0, "confluence: " + std::to_string(violations));
    for (const auto& p : ref) o.require(p.is_symmetric() && p.has_nonnegative_coefficients(), "symmetry/positivity");

    std::vector<std::vector<Web>> by_eps;
    std::vector<Web> base;
    for (int l = 0; l <= 8; ++l)
      for (const auto& eps : admissible_sequences(l)) {
        auto webs = enumerate_non_elliptic(eps, default_vertex_budget(eps));
        if (l <= 6) {
          o.require(webs.size() == dominant_path_count(eps), "count oracle at " + eps.to_string());
          base.insert(base.end(), webs.begin(), webs.end());
        }
        if (webs.size() >= 2) by_eps.push_back(webs);
      }
    BracketEvaluator eval;
    for (int i = 0; i < 100; ++i) {
      const auto& webs = by_eps[rng() % by_eps.size()];
      const Web& a = webs[rng() % webs.size()];
      const Web& b = webs[rng() % webs.size()];
      o.require(eval.bracket(glue(a, b)) == eval.bracket(glue(b, a)), "transpose");
    }

    int sneni = 0;
    for (const auto& v : rung_variants(base, 2)) {
      if (!is_superficial(v) || !is_semi_non_elliptic(v) || is_non_elliptic(v)) continue;
      ++sneni;
      const SkeinElement reduced = reduce_to_nonelliptic(v, eval);
      for (const auto& [key, t] : reduced.terms()) {
        bool shape = t.coeff.terms().size() == 1 && t.coeff.terms().begin()->first == 0 &&
                     t.coeff.terms().begin()->second > 0 && is_non_elliptic(t.web) && is_superficial(t.web) &&
                     t.web.vertex_count() < v.vertex_count();
        o.require(shape, "sneni shape");
      }
    }
    o.require(sneni > 0, "empty sneni corpus");
    if (o.ok) o.detail = std::to_string(sneni) + " semi-non-elliptic inputs";
    return o;
  });

  criterion(8, "foams of nonzero degree evaluate to 0", 0, [&] {
    Outcome o;
    std::mt19937_64 rng(8);
    int n = 0;
    while (n < 100) {
      PreFoam f = random_foam(rng);
      if (degree(f) == 0) continue;
      ++n;
      o.require(evaluate(f) == 0, "nonzero value at degree " + std::to_string(degree(f)));
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
