#include "sl3/certify.hpp"

#include "sl3/classify.hpp"
#include "sl3/enumerate.hpp"
#include "sl3/error.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace sl3 {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Indecomposable: return "INDECOMPOSABLE";
    case Verdict::NotIsomorphic: return "NOT_ISOMORPHIC";
    case Verdict::Nice: return "NICE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

void require_same_boundary(const Web& a, const Web& b) {
  if (a.boundary() != b.boundary()) {
    throw Error(ErrorCode::BoundaryMismatch,
                "boundaries " + a.boundary().to_string() + " and " + b.boundary().to_string() + " differ");
  }
}

void require_non_elliptic(const Web& w) {
  if (!is_non_elliptic(w)) throw Error(ErrorCode::NotNonElliptic, "web has a circle, digon or square");
}

bool below(const LaurentPoly& p, int n) {
  const auto d = p.degree();
  return !d || *d < n;
}

bool monic_of_degree(const LaurentPoly& p, int n) { return p.is_monic_symmetric() && p.degree() == n; }

Verdict nice_verdict(bool same, const LaurentPoly& witness, int n) {
  const bool ok = same ? monic_of_degree(witness, n) : below(witness, n);
  return ok ? Verdict::Nice : Verdict::Inconclusive;
}

}  // namespace

Certificate certify_indecomposable(const Web& w) {
  BracketEvaluator eval;
  return certify_indecomposable(w, eval);
}

Certificate certify_indecomposable(const Web& w, BracketEvaluator& eval) {
  require_non_elliptic(w);
  Certificate c;
  c.subjects = {w};
  c.boundary_length = static_cast<int>(w.boundary().size());
  c.witness = eval.bracket(glue(w, w));
  c.kind = monic_of_degree(c.witness, c.boundary_length) ? Verdict::Indecomposable : Verdict::Inconclusive;
  return c;
}

Certificate certify_not_isomorphic(const Web& w1, const Web& w2) {
  BracketEvaluator eval;
  return certify_not_isomorphic(w1, w2, eval);
}

Certificate certify_not_isomorphic(const Web& w1, const Web& w2, BracketEvaluator& eval) {
  require_same_boundary(w1, w2);
  if (w1 == w2) throw Error(ErrorCode::IdenticalWebs, "the two webs have the same canonical form");
  require_non_elliptic(w1);
  require_non_elliptic(w2);
  Certificate c;
  c.subjects = {w1, w2};
  c.boundary_length = static_cast<int>(w1.boundary().size());
  c.witness = eval.bracket(glue(w1, w2));
  c.kind = below(c.witness, c.boundary_length) ? Verdict::NotIsomorphic : Verdict::Inconclusive;
  return c;
}

Certificate is_nice(const Web& w1, const Web& w2) {
  BracketEvaluator eval;
  return is_nice(w1, w2, eval);
}

Certificate is_nice(const Web& w1, const Web& w2, BracketEvaluator& eval) {
  require_same_boundary(w1, w2);
  for (const Web* w : {&w1, &w2}) {
    require_non_elliptic(*w);
    if (!is_superficial(*w)) throw Error(ErrorCode::NotSuperficial, "web has a nested face");
  }
  Certificate c;
  c.subjects = {w1, w2};
  c.boundary_length = static_cast<int>(w1.boundary().size());
  c.witness = eval.bracket(glue(w1, w2));
  c.kind = nice_verdict(w1 == w2, c.witness, c.boundary_length);
  return c;
}

bool recheck(const Certificate& c) {
  if (c.subjects.empty()) return false;
  const Web& a = c.subjects.front();
  const Web& b = c.subjects.back();
  const LaurentPoly witness = kuperberg_bracket(glue(a, b));
  if (witness != c.witness || c.boundary_length != static_cast<int>(a.boundary().size())) return false;
  const int n = c.boundary_length;
  switch (c.kind) {
    case Verdict::Indecomposable: return c.subjects.size() == 1 && monic_of_degree(witness, n);
    case Verdict::NotIsomorphic: return c.subjects.size() == 2 && below(witness, n);
    case Verdict::Nice: return nice_verdict(a == b, witness, n) == Verdict::Nice;
    case Verdict::Inconclusive: return true;
  }
  return false;
}

KeyLemmaReport verify_key_lemma(int max_len, std::optional<int> budget, int jobs) {
  if (max_len < 0) throw Error(ErrorCode::InvalidArgument, "max length must be nonnegative");
  KeyLemmaReport report;
  report.max_len = max_len;
  report.budget = budget;
  struct Task {
    std::size_t row;
    const Web* a;
    const Web* b;
    bool same;
  };
  std::vector<std::vector<Web>> webs;
  for (int l = 0; l <= max_len; ++l) {
    for (const SignSequence& eps : admissible_sequences(l)) {
      webs.push_back(enumerate_superficial_non_elliptic(eps, budget.value_or(default_vertex_budget(eps))));
      KeyLemmaReport::Row row;
      row.eps = eps;
      row.webs = static_cast<int>(webs.back().size());
      report.rows.push_back(row);
    }
  }
  std::vector<Task> tasks;
  for (std::size_t r = 0; r < webs.size(); ++r) {
    for (std::size_t i = 0; i < webs[r].size(); ++i) {
      for (std::size_t j = 0; j < webs[r].size(); ++j) tasks.push_back({r, &webs[r][i], &webs[r][j], i == j});
    }
  }
  std::vector<Certificate> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BracketEvaluator eval;
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      const Task& task = tasks[t];
      Certificate c;
      c.subjects = {*task.a, *task.b};
      c.boundary_length = static_cast<int>(task.a->boundary().size());
      c.witness = eval.bracket(glue(*task.a, *task.b));
      c.kind = nice_verdict(task.same, c.witness, c.boundary_length);
      results[t] = std::move(c);
    }
  };
  const int width = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int k = 1; k < width; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto& row = report.rows[tasks[t].row];
    ++row.pairs;
    ++report.pairs_checked;
    if (tasks[t].same) ++report.symmetric_pairs;
    if (results[t].kind == Verdict::Nice) {
      ++row.nice;
    } else {
      report.counterexamples.push_back(std::move(results[t]));
    }
  }
  return report;
}

}  // namespace sl3
