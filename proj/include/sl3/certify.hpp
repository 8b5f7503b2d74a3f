#pragma once

#include "sl3/laurent.hpp"
#include "sl3/skein.hpp"
#include "sl3/web.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl3 {

enum class Verdict : std::uint8_t { Indecomposable, NotIsomorphic, Nice, Inconclusive };

std::string_view verdict_name(Verdict v);

/// A verdict together with the bracket it was read from. The witness is the
/// bracket of glue(subjects[0], subjects.back()).
struct Certificate {
  Verdict kind = Verdict::Inconclusive;
  std::vector<Web> subjects;
  LaurentPoly witness;
  int boundary_length = 0;
};

/// INDECOMPOSABLE when the self-pairing bracket is monic symmetric of degree
/// l(eps); INCONCLUSIVE otherwise.
Certificate certify_indecomposable(const Web& w);
Certificate certify_indecomposable(const Web& w, BracketEvaluator& eval);

/// NOT_ISOMORPHIC when the mixed bracket has degree below l(eps).
Certificate certify_not_isomorphic(const Web& w1, const Web& w2);
Certificate certify_not_isomorphic(const Web& w1, const Web& w2, BracketEvaluator& eval);

/// NICE for a superficial non-elliptic pair satisfying the dichotomy: equal
/// webs with a monic bracket of degree l(eps), or distinct webs with degree
/// below l(eps). INCONCLUSIVE otherwise.
Certificate is_nice(const Web& w1, const Web& w2);
Certificate is_nice(const Web& w1, const Web& w2, BracketEvaluator& eval);

/// Recomputes the witness and the verdict from the stored webs.
bool recheck(const Certificate& c);

struct KeyLemmaReport {
  struct Row {
    SignSequence eps;
    int webs = 0;
    long pairs = 0;
    long nice = 0;
  };
  int max_len = 0;
  std::optional<int> budget;  // nullopt: 2 l^2 per boundary
  std::vector<Row> rows;
  std::vector<Certificate> counterexamples;
  long pairs_checked = 0;
  long symmetric_pairs = 0;

  bool all_nice() const { return counterexamples.empty(); }
};

/// Checks every ordered pair of superficial non-elliptic eps-webs for all
/// admissible eps with l(eps) <= max_len. Throws BUDGET_EXCEEDED when an
/// enumeration is not certified complete.
KeyLemmaReport verify_key_lemma(int max_len, std::optional<int> budget = std::nullopt, int jobs = 1);

}  // namespace sl3
