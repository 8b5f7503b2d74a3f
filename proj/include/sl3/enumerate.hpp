#pragma once

#include "sl3/signs.hpp"
#include "sl3/web.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sl3 {

/// Dominant sl3 weight (p, q) to multiplicity.
using WeightMultiset = std::map<std::pair<int, int>, std::uint64_t>;

/// Decomposition of the tensor product of V (for +) and V* (for -) factors.
WeightMultiset tensor_weights(const SignSequence& eps);

/// Multiplicity of the trivial representation in that tensor product.
std::uint64_t invariant_dim(const SignSequence& eps);

int default_vertex_budget(const SignSequence& eps);

struct Enumeration {
  std::vector<Web> webs;  // sorted by canonical key
  bool complete = true;   // false: webs beyond the budget may exist
  int budget = 0;
};

/// Every non-elliptic eps-web with at most `vertex_budget` vertices.
///
/// Webs are grown from smaller boundaries by inserting an arc, a Y or an H
/// at two cyclically adjacent points; every non-elliptic web with boundary
/// arises this way. The list is certified complete when all reachable
/// boundary sequences have no webs with budget+1 or budget+2 vertices.
/// `seed` shuffles the search order (results are order-independent).
Enumeration search_non_elliptic(const SignSequence& eps, int vertex_budget,
                                std::optional<std::uint64_t> seed = std::nullopt);

/// As above, restricted to superficial webs.
Enumeration search_superficial_non_elliptic(const SignSequence& eps, int vertex_budget,
                                            std::optional<std::uint64_t> seed = std::nullopt);

/// Throws BUDGET_EXCEEDED when the list is not certified complete.
std::vector<Web> enumerate_non_elliptic(const SignSequence& eps, int vertex_budget);
std::vector<Web> enumerate_superficial_non_elliptic(const SignSequence& eps, int vertex_budget);

// Boundary surgery used by the search; positions are 0-based.

/// Relabels boundary points cyclically: new point j is old point (j + k) mod n.
Web rotate_boundary(const Web& w, int k);
/// New points p, p+1 with signs (s, -s) joined by an arc.
Web insert_arc(const Web& w, int p, Sign s);
/// Point p (sign s) becomes two points of sign -s meeting at a new vertex.
Web insert_y(const Web& w, int p);
/// Points p, p+1 (signs s, -s) become -s, s through two new adjacent vertices.
Web insert_h(const Web& w, int p);

}  // namespace sl3
