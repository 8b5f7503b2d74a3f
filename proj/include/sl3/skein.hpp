#pragma once

#include "sl3/laurent.hpp"
#include "sl3/web.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace sl3 {

enum class FeatureKind : std::uint8_t { Circle, Digon, Square };

std::string_view feature_kind_name(FeatureKind kind);

/// A reducible piece of a web; `face` is a face id of Web::faces() (the disk
/// face for a circle).
struct Feature {
  FeatureKind kind;
  int face;
  friend bool operator==(const Feature&, const Feature&) = default;
};

/// Finite sum of webs with Laurent polynomial coefficients, keyed by
/// canonical form. All webs share one boundary.
class SkeinElement {
 public:
  struct Term {
    Web web;
    LaurentPoly coeff;
  };

  SkeinElement() = default;
  explicit SkeinElement(SignSequence boundary) : boundary_(std::move(boundary)) {}
  static SkeinElement single(const Web& w, LaurentPoly coeff = LaurentPoly(1));

  const SignSequence& boundary() const noexcept { return boundary_; }
  const std::map<std::string, Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Web& w, const LaurentPoly& coeff);
  SkeinElement& operator+=(const SkeinElement& other);
  SkeinElement scaled(const LaurentPoly& c) const;
  LaurentPoly coefficient(const Web& w) const;

 private:
  SignSequence boundary_;
  std::map<std::string, Term> terms_;
};

/// All circles, digons and squares, in policy order: circles, then digons,
/// then squares, each by ascending face id. Digons and squares must be
/// simple bounded faces.
std::vector<Feature> reducible_features(const Web& w);
std::optional<Feature> find_reducible(const Web& w);

SkeinElement reduce_circle(const Web& w, int face);
SkeinElement reduce_digon(const Web& w, int face);
SkeinElement resolve_square(const Web& w, int face);
SkeinElement reduce_feature(const Web& w, const Feature& f);

enum class ReductionPolicy : std::uint8_t { Canonical, Random };

/// Memoizing bracket evaluator. Not thread-safe: give each worker its own.
class BracketEvaluator {
 public:
  explicit BracketEvaluator(ReductionPolicy policy = ReductionPolicy::Canonical, std::uint64_t seed = 0);

  /// Throws NOT_CLOSED for webs with boundary.
  LaurentPoly bracket(const Web& w);
  /// Bracket of a closed map (no boundary, no circles); any number of pieces.
  LaurentPoly bracket_map(const PlaneMap& map);

  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct CodeHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  LaurentPoly connected(const PlaneMap& map);
  LaurentPoly pieces(const PlaneMap& map);

  ReductionPolicy policy_;
  std::mt19937_64 rng_;
  std::unordered_map<std::vector<int>, LaurentPoly, CodeHash> memo_;
};

/// Canonical code of a connected closed map, invariant under relabeling.
std::vector<int> closed_map_code(const PlaneMap& map);

/// Bracket with a per-thread shared evaluator.
LaurentPoly kuperberg_bracket(const Web& w);

/// Rewrites w into a combination of non-elliptic webs. Closed components and
/// circles are evaluated to scalars; digons and squares of bounded faces are
/// reduced until no term has one.
SkeinElement reduce_to_nonelliptic(const Web& w);
SkeinElement reduce_to_nonelliptic(const Web& w, BracketEvaluator& eval);

/// q^{l(eps)} times the bracket of glue(w1, w2).
LaurentPoly graded_hom_dim(const Web& w1, const Web& w2);
LaurentPoly graded_hom_dim(const Web& w1, const Web& w2, BracketEvaluator& eval);

}  // namespace sl3
