#pragma once

#include "sl3/enumerate.hpp"
#include "sl3/foam.hpp"
#include "sl3/skein.hpp"
#include "sl3/web.hpp"
#include "sl3/web_text.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace sl3::testing {

inline std::string fixture(const std::string& name) { return std::string(SL3_FIXTURE_DIR) + "/" + name; }

inline Web load(const std::string& name) { return parse_web_file(fixture(name)).front().web; }

/// One step of growing a web from the empty boundary.
struct GrowStep {
  enum Kind { Arc, Y, H } kind;
  int pos;
  Sign sign;
};

inline Web apply(const Web& w, const GrowStep& s) {
  switch (s.kind) {
    case GrowStep::Arc: return insert_arc(w, s.pos, s.sign);
    case GrowStep::Y: return insert_y(w, s.pos);
    case GrowStep::H: return insert_h(w, s.pos);
  }
  return w;
}

inline Web grow(const std::vector<GrowStep>& steps) {
  Web w = Web::empty();
  for (const auto& s : steps) w = apply(w, s);
  return w;
}

/// Positions p where points p, p+1 carry opposite signs.
inline std::vector<int> h_positions(const SignSequence& b) {
  std::vector<int> out;
  for (std::size_t p = 0; p + 1 < b.size(); ++p)
    if (b[p] != b[p + 1]) out.push_back(static_cast<int>(p));
  return out;
}

/// A random growth sequence with `len` steps, boundaries kept below max_points.
inline std::vector<GrowStep> random_steps(std::mt19937_64& rng, int len, int max_points) {
  std::vector<GrowStep> steps;
  Web w = Web::empty();
  while (static_cast<int>(steps.size()) < len) {
    const int n = static_cast<int>(w.boundary().size());
    auto hp = h_positions(w.boundary());
    std::vector<GrowStep::Kind> options;
    if (n + 2 <= max_points || n == 0) options.push_back(GrowStep::Arc);
    if (n >= 1 && n + 1 <= max_points) options.push_back(GrowStep::Y);
    if (!hp.empty()) options.push_back(GrowStep::H);
    if (options.empty()) options.push_back(GrowStep::Arc);
    GrowStep s{options[rng() % options.size()], 0, Sign::Plus};
    if (s.kind == GrowStep::Arc) {
      s.pos = static_cast<int>(rng() % (n + 1));
      s.sign = rng() % 2 ? Sign::Plus : Sign::Minus;
    } else if (s.kind == GrowStep::Y) {
      s.pos = static_cast<int>(rng() % n);
    } else {
      s.pos = hp[rng() % hp.size()];
    }
    w = apply(w, s);
    steps.push_back(s);
  }
  return steps;
}

/// Same boundary evolution as `steps`, with pairs of H moves slipped in.
inline std::vector<GrowStep> with_double_h(std::mt19937_64& rng, const std::vector<GrowStep>& steps, int pairs) {
  std::vector<GrowStep> out;
  Web w = Web::empty();
  for (const auto& s : steps) {
    w = apply(w, s);
    out.push_back(s);
    auto hp = h_positions(w.boundary());
    if (pairs > 0 && !hp.empty() && rng() % 3 == 0) {
      int p = hp[rng() % hp.size()];
      GrowStep h{GrowStep::H, p, Sign::Plus};
      w = apply(apply(w, h), h);
      out.push_back(h);
      out.push_back(h);
      --pairs;
    }
  }
  return out;
}

/// Random closed web: two growths with the same boundary glued together.
inline Web random_closed_web(std::mt19937_64& rng, int len, int max_points) {
  auto a = random_steps(rng, len, max_points);
  auto b = with_double_h(rng, a, static_cast<int>(rng() % 3));
  if (rng() % 2) std::swap(a, b);
  return glue(grow(a), grow(b));
}

/// 200 random closed webs, every tenth with a nested second component.
inline const std::vector<Web>& closed_corpus() {
  static const std::vector<Web> corpus = [] {
    std::mt19937_64 rng(2024);
    std::vector<Web> out;
    while (out.size() < 200) {
      int len = 2 + static_cast<int>(rng() % 11);
      Web w = random_closed_web(rng, len, 8);
      if (out.size() % 10 == 9) {
        Host host = w.map().dart_count() > 0 ? Host::face_left_of(0)
                    : w.circle_count() > 0   ? Host::inside_circle(0)
                                             : Host::unbounded();
        w = disjoint_union(w, random_closed_web(rng, 3, 4), host);
      }
      if (w.vertex_count() > 0 || w.circle_count() > 0) out.push_back(w);
    }
    return out;
  }();
  return corpus;
}

/// Bracket by plain recursive rewriting, no memo, random feature choice.
inline LaurentPoly naive_bracket(const Web& w, std::mt19937_64& rng) {
  if (w.vertex_count() == 0) return LaurentPoly::quantum_int(3).pow(w.circle_count());
  auto feats = reducible_features(w);
  if (feats.empty()) throw std::logic_error("closed web without a reducible feature");
  SkeinElement next = reduce_feature(w, feats[rng() % feats.size()]);
  LaurentPoly total;
  for (const auto& [key, term] : next.terms()) total += term.coeff * naive_bracket(term.web, rng);
  return total;
}

/// Invariant count by walking dominant sl3 weights: + adds a weight of V,
/// - a weight of V*. Coordinates are in the fundamental weight basis.
inline std::uint64_t dominant_path_count(const SignSequence& eps) {
  static const int plus[3][2] = {{1, 0}, {-1, 1}, {0, -1}};
  static const int minus[3][2] = {{0, 1}, {1, -1}, {-1, 0}};
  std::map<std::pair<int, int>, std::uint64_t> cur{{{0, 0}, 1}};
  for (Sign s : eps.signs()) {
    std::map<std::pair<int, int>, std::uint64_t> next;
    for (const auto& [wt, n] : cur)
      for (const auto& d : (s == Sign::Plus ? plus : minus)) {
        int a = wt.first + d[0], b = wt.second + d[1];
        if (a >= 0 && b >= 0) next[{a, b}] += n;
      }
    cur = std::move(next);
  }
  auto it = cur.find({0, 0});
  return it == cur.end() ? 0 : it->second;
}

/// Webs one or more rungs away from superficial non-elliptic ones.
inline std::vector<Web> rung_variants(const std::vector<Web>& base, int rungs) {
  std::vector<Web> out;
  for (const auto& w : base)
    for (int p : h_positions(w.boundary())) {
      Web v = w;
      for (int i = 0; i < rungs; ++i) v = insert_h(v, p);
      out.push_back(v);
      if (rungs == 2)
        for (int p2 : h_positions(v.boundary()))
          if (p2 != p) out.push_back(insert_h(insert_h(v, p2), p2));
    }
  return out;
}

/// Random closed pre-foam: up to eight facets, extra disks pad the slot count.
inline PreFoam random_foam(std::mt19937_64& rng) {
  PreFoam f;
  f.name = "r";
  int facets = 1 + static_cast<int>(rng() % 8);
  int slots = 0;
  for (int i = 0; i < facets; ++i) {
    int s = static_cast<int>(rng() % 4);
    f.facets.push_back({"f" + std::to_string(i), static_cast<int>(rng() % 4 == 0), static_cast<int>(rng() % 3), s, 0});
    slots += s;
  }
  while (slots % 3) {
    f.facets.push_back({"d" + std::to_string(slots), 0, static_cast<int>(rng() % 3), 1, 0});
    ++slots;
  }
  std::vector<PreFoam::Attachment> legs;
  for (int i = 0; i < static_cast<int>(f.facets.size()); ++i)
    for (int s = 0; s < f.facets[i].slots; ++s) legs.push_back({i, s});
  std::shuffle(legs.begin(), legs.end(), rng);
  for (std::size_t k = 0; k + 2 < legs.size(); k += 3)
    f.circles.push_back({"c" + std::to_string(k / 3), {legs[k], legs[k + 1], legs[k + 2]}, 0});
  return f;
}

}  // namespace sl3::testing
