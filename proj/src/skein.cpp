#include "sl3/skein.hpp"

#include "sl3/classify.hpp"
#include "sl3/error.hpp"

#include <algorithm>
#include <functional>

namespace sl3 {

std::string_view feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Circle: return "circle";
    case FeatureKind::Digon: return "digon";
    case FeatureKind::Square: return "square";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SkeinElement

SkeinElement SkeinElement::single(const Web& w, LaurentPoly coeff) {
  SkeinElement s(w.boundary());
  s.add(w, coeff);
  return s;
}

void SkeinElement::add(const Web& w, const LaurentPoly& coeff) {
  if (w.boundary() != boundary_) {
    throw Error(ErrorCode::BoundaryMismatch,
                "term with boundary " + w.boundary().to_string() + " added to a sum over " + boundary_.to_string());
  }
  if (coeff.is_zero()) return;
  std::string key = w.canonical_key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{w, coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& other) {
  for (const auto& [key, t] : other.terms_) add(t.web, t.coeff);
  return *this;
}

SkeinElement SkeinElement::scaled(const LaurentPoly& c) const {
  SkeinElement out(boundary_);
  if (c.is_zero()) return out;
  for (const auto& [key, t] : terms_) out.terms_.emplace(key, Term{t.web, t.coeff * c});
  return out;
}

LaurentPoly SkeinElement::coefficient(const Web& w) const {
  auto it = terms_.find(w.canonical_key());
  return it == terms_.end() ? LaurentPoly() : it->second.coeff;
}

// ---------------------------------------------------------------------------
// Web-level reductions

std::vector<Feature> reducible_features(const Web& w) {
  const FaceMap fm = w.faces();
  std::vector<Feature> circles, digons, squares;
  for (int c = 0; c < w.circle_count(); ++c) circles.push_back({FeatureKind::Circle, fm.circle_inside[c]});
  for (int f = 1; f < static_cast<int>(fm.size()); ++f) {
    const Face& face = fm.faces[f];
    if (face.circle_disk || !face.simple()) continue;
    if (face.sides == 2) digons.push_back({FeatureKind::Digon, f});
    if (face.sides == 4) squares.push_back({FeatureKind::Square, f});
  }
  std::sort(circles.begin(), circles.end(), [](auto& a, auto& b) { return a.face < b.face; });
  circles.insert(circles.end(), digons.begin(), digons.end());
  circles.insert(circles.end(), squares.begin(), squares.end());
  return circles;
}

std::optional<Feature> find_reducible(const Web& w) {
  auto all = reducible_features(w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

/// Darts of the boundary walk of a simple face of the given size.
std::vector<int> face_walk(const Web& w, const FaceMap& fm, int face, int sides, FeatureKind kind) {
  if (face <= 0 || face >= static_cast<int>(fm.size()) || fm.faces[face].circle_disk || !fm.faces[face].simple() ||
      fm.faces[face].sides != sides) {
    throw Error(ErrorCode::WrongFaceKind,
                "face " + std::to_string(face) + " is not a " + std::string(feature_kind_name(kind)));
  }
  const PlaneMap& m = w.map();
  int start = -1;
  for (int d = 0; d < m.dart_count() && start == -1; ++d) {
    if (fm.face_of_dart[d] == face) start = d;
  }
  std::vector<int> walk;
  int d = start;
  do {
    walk.push_back(d);
    d = m.face_step(d);
  } while (d != start);
  std::vector<int> verts;
  for (int x : walk) verts.push_back(m.vertex_of(x));
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw Error(ErrorCode::Malformed, "face walk revisits a vertex");
  }
  return walk;
}

}  // namespace

SkeinElement reduce_circle(const Web& w, int face) {
  const FaceMap fm = w.faces();
  int c = -1;
  for (int k = 0; k < w.circle_count(); ++k) {
    if (fm.circle_inside[k] == face) c = k;
  }
  if (c == -1) throw Error(ErrorCode::WrongFaceKind, "face " + std::to_string(face) + " is not a circle");
  const Host removed = w.circle_hosts()[c];
  auto remap = [&](Host h) {
    if (h.kind != Host::Kind::InsideCircle) return h;
    if (h.index == c) return removed;
    if (h.index > c) --h.index;
    return h;
  };
  std::vector<Host> circles;
  for (int k = 0; k < w.circle_count(); ++k) {
    if (k != c) circles.push_back(remap(w.circle_hosts()[k]));
  }
  std::vector<ComponentNest> nests;
  for (const auto& comp : w.closed_components()) nests.push_back({comp.outer_dart, comp.outer_dart, remap(comp.host)});
  return SkeinElement::single(Web::assemble(w.map(), std::move(circles), std::move(nests)), quantum_int(3));
}

SkeinElement reduce_digon(const Web& w, int face) {
  const auto walk = face_walk(w, w.faces(), face, 2, FeatureKind::Digon);
  return SkeinElement::single(delete_edges_and_fuse(w, {walk[0]}), quantum_int(2));
}

SkeinElement resolve_square(const Web& w, int face) {
  const auto walk = face_walk(w, w.faces(), face, 4, FeatureKind::Square);
  SkeinElement out(w.boundary());
  out.add(delete_edges_and_fuse(w, {walk[0], walk[2]}), LaurentPoly(1));
  out.add(delete_edges_and_fuse(w, {walk[1], walk[3]}), LaurentPoly(1));
  return out;
}

SkeinElement reduce_feature(const Web& w, const Feature& f) {
  switch (f.kind) {
    case FeatureKind::Circle: return reduce_circle(w, f.face);
    case FeatureKind::Digon: return reduce_digon(w, f.face);
    case FeatureKind::Square: return resolve_square(w, f.face);
  }
  return SkeinElement(w.boundary());
}

// ---------------------------------------------------------------------------
// Closed-map engine

namespace {

/// Deletes the edges of `dead` darts from a closed map and fuses the
/// 2-valent vertices. Returns the number of strands closing into circles.
int fuse_closed(const PlaneMap& m, const std::vector<int>& dead_darts, PlaneMap& out) {
  const int V = m.vertex_count();
  const int D = m.dart_count();
  std::vector<char> dead(D, 0), removed(V, 0), visited(D, 0);
  for (int d : dead_darts) {
    dead[d] = dead[m.twin[d]] = 1;
    removed[d / 3] = removed[m.twin[d] / 3] = 1;
  }
  auto partner = [&](int t) {
    const int base = t - t % 3;
    for (int r = 0; r < 3; ++r) {
      if (base + r != t && !dead[base + r]) return base + r;
    }
    return -1;
  };
  std::vector<int> new_index(V, -1);
  int NV = 0;
  for (int v = 0; v < V; ++v) {
    if (!removed[v]) new_index[v] = NV++;
  }
  out.boundary = SignSequence();
  out.polarity.clear();
  for (int v = 0; v < V; ++v) {
    if (!removed[v]) out.polarity.push_back(m.polarity[v]);
  }
  out.twin.assign(3 * NV, -1);
  for (int y = 0; y < D; ++y) {
    if (removed[y / 3]) continue;
    int t = m.twin[y];
    while (removed[t / 3]) {
      visited[t] = 1;
      const int p = partner(t);
      visited[p] = 1;
      t = m.twin[p];
    }
    out.twin[3 * new_index[y / 3] + y % 3] = 3 * new_index[t / 3] + t % 3;
  }
  int circles = 0;
  for (int t = 0; t < D; ++t) {
    if (!removed[t / 3] || dead[t] || visited[t]) continue;
    ++circles;
    int x = t;
    do {
      visited[x] = 1;
      const int p = partner(x);
      visited[p] = 1;
      x = m.twin[p];
    } while (x != t);
  }
  return circles;
}

}  // namespace

std::vector<int> closed_map_code(const PlaneMap& m) {
  const int V = m.vertex_count();
  const int D = 3 * V;
  std::vector<int> orbit(D, -1), orbit_size;
  for (int d = 0; d < D; ++d) {
    if (orbit[d] != -1) continue;
    int x = d, size = 0;
    do {
      orbit[x] = static_cast<int>(orbit_size.size());
      ++size;
      x = m.face_step(x);
    } while (x != d);
    orbit_size.push_back(size);
  }
  // Starting darts: at sinks, with the smallest pair of adjacent face sizes.
  auto signature = [&](int d) { return orbit_size[orbit[d]] * (D + 1) + orbit_size[orbit[m.twin[d]]]; };
  int best_sig = -1;
  std::vector<int> starts;
  for (int d = 0; d < D; ++d) {
    if (m.polarity[d / 3] != Polarity::Sink) continue;
    const int s = signature(d);
    if (best_sig == -1 || s < best_sig) {
      best_sig = s;
      starts.clear();
    }
    if (s == best_sig) starts.push_back(d);
  }

  std::vector<int> best, code, vlabel(V), offset(V), order;
  code.reserve(D);
  order.reserve(V);
  for (int s : starts) {
    std::fill(vlabel.begin(), vlabel.end(), -1);
    order.clear();
    code.clear();
    bool less = best.empty();
    bool aborted = false;
    auto visit = [&](int dart) {
      const int v = dart / 3;
      if (vlabel[v] != -1) return;
      vlabel[v] = static_cast<int>(order.size());
      offset[v] = dart % 3;
      order.push_back(v);
    };
    visit(s);
    for (std::size_t i = 0; i < order.size() && !aborted; ++i) {
      const int v = order[i];
      for (int r = 0; r < 3; ++r) {
        const int t = m.twin[3 * v + (offset[v] + r) % 3];
        visit(t);
        const int u = t / 3;
        const int val = 3 * vlabel[u] + (t % 3 - offset[u] + 3) % 3;
        if (!less) {
          const int ref = best[code.size()];
          if (val > ref) {
            aborted = true;
            break;
          }
          if (val < ref) less = true;
        }
        code.push_back(val);
      }
    }
    if (!aborted && less) best = code;
  }
  return best;
}

std::size_t BracketEvaluator::CodeHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BracketEvaluator::BracketEvaluator(ReductionPolicy policy, std::uint64_t seed) : policy_(policy), rng_(seed) {}

LaurentPoly BracketEvaluator::bracket(const Web& w) {
  if (!w.is_closed()) {
    throw Error(ErrorCode::NotClosed, "the bracket needs a closed web, got boundary " + w.boundary().to_string());
  }
  return quantum_int(3).pow(static_cast<unsigned>(w.circle_count())) * pieces(w.map());
}

LaurentPoly BracketEvaluator::bracket_map(const PlaneMap& map) {
  if (map.boundary_size() != 0) throw Error(ErrorCode::NotClosed, "the bracket needs a closed map");
  return pieces(map);
}

LaurentPoly BracketEvaluator::pieces(const PlaneMap& m) {
  const int V = m.vertex_count();
  std::vector<int> comp(V, -1);
  LaurentPoly result(1);
  for (int v0 = 0; v0 < V; ++v0) {
    if (comp[v0] != -1) continue;
    std::vector<int> verts{v0};
    comp[v0] = v0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (int r = 0; r < 3; ++r) {
        const int u = m.twin[3 * verts[i] + r] / 3;
        if (comp[u] == -1) {
          comp[u] = v0;
          verts.push_back(u);
        }
      }
    }
    if (static_cast<int>(verts.size()) == V) return connected(m);
    result *= connected(extract_submap(m, verts, {}));
  }
  return result;
}

LaurentPoly BracketEvaluator::connected(const PlaneMap& m) {
  if (m.vertex_count() == 0) return LaurentPoly(1);
  std::vector<int> code = closed_map_code(m);
  if (auto it = memo_.find(code); it != memo_.end()) return it->second;

  const int D = m.dart_count();
  std::vector<char> seen(D, 0);
  std::vector<std::vector<int>> digons, squares;
  for (int d = 0; d < D; ++d) {
    if (seen[d]) continue;
    std::vector<int> walk;
    int x = d;
    do {
      seen[x] = 1;
      walk.push_back(x);
      x = m.face_step(x);
    } while (x != d);
    if (walk.size() == 2) digons.push_back(std::move(walk));
    if (walk.size() == 4) squares.push_back(std::move(walk));
  }
  if (digons.empty() && squares.empty()) {
    throw Error(ErrorCode::Malformed, "closed web with vertices but no digon or square");
  }
  const std::vector<int>* chosen = nullptr;
  if (policy_ == ReductionPolicy::Random) {
    std::uniform_int_distribution<std::size_t> pick(0, digons.size() + squares.size() - 1);
    const std::size_t i = pick(rng_);
    chosen = i < digons.size() ? &digons[i] : &squares[i - digons.size()];
  } else {
    chosen = digons.empty() ? &squares.front() : &digons.front();
  }
  auto after = [&](const std::vector<int>& dead) {
    PlaneMap next;
    const int circles = fuse_closed(m, dead, next);
    return quantum_int(3).pow(static_cast<unsigned>(circles)) * pieces(next);
  };
  const std::vector<int>& f = *chosen;
  LaurentPoly result;
  if (f.size() == 2) {
    result = quantum_int(2) * after({f[0]});
  } else {
    std::vector<int> verts{f[0] / 3, f[1] / 3, f[2] / 3, f[3] / 3};
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
      throw Error(ErrorCode::Malformed, "square face revisits a vertex");
    }
    result = after({f[0], f[2]}) + after({f[1], f[3]});
  }
  memo_.emplace(std::move(code), result);
  return result;
}

LaurentPoly kuperberg_bracket(const Web& w) {
  thread_local BracketEvaluator eval;
  return eval.bracket(w);
}

// ---------------------------------------------------------------------------
// Reduction to the non-elliptic basis

namespace {

/// Evaluates closed components and circles; returns the scalar and the part
/// attached to the boundary.
std::pair<LaurentPoly, Web> split_closed(const Web& w, BracketEvaluator& eval) {
  if (w.closed_components().empty() && w.circle_count() == 0) return {LaurentPoly(1), w};
  const PlaneMap& m = w.map();
  LaurentPoly scalar = quantum_int(3).pow(static_cast<unsigned>(w.circle_count()));
  std::vector<std::vector<int>> verts(w.closed_components().size());
  std::vector<int> root;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const int c = w.component_of(3 * v);
    (c == -1 ? root : verts[c]).push_back(v);
  }
  for (const auto& vs : verts) scalar *= eval.bracket_map(extract_submap(m, vs, {}));
  std::vector<int> points(m.boundary_size());
  for (int k = 0; k < m.boundary_size(); ++k) points[k] = k;
  return {scalar, Web::assemble(extract_submap(m, root, points))};
}

}  // namespace

SkeinElement reduce_to_nonelliptic(const Web& w) {
  BracketEvaluator eval;
  return reduce_to_nonelliptic(w, eval);
}

SkeinElement reduce_to_nonelliptic(const Web& w, BracketEvaluator& eval) {
  SkeinElement result(w.boundary());
  // Larger webs first, so equal intermediate terms merge before expanding.
  std::map<std::pair<int, std::string>, SkeinElement::Term, std::greater<>> work;
  auto push = [&](const Web& x, const LaurentPoly& c) {
    auto [scalar, rest] = split_closed(x, eval);
    LaurentPoly coeff = c * scalar;
    if (coeff.is_zero()) return;
    std::pair<int, std::string> key{rest.vertex_count(), rest.canonical_key()};
    auto it = work.find(key);
    if (it == work.end()) {
      work.emplace(std::move(key), SkeinElement::Term{std::move(rest), std::move(coeff)});
    } else {
      it->second.coeff += coeff;
      if (it->second.coeff.is_zero()) work.erase(it);
    }
  };
  push(w, LaurentPoly(1));
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const SkeinElement::Term& t = node.mapped();
    const auto feature = find_reducible(t.web);
    if (!feature) {
      result.add(t.web, t.coeff);
      continue;
    }
    const SkeinElement next = reduce_feature(t.web, *feature);
    for (const auto& [key, term] : next.terms()) push(term.web, term.coeff * t.coeff);
  }
  return result;
}

LaurentPoly graded_hom_dim(const Web& w1, const Web& w2) {
  thread_local BracketEvaluator eval;
  return graded_hom_dim(w1, w2, eval);
}

LaurentPoly graded_hom_dim(const Web& w1, const Web& w2, BracketEvaluator& eval) {
  if (w1.boundary() != w2.boundary()) {
    throw Error(ErrorCode::BoundaryMismatch,
                "boundaries " + w1.boundary().to_string() + " and " + w2.boundary().to_string() + " differ");
  }
  if (!is_non_elliptic(w1) || !is_non_elliptic(w2)) {
    throw Error(ErrorCode::NotNonElliptic, "hom dimensions are defined for non-elliptic webs");
  }
  return eval.bracket(glue(w1, w2)).shift(static_cast<int>(w1.boundary().size()));
}

}  // namespace sl3
