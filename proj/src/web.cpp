#include "sl3/web.hpp"

#include "sl3/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace sl3 {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

/// Face orbit index of every dart; orbits numbered by their smallest dart.
std::vector<int> face_orbits(const PlaneMap& m, int& orbit_count) {
  std::vector<int> orbit(m.dart_count(), -1);
  orbit_count = 0;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (orbit[d] != -1) continue;
    int x = d;
    do {
      orbit[x] = orbit_count;
      x = m.face_step(x);
    } while (x != d);
    ++orbit_count;
  }
  return orbit;
}

}  // namespace

PlaneMap extract_submap(const PlaneMap& m, const std::vector<int>& vertices, const std::vector<int>& points) {
  std::vector<int> new_dart(m.dart_count(), -1);
  const int nv = static_cast<int>(vertices.size());
  for (int i = 0; i < nv; ++i) {
    for (int r = 0; r < 3; ++r) new_dart[3 * vertices[i] + r] = 3 * i + r;
  }
  for (std::size_t k = 0; k < points.size(); ++k) new_dart[m.boundary_dart(points[k])] = 3 * nv + static_cast<int>(k);
  PlaneMap out;
  std::vector<Sign> signs;
  for (int p : points) signs.push_back(m.boundary[p]);
  out.boundary = SignSequence(std::move(signs));
  for (int v : vertices) out.polarity.push_back(m.polarity[v]);
  out.twin.assign(3 * nv + points.size(), -1);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (new_dart[d] == -1) continue;
    out.twin[new_dart[d]] = new_dart[m.twin[d]];
  }
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

/// Breadth-first relabeling of one connected piece. With start == -1 the
/// piece is the root: the boundary node comes first with darts b_0..b_{n-1}.
/// Otherwise the vertex of `start` comes first, rotated so `start` leads.
/// Returns the serialized piece and fills `label` for its darts.
std::vector<int> piece_code(const PlaneMap& m, int start, std::vector<int>& label) {
  const int n = start == -1 ? m.boundary_size() : 0;
  std::vector<int> vlabel(m.vertex_count(), -1), offset(m.vertex_count(), 0);
  std::vector<int> order;
  auto visit = [&](int dart) {
    const int v = m.vertex_of(dart);
    if (v < 0 || vlabel[v] != -1) return;
    vlabel[v] = static_cast<int>(order.size());
    offset[v] = dart % 3;
    order.push_back(v);
  };
  if (start == -1) {
    for (int k = 0; k < n; ++k) visit(m.twin[m.boundary_dart(k)]);
  } else {
    visit(start);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int r = 0; r < 3; ++r) visit(m.twin[3 * v + (offset[v] + r) % 3]);
  }
  auto lab = [&](int d) {
    if (m.is_boundary_dart(d)) return m.boundary_index(d);
    const int v = m.vertex_of(d);
    return n + 3 * vlabel[v] + (d % 3 - offset[v] + 3) % 3;
  };
  std::vector<int> code;
  code.reserve(2 + n + 4 * order.size());
  if (start == -1) {
    code.push_back(n);
    for (int k = 0; k < n; ++k) {
      const int d = m.boundary_dart(k);
      label[d] = k;
      code.push_back(static_cast<int>(m.boundary[k]));
      code.push_back(lab(m.twin[d]));
    }
  }
  for (int v : order) {
    code.push_back(m.polarity[v] == Polarity::Source ? 1 : 0);
    for (int r = 0; r < 3; ++r) {
      const int d = 3 * v + (offset[v] + r) % 3;
      label[d] = lab(d);
      code.push_back(lab(m.twin[d]));
    }
  }
  return code;
}

}  // namespace

std::vector<std::vector<int>> map_components(const PlaneMap& m) {
  const int D = m.dart_count();
  UnionFind uf(D);
  for (int d = 0; d < D; ++d) {
    uf.unite(d, m.twin[d]);
    uf.unite(d, m.ccw_next(d));
  }
  std::map<int, std::vector<int>> groups;
  for (int d = 0; d < D; ++d) groups[uf.find(d)].push_back(d);
  std::vector<std::vector<int>> out;
  // The root piece (holding the boundary darts) goes first.
  if (m.boundary_size() > 0) {
    const int r = uf.find(m.boundary_dart(0));
    out.push_back(std::move(groups[r]));
    groups.erase(r);
  }
  for (auto& [root, darts] : groups) out.push_back(std::move(darts));
  return out;
}

// ---------------------------------------------------------------------------

Web Web::empty(SignSequence boundary) {
  if (!boundary.empty()) {
    throw Error(ErrorCode::BoundarySignMismatch, "an empty web has no boundary points");
  }
  return Web::assemble(PlaneMap{});
}

Web Web::circles(int k) {
  return Web::assemble(PlaneMap{}, std::vector<Host>(static_cast<std::size_t>(k), Host::unbounded()));
}

Web Web::assemble(PlaneMap map, std::vector<Host> circle_hosts, std::vector<ComponentNest> nests) {
  const int D = map.dart_count();
  if (D != 3 * map.vertex_count() + map.boundary_size()) {
    throw Error(ErrorCode::NonTrivalent, "dart count does not match three per vertex plus boundary");
  }
  for (int d = 0; d < D; ++d) {
    const int t = map.twin[d];
    if (t < 0 || t >= D || t == d || map.twin[t] != d) {
      throw Error(ErrorCode::Malformed, "dart pairing is not an involution at dart " + std::to_string(d));
    }
    if (map.outgoing(d) == map.outgoing(t)) {
      const bool at_border = map.is_boundary_dart(d) || map.is_boundary_dart(t);
      throw Error(at_border ? ErrorCode::BoundarySignMismatch : ErrorCode::MixedVertexOrientation,
                  "edge orientation conflicts at dart " + std::to_string(d));
    }
  }

  Web w;
  w.map_ = std::move(map);
  const PlaneMap& m = w.map_;
  int orbit_count = 0;
  const std::vector<int> orbit = face_orbits(m, orbit_count);
  std::vector<int> orbit_size(orbit_count, 0);
  for (int d = 0; d < D; ++d) ++orbit_size[orbit[d]];

  // Pieces and Euler characteristic.
  const auto pieces = map_components(m);
  w.component_of_dart_.assign(D, -1);
  std::size_t first_closed = 0;
  if (m.boundary_size() > 0) first_closed = 1;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& darts = pieces[i];
    std::vector<int> orbits;
    int vertices = 0;
    for (int d : darts) {
      orbits.push_back(orbit[d]);
      if (!m.is_boundary_dart(d) && d % 3 == 0) ++vertices;
    }
    std::sort(orbits.begin(), orbits.end());
    orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
    const bool root = i < first_closed;
    const int nodes = vertices + (root ? 1 : 0);
    const int edges = static_cast<int>(darts.size()) / 2;
    const int chi = nodes - edges + static_cast<int>(orbits.size());
    if (chi != 2) {
      throw Error(ErrorCode::Nonplanar, std::string(root ? "boundary-attached part" : "closed component") +
                                            " has V - E + F = " + std::to_string(chi) + " instead of 2");
    }
    if (!root) {
      const int idx = static_cast<int>(i - first_closed);
      for (int d : darts) w.component_of_dart_[d] = idx;
    }
  }
  const int C = static_cast<int>(pieces.size() - first_closed);
  const int K = static_cast<int>(circle_hosts.size());

  // Default placement: unbounded face, outer face = largest face of the piece.
  w.components_.assign(C, ClosedComponent{});
  std::vector<bool> nested(C, false);
  for (int c = 0; c < C; ++c) {
    int best = -1;
    for (int d : pieces[first_closed + c]) {
      if (best == -1 || orbit_size[orbit[d]] > orbit_size[orbit[best]]) best = d;
    }
    w.components_[c].outer_dart = best;
  }
  for (const ComponentNest& nest : nests) {
    if (nest.member_dart < 0 || nest.member_dart >= D || w.component_of_dart_[nest.member_dart] < 0) {
      throw Error(ErrorCode::MalformedContainment, "nesting names a component attached to the boundary");
    }
    const int c = w.component_of_dart_[nest.member_dart];
    if (nested[c]) throw Error(ErrorCode::MalformedContainment, "component nested twice");
    nested[c] = true;
    if (nest.outer_dart != -1) {
      if (nest.outer_dart < 0 || nest.outer_dart >= D || w.component_of_dart_[nest.outer_dart] != c) {
        throw Error(ErrorCode::MalformedContainment, "outer face reference lies outside its component");
      }
      w.components_[c].outer_dart = nest.outer_dart;
    }
    w.components_[c].host = nest.host;
  }
  w.circles_ = std::move(circle_hosts);

  // Containment graph: nodes 0..C-1 components, C..C+K-1 circles, -1 root.
  auto check_host = [&](const Host& h) {
    if (h.kind == Host::Kind::FaceLeftOf && (h.index < 0 || h.index >= D)) {
      throw Error(ErrorCode::MalformedContainment, "host face refers to an unknown dart");
    }
    if (h.kind == Host::Kind::InsideCircle && (h.index < 0 || h.index >= K)) {
      throw Error(ErrorCode::MalformedContainment, "host refers to an unknown circle");
    }
  };
  auto parent_of = [&](const Host& h) -> int {
    switch (h.kind) {
      case Host::Kind::Unbounded: return -1;
      case Host::Kind::FaceLeftOf: return w.component_of_dart_[h.index];
      case Host::Kind::InsideCircle: return C + h.index;
    }
    return -1;
  };
  auto host_of = [&](int node) -> const Host& {
    return node < C ? w.components_[node].host : w.circles_[node - C];
  };
  for (int node = 0; node < C + K; ++node) {
    check_host(host_of(node));
    int x = node;
    for (int steps = 0; steps <= C + K; ++steps) {
      x = parent_of(host_of(x));
      if (x == -1) break;
      if (x == node) throw Error(ErrorCode::MalformedContainment, "containment forms a cycle");
    }
    if (x != -1) throw Error(ErrorCode::MalformedContainment, "containment forms a cycle");
  }

  // A host on the outer face of a closed component is that component's host.
  auto normalize = [&](Host h) {
    while (h.kind == Host::Kind::FaceLeftOf) {
      const int c = w.component_of_dart_[h.index];
      if (c < 0 || orbit[h.index] != orbit[w.components_[c].outer_dart]) break;
      h = w.components_[c].host;
    }
    return h;
  };
  for (auto& comp : w.components_) comp.host = normalize(comp.host);
  for (auto& h : w.circles_) h = normalize(h);
  return w;
}

FaceMap Web::faces() const {
  const PlaneMap& m = map_;
  const int D = m.dart_count();
  int O = 0;
  const std::vector<int> orbit = face_orbits(m, O);
  const int K = circle_count();
  const int U = O;
  UnionFind uf(O + 1 + K);
  for (int d = 0; d < D; ++d) {
    if (m.is_boundary_dart(d)) uf.unite(orbit[d], U);
  }
  auto host_node = [&](const Host& h) {
    switch (h.kind) {
      case Host::Kind::Unbounded: return U;
      case Host::Kind::FaceLeftOf: return orbit[h.index];
      case Host::Kind::InsideCircle: return O + 1 + h.index;
    }
    return U;
  };
  for (const auto& comp : components_) uf.unite(orbit[comp.outer_dart], host_node(comp.host));

  FaceMap fm;
  std::vector<int> id_of_root(O + 1 + K, -1);
  auto face_id = [&](int node) {
    const int r = uf.find(node);
    if (id_of_root[r] == -1) {
      id_of_root[r] = static_cast<int>(fm.faces.size());
      fm.faces.emplace_back();
    }
    return id_of_root[r];
  };
  face_id(U);
  fm.face_of_dart.assign(D, -1);
  for (int d = 0; d < D; ++d) fm.face_of_dart[d] = face_id(orbit[d]);
  for (int c = 0; c < K; ++c) {
    fm.circle_inside.push_back(face_id(O + 1 + c));
    fm.circle_outside.push_back(face_id(host_node(circles_[c])));
  }
  for (auto& f : fm.faces) f.bounded = true;
  fm.faces[0].bounded = false;
  for (int d = 0; d < D; ++d) ++fm.faces[fm.face_of_dart[d]].sides;
  {
    std::vector<bool> counted(O, false);
    for (int d = 0; d < D; ++d) {
      if (counted[orbit[d]]) continue;
      counted[orbit[d]] = true;
      ++fm.faces[fm.face_of_dart[d]].walks;
    }
  }
  for (int c = 0; c < K; ++c) {
    auto& inside = fm.faces[fm.circle_inside[c]];
    ++inside.sides;
    ++inside.walks;
    inside.circle_disk = true;
    auto& outside = fm.faces[fm.circle_outside[c]];
    ++outside.sides;
    ++outside.walks;
  }
  auto link = [&](int a, int b) {
    if (a == b) return;
    fm.faces[a].adjacent.push_back(b);
    fm.faces[b].adjacent.push_back(a);
  };
  for (int d = 0; d < D; ++d) {
    if (d < m.twin[d]) link(fm.face_of_dart[d], fm.face_of_dart[m.twin[d]]);
  }
  for (int c = 0; c < K; ++c) link(fm.circle_inside[c], fm.circle_outside[c]);
  for (auto& f : fm.faces) {
    std::sort(f.adjacent.begin(), f.adjacent.end());
    f.adjacent.erase(std::unique(f.adjacent.begin(), f.adjacent.end()), f.adjacent.end());
  }
  return fm;
}

std::string Web::canonical_key() const {
  const PlaneMap& m = map_;
  const int D = m.dart_count();
  int O = 0;
  const std::vector<int> orbit = face_orbits(m, O);
  const int C = static_cast<int>(components_.size());
  const int K = circle_count();

  // Children per container: (piece or circle, face orbit).
  std::map<std::pair<int, int>, std::vector<int>> children;  // value: item ids, comps 0..C-1, circles C..
  auto container = [&](const Host& h) -> std::pair<int, int> {
    switch (h.kind) {
      case Host::Kind::Unbounded: return {-1, -1};
      case Host::Kind::FaceLeftOf: return {component_of_dart_[h.index], orbit[h.index]};
      case Host::Kind::InsideCircle: return {C + h.index, -1};
    }
    return {-1, -1};
  };
  for (int c = 0; c < C; ++c) children[container(components_[c].host)].push_back(c);
  for (int k = 0; k < K; ++k) children[container(circles_[k])].push_back(C + k);

  std::vector<int> label(D, -1);
  std::function<std::string(int)> item_key;
  // Children hosted in faces of a piece, keyed by face label under `label`.
  auto face_children = [&](int piece, const std::vector<int>& darts, int skip_orbit) {
    std::map<std::string, std::vector<std::string>> by_face;
    std::map<int, int> orbit_label;
    for (int d : darts) {
      const int o = orbit[d];
      const bool at_boundary = m.is_boundary_dart(d);
      auto it = orbit_label.find(o);
      const int lab = at_boundary ? -1 : label[d];
      if (it == orbit_label.end()) {
        orbit_label[o] = lab;
      } else if (it->second != -1 && (lab == -1 || lab < it->second)) {
        it->second = lab;
      }
    }
    for (const auto& [o, lab] : orbit_label) {
      if (o == skip_orbit) continue;
      auto it = children.find({piece, o});
      if (it == children.end()) continue;
      auto& keys = by_face[lab == -1 ? std::string("U") : std::to_string(lab)];
      for (int item : it->second) keys.push_back(item_key(item));
    }
    std::string s;
    for (auto& [face, keys] : by_face) {
      std::sort(keys.begin(), keys.end());
      s += "[" + face;
      for (const auto& k : keys) s += ":" + k;
      s += "]";
    }
    return s;
  };
  std::vector<std::vector<int>> piece_darts(C);
  for (int d = 0; d < D; ++d) {
    if (component_of_dart_[d] >= 0) piece_darts[component_of_dart_[d]].push_back(d);
  }
  item_key = [&](int item) -> std::string {
    if (item >= C) {
      std::vector<std::string> keys;
      if (auto it = children.find({item, -1}); it != children.end()) {
        for (int child : it->second) keys.push_back(item_key(child));
      }
      std::sort(keys.begin(), keys.end());
      std::string s = "O{";
      for (const auto& k : keys) s += k + ";";
      return s + "}";
    }
    const int outer = orbit[components_[item].outer_dart];
    std::string best;
    for (int start : piece_darts[item]) {
      if (orbit[start] != outer) continue;
      std::string s = "C{" + join_ints(piece_code(m, start, label)) + face_children(item, piece_darts[item], outer) + "}";
      if (best.empty() || s < best) best = s;
    }
    return best;
  };

  std::string key = "R{";
  std::vector<int> root_darts;
  for (int d = 0; d < D; ++d) {
    if (component_of_dart_[d] == -1) root_darts.push_back(d);
  }
  if (m.boundary_size() > 0) key += join_ints(piece_code(m, -1, label)) + face_children(-1, root_darts, -2);
  std::vector<std::string> top;
  if (auto it = children.find({-1, -1}); it != children.end()) {
    for (int item : it->second) top.push_back(item_key(item));
  }
  std::sort(top.begin(), top.end());
  key += "[U";
  for (const auto& k : top) key += ":" + k;
  return key + "]}";
}

// ---------------------------------------------------------------------------

Web mirror(const Web& w) {
  const PlaneMap& m = w.map();
  const int V = m.vertex_count();
  const int n = m.boundary_size();
  auto md = [&](int d) {
    if (m.is_boundary_dart(d)) return 3 * V + (n - 1 - m.boundary_index(d));
    const int r = d % 3;
    return d - r + (r == 0 ? 0 : 3 - r);
  };
  PlaneMap out;
  out.boundary = m.boundary.mirrored();
  for (Polarity p : m.polarity) out.polarity.push_back(opposite(p));
  out.twin.assign(m.dart_count(), -1);
  for (int d = 0; d < m.dart_count(); ++d) out.twin[md(d)] = md(m.twin[d]);
  auto mh = [&](const Host& h) {
    return h.kind == Host::Kind::FaceLeftOf ? Host::face_left_of(md(m.twin[h.index])) : h;
  };
  std::vector<Host> circles;
  for (const Host& h : w.circle_hosts()) circles.push_back(mh(h));
  std::vector<ComponentNest> nests;
  for (const auto& comp : w.closed_components()) {
    const int outer = md(m.twin[comp.outer_dart]);
    nests.push_back({outer, outer, mh(comp.host)});
  }
  return Web::assemble(std::move(out), std::move(circles), std::move(nests));
}

Web glue(const Web& w1, const Web& w2) {
  if (w1.boundary() != w2.boundary()) {
    throw Error(ErrorCode::BoundaryMismatch, "cannot glue webs with boundaries " + w1.boundary().to_string() +
                                                 " and " + w2.boundary().to_string());
  }
  const PlaneMap& upper = w2.map();
  const PlaneMap& lower = w1.map();
  const int V2 = upper.vertex_count();
  const int V1 = lower.vertex_count();
  const int n = upper.boundary_size();

  // Upper vertices keep their darts; lower vertices are reflected.
  auto from_upper = [&](int d) { return d; };
  auto from_lower = [&](int d) {
    const int r = d % 3;
    return 3 * V2 + d - r + (r == 0 ? 0 : 3 - r);
  };
  PlaneMap out;
  out.polarity = upper.polarity;
  for (Polarity p : lower.polarity) out.polarity.push_back(opposite(p));
  out.twin.assign(3 * (V1 + V2), -1);
  for (int d = 0; d < 3 * V2; ++d) {
    if (!upper.is_boundary_dart(upper.twin[d])) out.twin[from_upper(d)] = from_upper(upper.twin[d]);
  }
  for (int d = 0; d < 3 * V1; ++d) {
    if (!lower.is_boundary_dart(lower.twin[d])) out.twin[from_lower(d)] = from_lower(lower.twin[d]);
  }

  // Follow strands through the border line. For each point record the
  // combined darts whose left faces lie just right / just left of it.
  std::vector<int> right_dart(n, -1), left_dart(n, -1), chain_circle(n, -1), chain_parity(n, 0);
  std::vector<bool> seen(n, false);
  auto trace = [&](int start_dart, bool start_upper) {
    // Walk from a real dart into the line; returns the far real dart.
    bool in_upper = start_upper;
    const PlaneMap* side = start_upper ? &upper : &lower;
    int k = side->boundary_index(side->twin[start_upper ? start_dart : start_dart]);
    std::vector<std::pair<int, bool>> crossings;  // point, crossed downward
    while (true) {
      seen[k] = true;
      crossings.emplace_back(k, in_upper);
      in_upper = !in_upper;
      side = in_upper ? &upper : &lower;
      const int t = side->twin[side->boundary_dart(k)];
      if (!side->is_boundary_dart(t)) {
        const int a = start_upper ? from_upper(start_dart) : from_lower(start_dart);
        const int b = in_upper ? from_upper(t) : from_lower(t);
        for (auto [p, down] : crossings) {
          // Walking from a, left is east (right of p) when crossing downward.
          right_dart[p] = down ? a : b;
          left_dart[p] = down ? b : a;
        }
        return std::make_pair(a, b);
      }
      k = side->boundary_index(t);
    }
  };
  for (int d = 0; d < 3 * V2; ++d) {
    if (upper.is_boundary_dart(upper.twin[d]) && !seen[upper.boundary_index(upper.twin[d])]) {
      auto [a, b] = trace(d, true);
      out.twin[a] = b;
      out.twin[b] = a;
    }
  }
  for (int d = 0; d < 3 * V1; ++d) {
    if (lower.is_boundary_dart(lower.twin[d]) && !seen[lower.boundary_index(lower.twin[d])]) {
      auto [a, b] = trace(d, false);
      out.twin[a] = b;
      out.twin[b] = a;
    }
  }
  // Remaining points belong to strands made of arcs only: new circles.
  std::vector<std::vector<int>> new_circles;
  for (int k0 = 0; k0 < n; ++k0) {
    if (seen[k0]) continue;
    std::vector<int> pts;
    int k = k0;
    bool in_upper = true;
    do {
      seen[k] = true;
      pts.push_back(k);
      const PlaneMap& side = in_upper ? upper : lower;
      k = side.boundary_index(side.twin[side.boundary_dart(k)]);
      in_upper = !in_upper;
    } while (k != k0 || !in_upper);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int id = static_cast<int>(new_circles.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      chain_circle[pts[i]] = id;
      chain_parity[pts[i]] = static_cast<int>(i % 2);
    }
    new_circles.push_back(std::move(pts));
  }

  // Items crossing the line: pieces of the combined map and arc circles.
  const int C2 = w2.circle_count();
  const int C1 = w1.circle_count();
  std::vector<Host> circles;
  for (const Host& h : w2.circle_hosts()) {
    circles.push_back(h.kind == Host::Kind::FaceLeftOf ? Host::face_left_of(from_upper(h.index)) : h);
  }
  for (const Host& h : w1.circle_hosts()) {
    if (h.kind == Host::Kind::FaceLeftOf) {
      circles.push_back(Host::face_left_of(from_lower(lower.twin[h.index])));
    } else if (h.kind == Host::Kind::InsideCircle) {
      circles.push_back(Host::inside_circle(C2 + h.index));
    } else {
      circles.push_back(h);
    }
  }
  std::vector<ComponentNest> nests;
  for (const auto& comp : w2.closed_components()) {
    Host h = comp.host;
    if (h.kind == Host::Kind::FaceLeftOf) h = Host::face_left_of(from_upper(h.index));
    nests.push_back({from_upper(comp.outer_dart), from_upper(comp.outer_dart), h});
  }
  for (const auto& comp : w1.closed_components()) {
    Host h = comp.host;
    if (h.kind == Host::Kind::FaceLeftOf) h = Host::face_left_of(from_lower(lower.twin[h.index]));
    if (h.kind == Host::Kind::InsideCircle) h = Host::inside_circle(C2 + h.index);
    const int outer = from_lower(lower.twin[comp.outer_dart]);
    nests.push_back({outer, outer, h});
  }

  // Point sets of crossing items.
  struct Item {
    std::vector<int> points;
    int circle = -1;      // index among new circles, or -1 for a piece
    int member_dart = -1;  // for pieces
  };
  std::vector<Item> items;
  {
    UnionFind uf(static_cast<int>(out.twin.size()) + 1);
    for (int d = 0; d < out.dart_count(); ++d) {
      uf.unite(d, out.twin[d]);
      uf.unite(d, out.ccw_next(d));
    }
    std::map<int, int> item_of_root;
    for (int k = 0; k < n; ++k) {
      if (chain_circle[k] != -1) continue;
      const int r = uf.find(right_dart[k]);
      auto [it, inserted] = item_of_root.try_emplace(r, static_cast<int>(items.size()));
      if (inserted) items.push_back({{}, -1, right_dart[k]});
      items[it->second].points.push_back(k);
    }
    for (std::size_t c = 0; c < new_circles.size(); ++c) items.push_back({new_circles[c], static_cast<int>(c), -1});
  }
  auto face_right_of = [&](const Item& it, int p) -> Host {
    if (it.circle == -1) return Host::face_left_of(right_dart[p]);
    // Just right of the first point lies inside the circle, and so on.
    return chain_parity[p] == 0 ? Host::inside_circle(C2 + C1 + it.circle) : Host{};  // outside: resolved below
  };
  std::vector<Host> item_host(items.size(), Host::unbounded());
  std::vector<int> item_parent(items.size(), -1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int lo = items[i].points.front();
    const int hi = items[i].points.back();
    int best = -1;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (j == i) continue;
      const auto& q = items[j].points;
      if (q.front() < lo && hi < q.back()) {
        if (best == -1 || q.back() - q.front() < items[best].points.back() - items[best].points.front()) {
          best = static_cast<int>(j);
        }
      }
    }
    item_parent[i] = best;
  }
  // Resolve hosts from the outermost items inwards.
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& pa = items[a].points;
    const auto& pb = items[b].points;
    return pa.back() - pa.front() > pb.back() - pb.front();
  });
  for (int i : order) {
    const int parent = item_parent[i];
    if (parent == -1) continue;
    const auto& q = items[parent].points;
    const int lo = items[i].points.front();
    const int p = *std::prev(std::lower_bound(q.begin(), q.end(), lo));
    Host h = face_right_of(items[parent], p);
    if (items[parent].circle != -1 && h.kind == Host::Kind::Unbounded) h = item_host[parent];
    item_host[i] = h;
  }
  std::vector<Host> glue_circles(new_circles.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].circle != -1) {
      glue_circles[items[i].circle] = item_host[i];
    } else if (out.boundary_size() == 0) {
      const int outer = left_dart[items[i].points.front()];
      nests.push_back({items[i].member_dart, outer, item_host[i]});
    }
  }
  for (const Host& h : glue_circles) circles.push_back(h);
  return Web::assemble(std::move(out), std::move(circles), std::move(nests));
}

Web disjoint_union(const Web& w1, const Web& w2, Host host) {
  if (!w2.is_closed()) {
    throw Error(ErrorCode::MalformedContainment, "only a closed web can be placed inside another web");
  }
  const PlaneMap& a = w1.map();
  const PlaneMap& b = w2.map();
  const int Va = a.vertex_count();
  const int Vb = b.vertex_count();
  const int n = a.boundary_size();
  auto from_a = [&](int d) { return a.is_boundary_dart(d) ? 3 * (Va + Vb) + a.boundary_index(d) : d; };
  auto from_b = [&](int d) { return 3 * Va + d; };
  PlaneMap out;
  out.boundary = a.boundary;
  out.polarity = a.polarity;
  out.polarity.insert(out.polarity.end(), b.polarity.begin(), b.polarity.end());
  out.twin.assign(3 * (Va + Vb) + n, -1);
  for (int d = 0; d < a.dart_count(); ++d) out.twin[from_a(d)] = from_a(a.twin[d]);
  for (int d = 0; d < b.dart_count(); ++d) out.twin[from_b(d)] = from_b(b.twin[d]);

  if (host.kind == Host::Kind::FaceLeftOf) {
    if (host.index < 0 || host.index >= a.dart_count()) {
      throw Error(ErrorCode::MalformedContainment, "host face refers to an unknown dart");
    }
    host = Host::face_left_of(from_a(host.index));
  }
  const int Ka = w1.circle_count();
  auto map_a = [&](Host h) {
    if (h.kind == Host::Kind::FaceLeftOf) h.index = from_a(h.index);
    return h;
  };
  auto map_b = [&](Host h) {
    if (h.kind == Host::Kind::Unbounded) return host;
    if (h.kind == Host::Kind::FaceLeftOf) h.index = from_b(h.index);
    if (h.kind == Host::Kind::InsideCircle) h.index += Ka;
    return h;
  };
  std::vector<Host> circles;
  for (const Host& h : w1.circle_hosts()) circles.push_back(map_a(h));
  for (const Host& h : w2.circle_hosts()) circles.push_back(map_b(h));
  std::vector<ComponentNest> nests;
  for (const auto& comp : w1.closed_components()) {
    nests.push_back({from_a(comp.outer_dart), from_a(comp.outer_dart), map_a(comp.host)});
  }
  for (const auto& comp : w2.closed_components()) {
    nests.push_back({from_b(comp.outer_dart), from_b(comp.outer_dart), map_b(comp.host)});
  }
  return Web::assemble(std::move(out), std::move(circles), std::move(nests));
}

std::vector<Web> connected_components(const Web& w) {
  const PlaneMap& m = w.map();
  std::vector<Web> out;
  // Root part: split by connectivity ignoring the boundary node.
  if (m.boundary_size() > 0) {
    UnionFind uf(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) {
      uf.unite(d, m.twin[d]);
      if (!m.is_boundary_dart(d)) uf.unite(d, m.ccw_next(d));
    }
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> groups;  // root -> (vertices, points)
    std::vector<int> first_seen;
    for (int k = 0; k < m.boundary_size(); ++k) {
      const int r = uf.find(m.boundary_dart(k));
      if (!groups.count(r)) first_seen.push_back(r);
      groups[r].second.push_back(k);
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
      if (w.component_of(3 * v) != -1) continue;
      groups[uf.find(3 * v)].first.push_back(v);
    }
    for (int r : first_seen) {
      const auto& [verts, pts] = groups[r];
      out.push_back(Web::assemble(extract_submap(m, verts, pts)));
    }
  }
  // Closed components in dart order.
  for (std::size_t c = 0; c < w.closed_components().size(); ++c) {
    std::vector<int> verts;
    for (int v = 0; v < m.vertex_count(); ++v) {
      if (w.component_of(3 * v) == static_cast<int>(c)) verts.push_back(v);
    }
    PlaneMap sub = extract_submap(m, verts, {});
    const int outer_old = w.closed_components()[c].outer_dart;
    const int pos = static_cast<int>(std::find(verts.begin(), verts.end(), outer_old / 3) - verts.begin());
    const int outer = 3 * pos + outer_old % 3;
    out.push_back(Web::assemble(std::move(sub), {}, {{outer, outer, Host::unbounded()}}));
  }
  for (int k = 0; k < w.circle_count(); ++k) out.push_back(Web::circles(1));
  return out;
}

Web delete_edges_and_fuse(const Web& w, const std::vector<int>& darts) {
  const PlaneMap& m = w.map();
  const FaceMap fm = w.faces();
  const int D = m.dart_count();
  const int V = m.vertex_count();
  const int n = m.boundary_size();
  std::vector<char> dead(D, 0);
  for (int d : darts) {
    if (d < 0 || d >= D || m.is_boundary_dart(d) || m.is_boundary_dart(m.twin[d])) {
      throw Error(ErrorCode::InvalidArgument, "only edges between two vertices can be deleted");
    }
    dead[d] = dead[m.twin[d]] = 1;
  }
  std::vector<char> removed(V, 0);
  for (int v = 0; v < V; ++v) {
    const int k = dead[3 * v] + dead[3 * v + 1] + dead[3 * v + 2];
    if (k > 1) throw Error(ErrorCode::InvalidArgument, "a vertex would keep a single edge");
    removed[v] = static_cast<char>(k);
  }
  auto gone = [&](int d) { return !m.is_boundary_dart(d) && removed[d / 3]; };
  // The other surviving dart at a fused vertex.
  auto partner = [&](int t) {
    const int base = t - t % 3;
    for (int r = 0; r < 3; ++r) {
      const int x = base + r;
      if (x != t && !dead[x]) return x;
    }
    return -1;
  };

  std::vector<int> new_dart(D, -1), kept;
  for (int v = 0; v < V; ++v) {
    if (!removed[v]) kept.push_back(v);
  }
  const int NV = static_cast<int>(kept.size());
  for (int i = 0; i < NV; ++i) {
    for (int r = 0; r < 3; ++r) new_dart[3 * kept[i] + r] = 3 * i + r;
  }
  for (int k = 0; k < n; ++k) new_dart[m.boundary_dart(k)] = 3 * NV + k;
  PlaneMap out;
  out.boundary = m.boundary;
  for (int v : kept) out.polarity.push_back(m.polarity[v]);
  out.twin.assign(3 * NV + n, -1);
  std::vector<char> visited(D, 0);
  for (int y = 0; y < D; ++y) {
    if (new_dart[y] == -1) continue;
    int t = m.twin[y];
    while (gone(t)) {
      visited[t] = 1;
      const int p = partner(t);
      visited[p] = 1;
      t = m.twin[p];
    }
    out.twin[new_dart[y]] = new_dart[t];
  }

  // Merged faces: old faces joined across every deleted edge.
  const int F = static_cast<int>(fm.size());
  UnionFind faces(F);
  for (int d = 0; d < D; ++d) {
    if (dead[d]) faces.unite(fm.face_of_dart[d], fm.face_of_dart[m.twin[d]]);
  }
  // Pieces: root part, closed components of the new map, old circles, new circles.
  struct Piece {
    std::vector<std::pair<int, int>> sides;  // (face class, representative new dart or -1)
    int circle = -1;
    int member = -1;
    bool root = false;
  };
  std::vector<Piece> pieces;
  const auto comps = map_components(out);
  std::vector<int> new_to_old(out.dart_count(), -1);
  for (int d = 0; d < D; ++d) {
    if (new_dart[d] != -1) new_to_old[new_dart[d]] = d;
  }
  for (const auto& comp : comps) {
    Piece p;
    p.member = comp.front();
    p.root = n > 0 && pieces.empty();
    for (int nd : comp) {
      const int cls = faces.find(fm.face_of_dart[new_to_old[nd]]);
      if (std::none_of(p.sides.begin(), p.sides.end(), [&](auto& s) { return s.first == cls; })) {
        p.sides.emplace_back(cls, nd);
      }
    }
    pieces.push_back(std::move(p));
  }
  const int K = w.circle_count();
  for (int c = 0; c < K; ++c) {
    Piece p;
    p.circle = c;
    p.sides = {{faces.find(fm.circle_inside[c]), -1}, {faces.find(fm.circle_outside[c]), -1}};
    pieces.push_back(std::move(p));
  }
  int circles = K;
  for (int t = 0; t < D; ++t) {
    if (!gone(t) || dead[t] || visited[t]) continue;
    Piece p;
    p.circle = circles++;
    p.sides = {{faces.find(fm.face_of_dart[t]), -1}, {faces.find(fm.face_of_dart[m.twin[t]]), -1}};
    int x = t;
    do {
      visited[x] = 1;
      const int q = partner(x);
      visited[q] = 1;
      x = m.twin[q];
    } while (x != t);
    pieces.push_back(std::move(p));
  }

  // Walk the face/piece tree outwards from the unbounded face.
  const int U = faces.find(fm.unbounded());
  std::vector<std::vector<int>> pieces_at(F);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (auto& [cls, rep] : pieces[i].sides) pieces_at[cls].push_back(static_cast<int>(i));
  }
  std::vector<int> parent_piece(F, -2), parent_class(pieces.size(), -1);
  parent_piece[U] = -1;
  std::vector<int> queue{U};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int cls = queue[qi];
    for (int pi : pieces_at[cls]) {
      if (pi == parent_piece[cls] || parent_class[pi] != -1) continue;
      parent_class[pi] = cls;
      for (auto& [other, rep] : pieces[pi].sides) {
        if (other == cls || parent_piece[other] != -2) continue;
        parent_piece[other] = pi;
        queue.push_back(other);
      }
    }
  }
  auto host_of_class = [&](int cls) {
    const int pi = parent_piece[cls];
    if (cls == U || pi < 0) return Host::unbounded();
    const Piece& p = pieces[pi];
    if (p.circle != -1) return Host::inside_circle(p.circle);
    for (auto& [c, rep] : p.sides) {
      if (c == cls) return Host::face_left_of(rep);
    }
    return Host::unbounded();
  };
  std::vector<Host> circle_hosts(circles);
  std::vector<ComponentNest> nests;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (p.root) continue;
    if (parent_class[i] == -1) throw Error(ErrorCode::Malformed, "lost track of a component during surgery");
    const Host h = host_of_class(parent_class[i]);
    if (p.circle != -1) {
      circle_hosts[p.circle] = h;
      continue;
    }
    int outer = -1;
    for (auto& [c, rep] : p.sides) {
      if (c == parent_class[i]) outer = rep;
    }
    nests.push_back({p.member, outer, h});
  }
  return Web::assemble(std::move(out), std::move(circle_hosts), std::move(nests));
}

}  // namespace sl3
