#pragma once

#include "sl3/signs.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sl3 {

enum class Polarity : std::uint8_t { Sink, Source };

inline Polarity opposite(Polarity p) { return p == Polarity::Sink ? Polarity::Source : Polarity::Sink; }

/// Rotation-system core of a web.
///
/// Vertex v owns darts 3v, 3v+1, 3v+2 in counterclockwise order. Boundary
/// point k owns dart 3V+k. The boundary points hang off a virtual node placed
/// below the border line; counterclockwise around that node they read
/// b_{n-1}, ..., b_1, b_0. Every dart has a twin (the other end of its edge).
/// Vertexless circles are not part of the map.
struct PlaneMap {
  std::vector<Polarity> polarity;
  std::vector<int> twin;
  SignSequence boundary;

  int vertex_count() const { return static_cast<int>(polarity.size()); }
  int boundary_size() const { return static_cast<int>(boundary.size()); }
  int dart_count() const { return static_cast<int>(twin.size()); }
  int boundary_dart(int k) const { return 3 * vertex_count() + k; }
  bool is_boundary_dart(int d) const { return d >= 3 * vertex_count(); }
  int boundary_index(int d) const { return d - 3 * vertex_count(); }
  /// -1 for boundary darts.
  int vertex_of(int d) const { return is_boundary_dart(d) ? -1 : d / 3; }

  int ccw_next(int d) const {
    if (!is_boundary_dart(d)) return d - d % 3 + (d % 3 + 1) % 3;
    const int n = boundary_size();
    return boundary_dart((boundary_index(d) + n - 1) % n);
  }
  int ccw_prev(int d) const {
    if (!is_boundary_dart(d)) return d - d % 3 + (d % 3 + 2) % 3;
    const int n = boundary_size();
    return boundary_dart((boundary_index(d) + 1) % n);
  }
  /// Next dart along the boundary walk of the face lying to the left of d.
  int face_step(int d) const { return ccw_prev(twin[d]); }

  /// Whether the edge of d is directed away from d's endpoint.
  bool outgoing(int d) const {
    if (is_boundary_dart(d)) return boundary[boundary_index(d)] == Sign::Minus;
    return polarity[vertex_of(d)] == Polarity::Source;
  }
};

/// Where a closed component or circle sits.
struct Host {
  enum class Kind : std::uint8_t { Unbounded, FaceLeftOf, InsideCircle };
  Kind kind = Kind::Unbounded;
  int index = -1;  // a dart for FaceLeftOf, a circle for InsideCircle

  static Host unbounded() { return {}; }
  static Host face_left_of(int dart) { return {Kind::FaceLeftOf, dart}; }
  static Host inside_circle(int circle) { return {Kind::InsideCircle, circle}; }
  friend bool operator==(const Host&, const Host&) = default;
};

/// Nesting request for one closed vertex component, used when assembling a web.
struct ComponentNest {
  int member_dart = -1;  // any dart of the component
  int outer_dart = -1;   // a dart whose left face is the component's outer face; -1 picks a default
  Host host;
};

struct Face {
  int sides = 0;
  bool bounded = true;
  bool circle_disk = false;
  int walks = 0;              // boundary walks, counting each circle side as one
  std::vector<int> adjacent;  // sorted ids of faces sharing an edge

  /// A disk bounded by a single walk: nothing sits inside.
  bool simple() const { return walks == 1; }
};

/// Faces of a web; faces[0] is always the unbounded face.
struct FaceMap {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;    // face to the left of each dart
  std::vector<int> circle_inside;   // disk face of each circle
  std::vector<int> circle_outside;  // face surrounding each circle

  int unbounded() const { return 0; }
  std::size_t size() const { return faces.size(); }
};

/// A validated epsilon-web (closed when the boundary is empty).
///
/// Components touching the border line form the root part; every other
/// vertex component and every circle records the face containing it, which
/// determines face adjacency and hence superficiality. Values are immutable.
class Web {
 public:
  struct ClosedComponent {
    int outer_dart = -1;
    Host host;
  };

  Web() = default;

  /// Checks orientation, planarity and containment and normalizes hosts.
  /// Components without a nest entry go in the unbounded face.
  static Web assemble(PlaneMap map, std::vector<Host> circle_hosts = {}, std::vector<ComponentNest> nests = {});

  static Web empty(SignSequence boundary = {});
  /// k vertexless circles side by side in the unbounded face.
  static Web circles(int k);

  const PlaneMap& map() const noexcept { return map_; }
  const SignSequence& boundary() const noexcept { return map_.boundary; }
  int vertex_count() const { return map_.vertex_count(); }
  int circle_count() const { return static_cast<int>(circles_.size()); }
  int edge_count() const { return map_.dart_count() / 2; }
  bool is_closed() const { return map_.boundary.empty(); }

  const std::vector<Host>& circle_hosts() const noexcept { return circles_; }
  const std::vector<ClosedComponent>& closed_components() const noexcept { return components_; }
  /// Closed component index of a dart, -1 for darts of the root part.
  int component_of(int dart) const { return component_of_dart_[dart]; }

  FaceMap faces() const;

  /// Boundary-pinned canonical serialization; equal iff the webs are
  /// isomorphic as plane maps with the same border and nesting.
  std::string canonical_key() const;

  friend bool operator==(const Web& a, const Web& b) { return a.canonical_key() == b.canonical_key(); }

 private:
  PlaneMap map_;
  std::vector<Host> circles_;
  std::vector<ClosedComponent> components_;
  std::vector<int> component_of_dart_;
};

// ---------------------------------------------------------------------------
// Raw descriptions and validation.

/// Reference to a face through an element of the web: the left (0) or right
/// (1) side of an edge, or the inside (0) or outside (1) of a circle.
struct FaceRef {
  std::string element;
  int index = 0;
};

/// Unvalidated web description, as read from the text format.
struct WebSpec {
  struct Vertex {
    std::string id;
    Polarity polarity = Polarity::Sink;
    int line = 0;
  };
  struct Edge {
    std::string id, tail, head;  // vertex ids or "b<k>" with k 1-based
    int line = 0;
  };
  struct Rotation {
    std::string vertex;
    std::vector<std::string> edges;  // counterclockwise
    int line = 0;
  };
  struct Circle {
    std::string id;
    int line = 0;
  };
  struct Nest {
    std::string root;             // a vertex of the component, or a circle
    std::optional<FaceRef> host;  // nullopt: the unbounded face
    std::optional<FaceRef> via;   // face of the root's own component facing outwards
    int line = 0;
  };

  std::string name;
  SignSequence boundary;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Rotation> rotations;
  std::vector<Circle> circles;
  std::vector<Nest> nests;
};

/// Builds a Web from a raw description, or throws an Error naming the
/// violated invariant (and the offending line when known).
Web validate(const WebSpec& spec);

// ---------------------------------------------------------------------------
// Operations.

/// Reflection across a vertical line with all orientations reversed; the
/// boundary becomes boundary().mirrored().
Web mirror(const Web& w);

/// The closed web obtained by gluing the mirror image of w1 (below the border
/// line) to w2 (above it), boundary point k to boundary point k.
Web glue(const Web& w1, const Web& w2);

/// Places the closed web w2 inside the given host face of w1 (host refers to
/// w1's darts and circles).
Web disjoint_union(const Web& w1, const Web& w2, Host host = Host::unbounded());

/// Root part split per connected piece (each keeping its own boundary points
/// in order), followed by every closed component and circle as a closed web.
std::vector<Web> connected_components(const Web& w);

inline int vertex_count(const Web& w) { return w.vertex_count(); }
inline bool is_closed(const Web& w) { return w.is_closed(); }

/// Deletes the edges of the given darts. Every vertex touched by exactly one
/// deleted edge is fused away; strands that close up without vertices become
/// circles. Nesting is recomputed from the merged faces.
Web delete_edges_and_fuse(const Web& w, const std::vector<int>& darts);

/// Sub-map spanned by the listed vertices and boundary points (in the given
/// order); every twin must stay inside the selection.
PlaneMap extract_submap(const PlaneMap& map, const std::vector<int>& vertices, const std::vector<int>& points);

/// Vertex-disjoint connected pieces of a map (no circles), as dart lists.
std::vector<std::vector<int>> map_components(const PlaneMap& map);

}  // namespace sl3
