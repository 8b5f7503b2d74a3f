#include "sl3/web_text.hpp"

#include "sl3/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace sl3 {

namespace {

std::string at_line(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : std::string(); }

/// Boundary point index (0-based) for a token "b<k>", or -1.
int boundary_token(std::string_view tok) {
  if (tok.size() < 2 || tok[0] != 'b') return -1;
  int k = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || k < 1) return -1;
  return k - 1;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, at_line(line) + what);
}

int parse_index(const std::string& tok, int line) {
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  parse_fail(line, "expected face index 0 or 1, got '" + tok + "'");
}

/// Reads "<element> <index>" starting at toks[i].
FaceRef parse_face_ref(const std::vector<std::string>& toks, std::size_t i, int line) {
  if (i + 1 >= toks.size()) parse_fail(line, "expected '<element> <index>'");
  return FaceRef{toks[i], parse_index(toks[i + 1], line)};
}

}  // namespace

std::vector<WebSpec> parse_web_specs(std::string_view text) {
  std::vector<WebSpec> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_boundary = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "web") {
      if (toks.size() != 2) parse_fail(line, "expected 'web <name>'");
      out.emplace_back();
      out.back().name = toks[1];
      have_boundary = false;
      continue;
    }
    if (out.empty()) parse_fail(line, "'" + kw + "' before any 'web' line");
    WebSpec& spec = out.back();
    if (kw == "boundary") {
      if (have_boundary) parse_fail(line, "second 'boundary' line");
      have_boundary = true;
      std::string signs;
      for (std::size_t i = 1; i < toks.size(); ++i) signs += toks[i];
      try {
        spec.boundary = SignSequence::parse(signs);
      } catch (const Error& e) {
        parse_fail(line, "bad sign token in '" + signs + "'");
      }
    } else if (kw == "vertex") {
      if (toks.size() != 3 || (toks[2] != "sink" && toks[2] != "source")) {
        parse_fail(line, "expected 'vertex <id> sink|source'");
      }
      spec.vertices.push_back({toks[1], toks[2] == "source" ? Polarity::Source : Polarity::Sink, line});
    } else if (kw == "edge") {
      if (toks.size() != 4) parse_fail(line, "expected 'edge <id> <tail> <head>'");
      spec.edges.push_back({toks[1], toks[2], toks[3], line});
    } else if (kw == "rot") {
      if (toks.size() != 5) {
        parse_fail(line, "expected 'rot <vertex> <edge> <edge> <edge>', got " + std::to_string(toks.size() - 1) +
                             " tokens");
      }
      spec.rotations.push_back({toks[1], {toks[2], toks[3], toks[4]}, line});
    } else if (kw == "circle") {
      if (toks.size() != 2) parse_fail(line, "expected 'circle <id>'");
      spec.circles.push_back({toks[1], line});
    } else if (kw == "nest") {
      if (toks.size() < 4 || toks[2] != "in") parse_fail(line, "expected 'nest <root> in ...'");
      WebSpec::Nest nest;
      nest.root = toks[1];
      nest.line = line;
      std::size_t i = 3;
      if (toks[i] == "unbounded") {
        i += 1;
      } else {
        nest.host = parse_face_ref(toks, i, line);
        i += 2;
      }
      if (i < toks.size()) {
        if (toks[i] != "via") parse_fail(line, "unexpected token '" + toks[i] + "'");
        nest.via = parse_face_ref(toks, i + 1, line);
        i += 3;
      }
      if (i != toks.size()) parse_fail(line, "unexpected token '" + toks[i] + "'");
      spec.nests.push_back(std::move(nest));
    } else {
      parse_fail(line, "unknown keyword '" + kw + "'");
    }
  }
  return out;
}

Web validate(const WebSpec& spec) {
  const int n = static_cast<int>(spec.boundary.size());
  std::map<std::string, int> vertex_index, edge_index, circle_index;
  for (const auto& v : spec.vertices) {
    if (boundary_token(v.id) != -1) {
      throw Error(ErrorCode::Malformed, at_line(v.line) + "vertex id '" + v.id + "' is reserved for boundary points");
    }
    if (!vertex_index.emplace(v.id, static_cast<int>(vertex_index.size())).second) {
      throw Error(ErrorCode::Malformed, at_line(v.line) + "duplicate vertex '" + v.id + "'");
    }
  }
  for (const auto& c : spec.circles) {
    if (vertex_index.count(c.id) || !circle_index.emplace(c.id, static_cast<int>(circle_index.size())).second) {
      throw Error(ErrorCode::Malformed, at_line(c.line) + "duplicate id '" + c.id + "'");
    }
  }
  const int V = static_cast<int>(spec.vertices.size());

  // Edge ends per vertex and per boundary point.
  std::vector<std::vector<int>> ends(V);  // encoded 2*edge + (0 tail, 1 head)
  std::vector<std::vector<int>> point_ends(n);
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& edge = spec.edges[e];
    if (!edge_index.emplace(edge.id, static_cast<int>(e)).second) {
      throw Error(ErrorCode::Malformed, at_line(edge.line) + "duplicate edge '" + edge.id + "'");
    }
    for (int side = 0; side < 2; ++side) {
      const std::string& end = side == 0 ? edge.tail : edge.head;
      const int k = boundary_token(end);
      if (k != -1) {
        if (k >= n) {
          throw Error(ErrorCode::BoundarySignMismatch,
                      at_line(edge.line) + "boundary point '" + end + "' beyond the " + std::to_string(n) + " declared");
        }
        point_ends[k].push_back(2 * static_cast<int>(e) + side);
        continue;
      }
      auto it = vertex_index.find(end);
      if (it == vertex_index.end()) {
        throw Error(ErrorCode::Malformed, at_line(edge.line) + "unknown endpoint '" + end + "'");
      }
      ends[it->second].push_back(2 * static_cast<int>(e) + side);
    }
  }
  for (int v = 0; v < V; ++v) {
    const auto& vx = spec.vertices[v];
    if (ends[v].size() != 3) {
      throw Error(ErrorCode::NonTrivalent, at_line(vx.line) + "vertex '" + vx.id + "' has " +
                                               std::to_string(ends[v].size()) + " edge ends");
    }
    const int want = vx.polarity == Polarity::Source ? 0 : 1;
    for (int end : ends[v]) {
      if (end % 2 != want) {
        throw Error(ErrorCode::MixedVertexOrientation,
                    at_line(vx.line) + "vertex '" + vx.id + "' is a " +
                        (want == 0 ? "source" : "sink") + " but edge '" + spec.edges[end / 2].id + "' points " +
                        (want == 0 ? "into" : "out of") + " it");
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    if (point_ends[k].size() != 1) {
      throw Error(ErrorCode::BoundarySignMismatch, "boundary point b" + std::to_string(k + 1) + " has " +
                                                       std::to_string(point_ends[k].size()) + " edge ends");
    }
    // A + point receives its edge, a - point emits it.
    const bool head = point_ends[k][0] % 2 == 1;
    if (head != (spec.boundary[k] == Sign::Plus)) {
      throw Error(ErrorCode::BoundarySignMismatch,
                  at_line(spec.edges[point_ends[k][0] / 2].line) + "edge at b" + std::to_string(k + 1) +
                      " is oriented against the sign " + (spec.boundary[k] == Sign::Plus ? "+" : "-"));
    }
  }

  // Darts from rotations.
  std::vector<int> dart_of_end(2 * spec.edges.size(), -1);
  std::vector<bool> rotated(V, false);
  for (const auto& rot : spec.rotations) {
    auto it = vertex_index.find(rot.vertex);
    if (it == vertex_index.end()) throw Error(ErrorCode::Malformed, at_line(rot.line) + "unknown vertex '" + rot.vertex + "'");
    const int v = it->second;
    if (rotated[v]) throw Error(ErrorCode::Malformed, at_line(rot.line) + "second rotation for '" + rot.vertex + "'");
    rotated[v] = true;
    std::vector<int> remaining = ends[v];
    for (int r = 0; r < 3; ++r) {
      auto e = edge_index.find(rot.edges[r]);
      if (e == edge_index.end()) {
        throw Error(ErrorCode::Malformed, at_line(rot.line) + "unknown edge '" + rot.edges[r] + "'");
      }
      auto hit = std::find_if(remaining.begin(), remaining.end(), [&](int end) { return end / 2 == e->second; });
      if (hit == remaining.end()) {
        throw Error(ErrorCode::NonTrivalent,
                    at_line(rot.line) + "edge '" + rot.edges[r] + "' is not incident to '" + rot.vertex + "' here");
      }
      dart_of_end[*hit] = 3 * v + r;
      remaining.erase(hit);
    }
  }
  for (int v = 0; v < V; ++v) {
    if (!rotated[v]) {
      throw Error(ErrorCode::Malformed, at_line(spec.vertices[v].line) + "vertex '" + spec.vertices[v].id + "' has no rotation");
    }
  }
  for (int k = 0; k < n; ++k) dart_of_end[point_ends[k][0]] = 3 * V + k;

  PlaneMap map;
  map.boundary = spec.boundary;
  for (const auto& vx : spec.vertices) map.polarity.push_back(vx.polarity);
  map.twin.assign(3 * V + n, -1);
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const int a = dart_of_end[2 * e];
    const int b = dart_of_end[2 * e + 1];
    map.twin[a] = b;
    map.twin[b] = a;
  }

  // Containment. Circle outsides resolve to the circle's own host.
  struct Pending {
    Host host;
    int outside_of = -1;
  };
  auto resolve_ref = [&](const FaceRef& ref, int line) -> Pending {
    if (auto e = edge_index.find(ref.element); e != edge_index.end()) {
      return {Host::face_left_of(dart_of_end[2 * e->second + ref.index]), -1};
    }
    if (auto c = circle_index.find(ref.element); c != circle_index.end()) {
      if (ref.index == 0) return {Host::inside_circle(c->second), -1};
      return {Host::unbounded(), c->second};
    }
    throw Error(ErrorCode::MalformedContainment, at_line(line) + "unknown face element '" + ref.element + "'");
  };
  const int K = static_cast<int>(spec.circles.size());
  std::vector<Pending> circle_pending(K);
  std::vector<bool> circle_nested(K, false);
  std::vector<ComponentNest> nests;
  std::vector<Pending> nest_pending;
  for (const auto& nest : spec.nests) {
    Pending p;
    if (nest.host) p = resolve_ref(*nest.host, nest.line);
    if (auto c = circle_index.find(nest.root); c != circle_index.end()) {
      if (nest.via) throw Error(ErrorCode::MalformedContainment, at_line(nest.line) + "a circle takes no 'via'");
      if (circle_nested[c->second]) throw Error(ErrorCode::MalformedContainment, at_line(nest.line) + "circle nested twice");
      circle_nested[c->second] = true;
      circle_pending[c->second] = p;
      continue;
    }
    auto v = vertex_index.find(nest.root);
    if (v == vertex_index.end()) {
      throw Error(ErrorCode::MalformedContainment, at_line(nest.line) + "unknown nest root '" + nest.root + "'");
    }
    ComponentNest cn;
    cn.member_dart = 3 * v->second;
    if (nest.via) {
      auto e = edge_index.find(nest.via->element);
      if (e == edge_index.end()) {
        throw Error(ErrorCode::MalformedContainment, at_line(nest.line) + "'via' must name an edge");
      }
      cn.outer_dart = dart_of_end[2 * e->second + nest.via->index];
    }
    nests.push_back(cn);
    nest_pending.push_back(p);
  }
  auto settle = [&](Pending p) {
    for (int steps = 0; p.outside_of != -1; ++steps) {
      if (steps > K) throw Error(ErrorCode::MalformedContainment, "circle containment forms a cycle");
      p = circle_pending[p.outside_of];
    }
    return p.host;
  };
  std::vector<Host> circle_hosts;
  for (int c = 0; c < K; ++c) circle_hosts.push_back(settle(circle_pending[c]));
  for (std::size_t i = 0; i < nests.size(); ++i) nests[i].host = settle(nest_pending[i]);
  return Web::assemble(std::move(map), std::move(circle_hosts), std::move(nests));
}

std::vector<NamedWeb> parse_webs(std::string_view text) {
  std::vector<NamedWeb> out;
  for (const auto& spec : parse_web_specs(text)) {
    try {
      out.push_back({spec.name, validate(spec)});
    } catch (const Error& e) {
      throw Error(e.code(), "in web '" + spec.name + "': " +
                                std::string(e.what()).substr(error_code_name(e.code()).size() + 2));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<NamedWeb> parse_web_file(const std::string& path) { return parse_webs(read_file(path)); }

std::string to_text(const Web& w, const std::string& name) {
  const PlaneMap& m = w.map();
  const int V = m.vertex_count();
  std::ostringstream out;
  out << "web " << name << "\n";
  out << "boundary";
  for (Sign s : m.boundary.signs()) out << ' ' << (s == Sign::Plus ? '+' : '-');
  out << "\n";
  auto point_name = [&](int d) {
    return m.is_boundary_dart(d) ? "b" + std::to_string(m.boundary_index(d) + 1) : "v" + std::to_string(d / 3);
  };
  for (int v = 0; v < V; ++v) {
    out << "vertex v" << v << (m.polarity[v] == Polarity::Source ? " source" : " sink") << "\n";
  }
  // One edge per dart pair, named after its tail dart.
  std::vector<int> edge_of(m.dart_count(), -1);
  int edges = 0;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (!m.outgoing(d)) continue;
    edge_of[d] = edge_of[m.twin[d]] = edges;
    out << "edge e" << edges << ' ' << point_name(d) << ' ' << point_name(m.twin[d]) << "\n";
    ++edges;
  }
  for (int v = 0; v < V; ++v) {
    out << "rot v" << v;
    for (int r = 0; r < 3; ++r) out << " e" << edge_of[3 * v + r];
    out << "\n";
  }
  for (int c = 0; c < w.circle_count(); ++c) out << "circle c" << c << "\n";
  auto face_ref = [&](int d) {
    return "e" + std::to_string(edge_of[d]) + (m.outgoing(d) ? " 0" : " 1");
  };
  auto host_text = [&](const Host& h) {
    switch (h.kind) {
      case Host::Kind::Unbounded: return std::string("unbounded");
      case Host::Kind::FaceLeftOf: return face_ref(h.index);
      case Host::Kind::InsideCircle: return "c" + std::to_string(h.index) + " 0";
    }
    return std::string("unbounded");
  };
  for (const auto& comp : w.closed_components()) {
    out << "nest v" << comp.outer_dart / 3 << " in " << host_text(comp.host) << " via " << face_ref(comp.outer_dart)
        << "\n";
  }
  for (int c = 0; c < w.circle_count(); ++c) {
    if (w.circle_hosts()[c].kind != Host::Kind::Unbounded) out << "nest c" << c << " in " << host_text(w.circle_hosts()[c]) << "\n";
  }
  return out.str();
}

}  // namespace sl3
