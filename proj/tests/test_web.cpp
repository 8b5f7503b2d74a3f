#include "sl3/classify.hpp"
#include "sl3/error.hpp"
#include "sl3/skein.hpp"
#include "sl3/web.hpp"
#include "sl3/web_text.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sl3;
using sl3::testing::fixture;
using sl3::testing::load;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_webs(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for:\n" << text);
  return ErrorCode::Malformed;
}

void check_euler(const Web& w) {
  // Closed web: V - E + F = 2 per component, so V - E + F = 1 + components
  // counting the shared unbounded face once. A circle is one component.
  REQUIRE(w.is_closed());
  FaceMap fm = w.faces();
  int components = static_cast<int>(w.closed_components().size()) + w.circle_count();
  CHECK(w.vertex_count() - w.edge_count() + static_cast<int>(fm.size()) == 1 + components);
}

}  // namespace

TEST_CASE("bundled fixtures parse") {
  CHECK(load("y.web").vertex_count() == 1);
  CHECK(load("y.web").boundary().to_string() == "+++");
  CHECK(load("y_sink.web").boundary().to_string() == "---");
  CHECK(load("theta.web").vertex_count() == 2);
  CHECK(load("theta.web").is_closed());
  CHECK(load("circle.web").circle_count() == 1);
  Web w = load("kk_w.web");
  CHECK(w.vertex_count() == 24);
  CHECK(w.edge_count() == 42);
  CHECK(w.boundary().to_string() == "+--++--++--+");
  CHECK(load("kk_w0.web").boundary() == w.boundary());
}

TEST_CASE("validation errors carry codes") {
  CHECK(code_of("web a\nboundary\nvertex v sink\nvertex u source\nedge e1 u v\nedge e2 u v\n") == ErrorCode::NonTrivalent);
  CHECK(code_of("web a\nboundary + + +\nvertex v sink\nedge e1 v b1\nedge e2 v b2\nedge e3 v b3\nrot v e1 e2 e3\n") ==
        ErrorCode::MixedVertexOrientation);
  CHECK(code_of("web a\nboundary\nvertex u source\nvertex v sink\nedge e1 u v\nedge e2 u v\nedge e3 u v\n"
                "rot u e1 e2 e3\nrot v e1 e2 e3\n") == ErrorCode::Nonplanar);
  CHECK(code_of("web a\nboundary + -\nedge e1 b1 b2\n") == ErrorCode::BoundarySignMismatch);
  CHECK(code_of("web a\nboundary\ncircle c\nnest c in c 0\n") == ErrorCode::MalformedContainment);
}

TEST_CASE("parse errors report the line") {
  try {
    parse_webs("web a\nboundary + + +\nvertex v source\nedge e1 v b1\nedge e2 v b2\nedge e3 v b3\nrot v e1 e2\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 7") != std::string::npos);
  }
  CHECK(code_of("web a\nboundary + x\n") == ErrorCode::ParseError);
  CHECK(code_of("vertex v sink\n") == ErrorCode::ParseError);
}

TEST_CASE("mirror") {
  for (const char* f : {"y.web", "arc.web", "theta.web", "kk_w.web", "kk_w0.web", "semi_superficial.web"}) {
    CAPTURE(f);
    Web w = load(f);
    CHECK(mirror(mirror(w)) == w);
    CHECK(mirror(w).boundary() == w.boundary().mirrored());
  }
  CHECK(mirror(load("y.web")) == load("y_sink.web"));
  CHECK(mirror(load("arc.web")).boundary().to_string() == "+-");
}

TEST_CASE("glue") {
  for (const char* f : {"y.web", "arc.web", "kk_w.web", "kk_w0.web"}) {
    Web w = load(f);
    Web g = glue(w, w);
    CHECK(g.is_closed());
    CHECK(g.vertex_count() == 2 * w.vertex_count());
  }
  CHECK(glue(load("arc.web"), load("arc.web")) == load("circle.web"));
  CHECK(glue(load("y.web"), load("y.web")) == load("theta.web"));
  CHECK_THROWS_AS(glue(load("y.web"), load("arc.web")), Error);
}

TEST_CASE("components and disjoint union") {
  Web two = Web::circles(2);
  auto parts = connected_components(two);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == load("circle.web"));
  Web c = load("circle.web");
  Web nested = disjoint_union(c, c, Host::inside_circle(0));
  CHECK(nested.faces().size() == 3);
  CHECK_FALSE(nested == two);
  CHECK(kuperberg_bracket(nested) == kuperberg_bracket(two));
  Web tt = disjoint_union(load("theta.web"), load("theta.web"), Host::face_left_of(0));
  CHECK(tt.vertex_count() == 4);
  CHECK(connected_components(tt).size() == 2);
}

TEST_CASE("faces satisfy Euler's formula") {
  for (const char* f : {"y.web", "arc.web", "theta.web", "circle.web", "kk_w.web", "kk_w0.web", "semi_superficial.web"}) {
    CAPTURE(f);
    Web w = load(f);
    if (w.is_closed()) check_euler(w);
    check_euler(glue(w, w));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) check_euler(testing::random_closed_web(rng, 6, 6));
}

TEST_CASE("closed webs have a small face") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Web w = testing::random_closed_web(rng, 7, 6);
    if (w.vertex_count() == 0 && w.circle_count() == 0) continue;
    CHECK(find_reducible(w).has_value());
  }
}

TEST_CASE("text round trip") {
  for (const char* f : {"y.web", "y_sink.web", "arc.web", "theta.web", "circle.web", "kk_w.web", "kk_w0.web",
                        "semi_superficial.web"}) {
    CAPTURE(f);
    Web w = load(f);
    CHECK(parse_webs(to_text(w)).front().web == w);
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Web w = testing::grow(testing::random_steps(rng, 6, 8));
    CHECK(parse_webs(to_text(w)).front().web == w);
    Web g = testing::random_closed_web(rng, 5, 6);
    CHECK(parse_webs(to_text(g)).front().web == g);
  }
  Web nested = disjoint_union(load("circle.web"), load("theta.web"), Host::inside_circle(0));
  CHECK(parse_webs(to_text(nested)).front().web == nested);
}

TEST_CASE("multiple blocks per file") {
  auto webs = parse_webs(read_file(fixture("y.web")) + read_file(fixture("arc.web")));
  REQUIRE(webs.size() == 2);
  CHECK(webs[0].name == "y");
  CHECK(webs[1].name == "arc");
}
