#include "sl3/classify.hpp"

#include <algorithm>

namespace sl3 {

namespace {

std::vector<int> squares_per_block(const FaceMap& fm, const std::vector<std::vector<int>>& bl) {
  std::vector<int> out;
  for (const auto& block : bl) {
    int squares = 0;
    for (int f : block) squares += fm.faces[f].sides == 4 ? 1 : 0;
    out.push_back(squares);
  }
  return out;
}

std::vector<std::vector<int>> blocks_of(const FaceMap& fm) {
  const int F = static_cast<int>(fm.size());
  std::vector<int> block(F, -1);
  std::vector<std::vector<int>> out;
  for (int f = 1; f < F; ++f) {
    if (block[f] != -1) continue;
    std::vector<int> members{f};
    block[f] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int g : fm.faces[members[i]].adjacent) {
        if (g == fm.unbounded() || block[g] != -1) continue;
        block[g] = block[f];
        members.push_back(g);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool has_small_face(const FaceMap& fm, int sides) {
  for (std::size_t f = 1; f < fm.size(); ++f) {
    if (fm.faces[f].sides == sides) return true;
  }
  return false;
}

std::vector<int> nested_of(const FaceMap& fm) {
  std::vector<int> out;
  for (int f = 1; f < static_cast<int>(fm.size()); ++f) {
    const auto& adj = fm.faces[f].adjacent;
    if (!std::binary_search(adj.begin(), adj.end(), fm.unbounded())) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<int> bounded_face_profile(const Web& w) {
  const FaceMap fm = w.faces();
  std::vector<int> out;
  for (std::size_t f = 1; f < fm.size(); ++f) out.push_back(fm.faces[f].sides);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_non_elliptic(const Web& w) {
  if (w.circle_count() > 0) return false;
  const FaceMap fm = w.faces();
  return !has_small_face(fm, 2) && !has_small_face(fm, 4);
}

std::vector<std::vector<int>> blocks(const Web& w) { return blocks_of(w.faces()); }

std::vector<int> nested_faces(const Web& w) { return nested_of(w.faces()); }

bool is_superficial(const Web& w) { return nested_faces(w).empty(); }

bool is_semi_non_elliptic(const Web& w) {
  if (w.circle_count() > 0) return false;
  const FaceMap fm = w.faces();
  if (has_small_face(fm, 2)) return false;
  for (int s : squares_per_block(fm, blocks_of(fm))) {
    if (s > 1) return false;
  }
  return true;
}

bool is_1_elliptic(const Web& w) {
  if (w.circle_count() > 0) return false;
  const FaceMap fm = w.faces();
  if (has_small_face(fm, 2)) return false;
  int doubles = 0;
  for (int s : squares_per_block(fm, blocks_of(fm))) {
    if (s > 2) return false;
    if (s == 2) ++doubles;
  }
  return doubles <= 1;
}

bool is_semi_superficial(const Web& w) {
  if (w.circle_count() > 0) return false;
  const FaceMap fm = w.faces();
  if (has_small_face(fm, 2)) return false;
  int square = -1;
  for (int f = 1; f < static_cast<int>(fm.size()); ++f) {
    if (fm.faces[f].sides != 4) continue;
    if (square != -1) return false;
    square = f;
  }
  if (square == -1) return false;
  const auto nested = nested_of(fm);
  if (nested.size() != 1) return false;
  const Face& h = fm.faces[nested[0]];
  return h.sides == 6 && std::binary_search(h.adjacent.begin(), h.adjacent.end(), square);
}

Classification classify(const Web& w) {
  Classification c;
  c.profile = bounded_face_profile(w);
  c.block_count = static_cast<int>(blocks(w).size());
  c.nested_count = static_cast<int>(nested_faces(w).size());
  c.non_elliptic = is_non_elliptic(w);
  c.superficial = c.nested_count == 0;
  c.semi_non_elliptic = is_semi_non_elliptic(w);
  c.one_elliptic = is_1_elliptic(w);
  c.semi_superficial = is_semi_superficial(w);
  return c;
}

}  // namespace sl3
