#pragma once

#include "sl3/web.hpp"

#include <string>
#include <vector>

namespace sl3 {

/// Side counts of all bounded faces, ascending. A circle's disk counts one
/// side per circle on its boundary.
std::vector<int> bounded_face_profile(const Web& w);

bool is_non_elliptic(const Web& w);

/// Bounded faces grouped by edge adjacency, the unbounded face removed.
/// Each block is sorted; blocks are ordered by their smallest face id.
std::vector<std::vector<int>> blocks(const Web& w);

/// Bounded faces sharing no edge with the unbounded face.
std::vector<int> nested_faces(const Web& w);
bool is_superficial(const Web& w);

bool is_semi_non_elliptic(const Web& w);
bool is_1_elliptic(const Web& w);
bool is_semi_superficial(const Web& w);

struct Classification {
  std::vector<int> profile;
  int block_count = 0;
  int nested_count = 0;
  bool non_elliptic = false;
  bool superficial = false;
  bool semi_non_elliptic = false;
  bool one_elliptic = false;
  bool semi_superficial = false;
};

Classification classify(const Web& w);

}  // namespace sl3
