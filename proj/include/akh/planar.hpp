#pragma once

#include <vector>

#include "akh/diagram.hpp"

namespace akh {

// A dart is an arc traversed along (forward) or against its orientation.
struct Dart {
  int arc = 0;
  bool forward = true;
  bool operator==(const Dart&) const = default;
};

struct FaceData {
  std::vector<std::vector<Dart>> faces;
  std::vector<int> left_face_forward;   // per arc
  std::vector<int> left_face_backward;  // per arc
  // corner[c][k] is the face between slots k and k+1 of crossing c.
  std::vector<std::array<int, 4>> corner;
};

FaceData faces(const AnnularDiagram& d);

struct Checkerboard {
  FaceData faces;
  std::vector<char> white;  // per face
  int axis_face = -1;
  int M = 0;
};

// White faces are the ones joined by the 0-smoothing at crossing 0.
Checkerboard checkerboard_and_M(const AnnularDiagram& d);

struct GoeritzData {
  Checkerboard coloring;
  std::vector<std::vector<long long>> matrix;  // over all white faces; rows sum to zero
  int mu = 0;
  int signature = 0;
  long long determinant = 0;
};

// A single crossingless circle gets sigma 0 and det 1 with an empty matrix.
// Use the opposite colouring when `swap_colors` is set; sigma and det do not depend on it.
GoeritzData goeritz(const AnnularDiagram& d, bool swap_colors = false);

int signature_of(const std::vector<std::vector<long long>>& symmetric);
long long abs_determinant(const std::vector<std::vector<long long>>& square);

}  // namespace akh
