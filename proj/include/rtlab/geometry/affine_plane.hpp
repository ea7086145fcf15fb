#pragma once

#include <vector>

#include "rtlab/geometry/incidence.hpp"

namespace rtlab::geometry {

// Partition of the plane's line indices into q+1 parallel classes. Class m
// (0 <= m < q) holds the lines of slope m; class q holds the vertical lines.
struct ParallelClassification {
  std::vector<std::vector<int>> classes;
};

struct AffinePlane {
  int order = 0;
  IncidenceStructure structure;
  ParallelClassification classification;
};

inline int vertical_class_index(int q) noexcept { return q; }
inline int point_index(int q, int x, int y) noexcept { return x * q + y; }

// AG(2,q) over GF(q): point (x,y) has index x*q + y; non-vertical lines are
// {(x, m*x + b)}, vertical lines {(c, y)}. Throws not_prime / size_limit.
AffinePlane build_affine_plane(int q, int max_order = 101);

// The remnant H: the plane without one parallel class. Throws bad_index.
IncidenceStructure remove_parallel_class(const AffinePlane& plane, int class_index);

}  // namespace rtlab::geometry
