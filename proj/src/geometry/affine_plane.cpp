#include "rtlab/geometry/affine_plane.hpp"

#include <algorithm>
#include <string>

#include "rtlab/error.hpp"
#include "rtlab/geometry/prime_field.hpp"

namespace rtlab::geometry {

AffinePlane build_affine_plane(int q, int max_order) {
  const PrimeField field(q);
  if (q > max_order)
    throw Error(ErrorCode::size_limit,
                "affine plane order " + std::to_string(q) + " exceeds " + std::to_string(max_order));

  std::vector<Line> lines;
  std::vector<int> class_of;
  lines.reserve(static_cast<std::size_t>(q * q + q));
  for (int m = 0; m < q; ++m) {
    for (int b = 0; b < q; ++b) {
      Line l;
      l.reserve(static_cast<std::size_t>(q));
      for (int x = 0; x < q; ++x) l.push_back(point_index(q, x, field.add(field.mul(m, x), b)));
      lines.push_back(std::move(l));  // x-major indexing keeps this ascending
      class_of.push_back(m);
    }
  }
  for (int c = 0; c < q; ++c) {
    Line l;
    for (int y = 0; y < q; ++y) l.push_back(point_index(q, c, y));
    lines.push_back(std::move(l));
    class_of.push_back(vertical_class_index(q));
  }

  const auto order = lexicographic_order(lines);
  ParallelClassification classification;
  classification.classes.resize(static_cast<std::size_t>(q + 1));
  for (std::size_t k = 0; k < order.size(); ++k)
    classification.classes[static_cast<std::size_t>(class_of[order[k]])].push_back(static_cast<int>(k));

  AffinePlane plane;
  plane.order = q;
  plane.structure = IncidenceStructure(q * q, std::move(lines), StructureKind::affine_plane);
  plane.classification = std::move(classification);
  return plane;
}

IncidenceStructure remove_parallel_class(const AffinePlane& plane, int class_index) {
  if (class_index < 0 || class_index > plane.order)
    throw Error(ErrorCode::bad_index, "parallel class index " + std::to_string(class_index) +
                                          " outside [0, " + std::to_string(plane.order) + "]");
  const auto& removed = plane.classification.classes[static_cast<std::size_t>(class_index)];
  std::vector<Line> kept;
  kept.reserve(plane.structure.num_lines() - removed.size());
  for (std::size_t i = 0; i < plane.structure.num_lines(); ++i) {
    if (!std::binary_search(removed.begin(), removed.end(), static_cast<int>(i)))
      kept.push_back(plane.structure.line(i));
  }
  return IncidenceStructure(plane.structure.num_points(), std::move(kept), StructureKind::remnant_h);
}

}  // namespace rtlab::geometry
