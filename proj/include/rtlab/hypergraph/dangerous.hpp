#pragma once

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "rtlab/geometry/incidence.hpp"

namespace rtlab::hypergraph {

enum class DangerKind { type1, type2 };

// A complete point set: every pair lies on a line of the structure.
// Type 1: no line holds three of the points. Type 2: a spine line holds all
// but r of them and the r off_points avoid the spine.
struct DangerousSet {
  DangerKind kind = DangerKind::type1;
  std::vector<int> vertices;
  std::vector<int> witness_lines;  // every line meeting the set in >= 2 points
  int spine_line = -1;
  std::vector<int> off_points;
  long long incidences = 0;

  bool operator==(const DangerousSet&) const = default;
};

struct EnumerationLimits {
  int max_points = 400;     // exhaustive search allowed up to this many points...
  int max_small_size = 4;   // ...or for any instance when the set size is this small
};

// |{(v, L) : v in points, L in lines, v on L}|
long long count_incidences(const geometry::IncidenceStructure& hx, std::span<const int> points,
                           std::span<const int> lines);

// Lines meeting `points` in at least two points, ascending.
std::vector<int> covering_lines(const geometry::IncidenceStructure& hx, std::span<const int> points);

bool is_complete(const geometry::PairIndex& pairs, std::span<const int> points);
bool is_type1(const geometry::IncidenceStructure& hx, const geometry::PairIndex& pairs,
              std::span<const int> points);
// Returns the set as a Type 2 dangerous set with the lowest-index spine, if
// it is one.
std::optional<DangerousSet> as_type2(const geometry::IncidenceStructure& hx, const geometry::PairIndex& pairs,
                                     std::span<const int> points, int r);

// All Type 1 dangerous sets of size a, sorted by vertex list. Throws
// Error(size_limit) outside the exhaustive guard and Error(bad_param) if a < 3.
std::vector<DangerousSet> enumerate_dangerous_type1(const geometry::IncidenceStructure& hx, int a,
                                                    EnumerationLimits limits = {});

// All Type 2 dangerous sets of size b, one entry per vertex set (spine is the
// lowest-index line that works), sorted by vertex list.
std::vector<DangerousSet> enumerate_dangerous_type2(const geometry::IncidenceStructure& hx, int b, int r,
                                                    EnumerationLimits limits = {});

// Re-checks the type invariants of a returned set against the structure.
bool validate(const geometry::IncidenceStructure& hx, const DangerousSet& set, int r);

// Lower bound on point-line incidences of a Type 2 set: (2r+1)b - 4r^3.
long long type2_incidence_floor(int b, int r);

nlohmann::json to_json(const DangerousSet& set);

}  // namespace rtlab::hypergraph
