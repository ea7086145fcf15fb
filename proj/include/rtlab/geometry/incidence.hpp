#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rtlab::geometry {

enum class StructureKind { affine_plane, remnant_h, sampled_h1, sampled_h2, quadrangle };

std::string_view to_string(StructureKind kind);
// Throws Error(parse_error) for unknown tags.
StructureKind structure_kind_from_string(std::string_view tag);

using Line = std::vector<int>;

// Points 0..num_points-1 and lines as strictly ascending point lists. Lines
// are kept in lexicographic order so the structure has one canonical form.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  // Validates index ranges and ordering, then sorts the lines. Throws
  // Error(bad_inputs) on malformed lines.
  IncidenceStructure(int num_points, std::vector<Line> lines, StructureKind kind);

  int num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }
  StructureKind kind() const noexcept { return kind_; }

  // For each point, the ascending indices of the lines through it.
  std::vector<std::vector<int>> point_lines() const;
  std::vector<int> degrees() const;
  bool contains(std::size_t line_index, int point) const;

  // First pair found on two different lines, as (u, v, line_a, line_b).
  std::optional<std::vector<int>> linearity_violation() const;
  bool is_linear() const { return !linearity_violation().has_value(); }

  bool operator==(const IncidenceStructure&) const = default;

 private:
  int num_points_ = 0;
  std::vector<Line> lines_;
  StructureKind kind_ = StructureKind::affine_plane;
};

// Order of lines after lexicographic sorting: result[k] is the original index
// of the k-th sorted line.
std::vector<std::size_t> lexicographic_order(const std::vector<Line>& lines);

// Relabels points by perm (old index -> new index) and re-canonicalizes.
IncidenceStructure relabel_points(const IncidenceStructure& s, const std::vector<int>& perm);

// Pair -> line lookup for linear structures. The first line found wins if the
// structure is not linear.
class PairIndex {
 public:
  explicit PairIndex(const IncidenceStructure& s);

  // Line index containing both points, or -1.
  int line_of(int u, int v) const;
  bool covered(int u, int v) const { return line_of(u, v) >= 0; }

 private:
  int n_;
  std::vector<std::int32_t> dense_;
  std::unordered_map<std::uint64_t, std::int32_t> sparse_;
};

}  // namespace rtlab::geometry
