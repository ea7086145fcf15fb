#include "rtlab/geometry/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rtlab/error.hpp"

namespace rtlab::geometry {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::affine_plane: return "affine-plane";
    case StructureKind::remnant_h: return "remnant-H";
    case StructureKind::sampled_h1: return "sampled-H1";
    case StructureKind::sampled_h2: return "sampled-H2";
    case StructureKind::quadrangle: return "quadrangle";
  }
  return "unknown";
}

StructureKind structure_kind_from_string(std::string_view tag) {
  for (auto k : {StructureKind::affine_plane, StructureKind::remnant_h, StructureKind::sampled_h1,
                 StructureKind::sampled_h2, StructureKind::quadrangle}) {
    if (to_string(k) == tag) return k;
  }
  throw Error(ErrorCode::parse_error, "unknown structure kind '" + std::string(tag) + "'");
}


std::vector<std::size_t> lexicographic_order(const std::vector<Line>& lines) {
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lines[a] < lines[b]; });
  return order;
}

IncidenceStructure::IncidenceStructure(int num_points, std::vector<Line> lines, StructureKind kind)
    : num_points_(num_points), kind_(kind) {
  if (num_points < 0) throw Error(ErrorCode::bad_inputs, "negative point count");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l[j] < 0 || l[j] >= num_points)
        throw Error(ErrorCode::bad_inputs, "line " + std::to_string(i) + " has point out of range");
      if (j > 0 && l[j - 1] >= l[j])
        throw Error(ErrorCode::bad_inputs, "line " + std::to_string(i) + " is not strictly increasing");
    }
  }
  std::sort(lines.begin(), lines.end());
  lines_ = std::move(lines);
}

std::vector<std::vector<int>> IncidenceStructure::point_lines() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_points_));
  for (std::size_t i = 0; i < lines_.size(); ++i)
    for (int p : lines_[i]) out[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
  return out;
}

std::vector<int> IncidenceStructure::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_points_), 0);
  for (const auto& l : lines_)
    for (int p : l) ++deg[static_cast<std::size_t>(p)];
  return deg;
}

bool IncidenceStructure::contains(std::size_t line_index, int point) const {
  const auto& l = lines_.at(line_index);
  return std::binary_search(l.begin(), l.end(), point);
}

std::optional<std::vector<int>> IncidenceStructure::linearity_violation() const {
  const auto n = static_cast<std::uint64_t>(num_points_);
  const bool dense = n <= 2048;
  std::vector<std::int32_t> owner_dense;
  std::unordered_map<std::uint64_t, std::int32_t> owner_sparse;
  if (dense) owner_dense.assign(n * n, -1);
  for (std::size_t li = 0; li < lines_.size(); ++li) {
    const auto& l = lines_[li];
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        const auto key = static_cast<std::uint64_t>(l[a]) * n + static_cast<std::uint64_t>(l[b]);
        std::int32_t prior = -1;
        if (dense) {
          prior = owner_dense[key];
          if (prior < 0) owner_dense[key] = static_cast<std::int32_t>(li);
        } else {
          auto [it, inserted] = owner_sparse.emplace(key, static_cast<std::int32_t>(li));
          if (!inserted) prior = it->second;
        }
        if (prior >= 0) return std::vector<int>{l[a], l[b], prior, static_cast<int>(li)};
      }
    }
  }
  return std::nullopt;
}

IncidenceStructure relabel_points(const IncidenceStructure& s, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(s.num_points()))
    throw Error(ErrorCode::bad_inputs, "permutation size mismatch");
  std::vector<Line> lines;
  lines.reserve(s.num_lines());
  for (const auto& l : s.lines()) {
    Line m;
    m.reserve(l.size());
    for (int p : l) m.push_back(perm[static_cast<std::size_t>(p)]);
    std::sort(m.begin(), m.end());
    lines.push_back(std::move(m));
  }
  return IncidenceStructure(s.num_points(), std::move(lines), s.kind());
}

PairIndex::PairIndex(const IncidenceStructure& s) : n_(s.num_points()) {
  const bool dense = n_ <= 2048;
  if (dense) dense_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
  for (std::size_t li = 0; li < s.num_lines(); ++li) {
    const auto& l = s.line(li);
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        auto u = static_cast<std::uint64_t>(l[a]);
        auto v = static_cast<std::uint64_t>(l[b]);
        if (dense) {
          auto& x = dense_[u * static_cast<std::uint64_t>(n_) + v];
          if (x < 0) {
            x = static_cast<std::int32_t>(li);
            dense_[v * static_cast<std::uint64_t>(n_) + u] = x;
          }
        } else {
          sparse_.emplace((u << 32) | v, static_cast<std::int32_t>(li));
        }
      }
    }
  }
}

int PairIndex::line_of(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  if (!dense_.empty())
    return dense_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  if (u > v) std::swap(u, v);
  auto it = sparse_.find((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
  return it == sparse_.end() ? -1 : it->second;
}

}  // namespace rtlab::geometry
