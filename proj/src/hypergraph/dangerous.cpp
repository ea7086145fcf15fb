#include "rtlab/hypergraph/dangerous.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rtlab/combinatorics.hpp"
#include "rtlab/error.hpp"

namespace rtlab::hypergraph {

using geometry::IncidenceStructure;
using geometry::PairIndex;

namespace {

void check_guard(const IncidenceStructure& hx, int size, const EnumerationLimits& limits) {
  if (hx.num_points() > limits.max_points && size > limits.max_small_size)
    throw Error(ErrorCode::size_limit, "exhaustive dangerous-set search on " + std::to_string(hx.num_points()) +
                                           " points needs set size <= " + std::to_string(limits.max_small_size));
}

std::vector<int> covering_lines_indexed(const PairIndex& pairs, std::span<const int> points) {
  std::vector<int> lines;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const int l = pairs.line_of(points[i], points[j]);
      if (l >= 0) lines.push_back(l);
    }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

int meet_count(const geometry::Line& line, std::span<const int> sorted_points) {
  int c = 0;
  for (int p : sorted_points)
    if (std::binary_search(line.begin(), line.end(), p)) ++c;
  return c;
}

}  // namespace

long long count_incidences(const IncidenceStructure& hx, std::span<const int> points, std::span<const int> lines) {
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  long long total = 0;
  for (int li : lines) total += meet_count(hx.line(static_cast<std::size_t>(li)), sorted);
  return total;
}

std::vector<int> covering_lines(const IncidenceStructure& hx, std::span<const int> points) {
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (std::size_t li = 0; li < hx.num_lines(); ++li)
    if (meet_count(hx.line(li), sorted) >= 2) out.push_back(static_cast<int>(li));
  return out;
}

bool is_complete(const PairIndex& pairs, std::span<const int> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!pairs.covered(points[i], points[j])) return false;
  return true;
}

bool is_type1(const IncidenceStructure& hx, const PairIndex& pairs, std::span<const int> points) {
  if (!is_complete(pairs, points)) return false;
  const auto lines = covering_lines_indexed(pairs, points);
  // Complete with no collinear triple <=> every pair has its own line.
  const auto pairs_count = points.size() * (points.size() - 1) / 2;
  if (lines.size() != pairs_count) return false;
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (int li : lines)
    if (meet_count(hx.line(static_cast<std::size_t>(li)), sorted) > 2) return false;
  return true;
}

std::optional<DangerousSet> as_type2(const IncidenceStructure& hx, const PairIndex& pairs,
                                     std::span<const int> points, int r) {
  const auto b = static_cast<int>(points.size());
  if (r < 1 || b <= r || !is_complete(pairs, points)) return std::nullopt;
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t li = 0; li < hx.num_lines(); ++li) {
    const auto& line = hx.line(li);
    if (meet_count(line, sorted) != b - r) continue;
    DangerousSet d;
    d.kind = DangerKind::type2;
    d.vertices = sorted;
    d.spine_line = static_cast<int>(li);
    for (int p : sorted)
      if (!std::binary_search(line.begin(), line.end(), p)) d.off_points.push_back(p);
    d.witness_lines = covering_lines_indexed(pairs, sorted);
    d.incidences = count_incidences(hx, sorted, d.witness_lines);
    return d;
  }
  return std::nullopt;
}

std::vector<DangerousSet> enumerate_dangerous_type1(const IncidenceStructure& hx, int a, EnumerationLimits limits) {
  if (a < 3) throw Error(ErrorCode::bad_param, "type 1 dangerous sets need a >= 3");
  check_guard(hx, a, limits);
  const PairIndex pairs(hx);
  const int n = hx.num_points();
  std::vector<DangerousSet> out;
  std::vector<int> chosen;
  std::vector<char> used(hx.num_lines(), 0);

  // Candidates are kept collinear with every chosen point.
  auto extend = [&](auto&& self, const std::vector<int>& candidates) -> void {
    if (static_cast<int>(chosen.size()) == a) {
      DangerousSet d;
      d.kind = DangerKind::type1;
      d.vertices = chosen;
      d.witness_lines = covering_lines_indexed(pairs, chosen);
      d.incidences = count_incidences(hx, chosen, d.witness_lines);
      out.push_back(std::move(d));
      return;
    }
    const auto need = static_cast<std::size_t>(a) - chosen.size();
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      if (candidates.size() - ci < need) break;
      const int v = candidates[ci];
      std::vector<int> new_lines;
      bool ok = true;
      for (int x : chosen) {
        const int l = pairs.line_of(x, v);
        if (l < 0 || used[static_cast<std::size_t>(l)] ||
            std::find(new_lines.begin(), new_lines.end(), l) != new_lines.end()) {
          ok = false;
          break;
        }
        new_lines.push_back(l);
      }
      if (!ok) continue;
      std::vector<int> next;
      for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj)
        if (pairs.covered(v, candidates[cj])) next.push_back(candidates[cj]);
      for (int l : new_lines) used[static_cast<std::size_t>(l)] = 1;
      chosen.push_back(v);
      self(self, next);
      chosen.pop_back();
      for (int l : new_lines) used[static_cast<std::size_t>(l)] = 0;
    }
  };
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  extend(extend, all);
  return out;  // generated in lexicographic order
}

std::vector<DangerousSet> enumerate_dangerous_type2(const IncidenceStructure& hx, int b, int r,
                                                    EnumerationLimits limits) {
  if (r < 1 || b <= r) throw Error(ErrorCode::bad_param, "type 2 dangerous sets need b > r >= 1");
  check_guard(hx, b, limits);
  const PairIndex pairs(hx);
  const int n = hx.num_points();
  const auto spine_size = static_cast<std::size_t>(b - r);
  std::map<std::vector<int>, DangerousSet> found;

  for (std::size_t li = 0; li < hx.num_lines(); ++li) {
    const auto& line = hx.line(li);
    if (line.size() < spine_size) continue;
    for_each_combination(std::span<const int>(line), spine_size, [&](std::span<const int> spine) {
      std::vector<int> candidates;
      for (int v = 0; v < n; ++v) {
        if (std::binary_search(line.begin(), line.end(), v)) continue;
        bool ok = true;
        for (int t : spine)
          if (!pairs.covered(v, t)) {
            ok = false;
            break;
          }
        if (ok) candidates.push_back(v);
      }
      for_each_combination(std::span<const int>(candidates), static_cast<std::size_t>(r),
                           [&](std::span<const int> off) {
                             if (!is_complete(pairs, off)) return true;
                             std::vector<int> s(spine.begin(), spine.end());
                             s.insert(s.end(), off.begin(), off.end());
                             std::sort(s.begin(), s.end());
                             if (found.contains(s)) return true;
                             DangerousSet d;
                             d.kind = DangerKind::type2;
                             d.vertices = s;
                             d.spine_line = static_cast<int>(li);
                             d.off_points.assign(off.begin(), off.end());
                             d.witness_lines = covering_lines_indexed(pairs, s);
                             d.incidences = count_incidences(hx, s, d.witness_lines);
                             found.emplace(std::move(s), std::move(d));
                             return true;
                           });
      return true;
    });
  }
  std::vector<DangerousSet> out;
  out.reserve(found.size());
  for (auto& [_, d] : found) out.push_back(std::move(d));
  return out;
}

bool validate(const IncidenceStructure& hx, const DangerousSet& set, int r) {
  const auto& s = set.vertices;
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
    return false;
  for (int p : s)
    if (p < 0 || p >= hx.num_points()) return false;
  const auto lines = covering_lines(hx, s);
  if (lines != set.witness_lines) return false;
  // Completeness: every pair on one of the covering lines.
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool covered = false;
      for (int li : lines)
        if (hx.contains(static_cast<std::size_t>(li), s[i]) && hx.contains(static_cast<std::size_t>(li), s[j])) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  if (set.incidences != count_incidences(hx, s, lines)) return false;
  if (set.kind == DangerKind::type1) {
    for (int li : lines) {
      int c = 0;
      for (int p : s) c += hx.contains(static_cast<std::size_t>(li), p) ? 1 : 0;
      if (c >= 3) return false;
    }
    return true;
  }
  if (set.spine_line < 0 || static_cast<std::size_t>(set.spine_line) >= hx.num_lines()) return false;
  std::vector<int> off;
  for (int p : s)
    if (!hx.contains(static_cast<std::size_t>(set.spine_line), p)) off.push_back(p);
  return static_cast<int>(off.size()) == r && off == set.off_points;
}

long long type2_incidence_floor(int b, int r) {
  const long long rr = r;
  return (2 * rr + 1) * b - 4 * rr * rr * rr;
}

nlohmann::json to_json(const DangerousSet& set) {
  nlohmann::json j;
  j["kind"] = set.kind == DangerKind::type1 ? "type1" : "type2";
  j["vertices"] = set.vertices;
  j["witness_lines"] = set.witness_lines;
  j["spine_line"] = set.kind == DangerKind::type2 ? nlohmann::json(set.spine_line) : nlohmann::json(nullptr);
  j["off_points"] = set.off_points;
  j["incidences"] = set.incidences;
  return j;
}

}  // namespace rtlab::hypergraph
