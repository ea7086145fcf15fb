#include "rtlab/hypergraph/sampling.hpp"

#include <cmath>
#include <string>

#include "rtlab/error.hpp"
#include "rtlab/rng.hpp"

namespace rtlab::hypergraph {

using geometry::IncidenceStructure;
using geometry::StructureKind;

int remnant_order(const IncidenceStructure& h) {
  const auto q = static_cast<int>(std::lround(std::sqrt(static_cast<double>(h.num_points()))));
  if (q < 2 || q * q != h.num_points())
    throw Error(ErrorCode::bad_inputs, "structure with " + std::to_string(h.num_points()) +
                                           " points is not a remnant of an affine plane");
  return q;
}

double keep_probability(double lambda, int q) {
  if (!(lambda > 0.0) || lambda > static_cast<double>(q) || !std::isfinite(lambda))
    throw Error(ErrorCode::bad_lambda,
                "lambda " + std::to_string(lambda) + " outside (0, " + std::to_string(q) + "]");
  return lambda / static_cast<double>(q);
}

namespace {

void require_remnant(const IncidenceStructure& h) {
  if (h.kind() != StructureKind::remnant_h)
    throw Error(ErrorCode::bad_tag, "sampler input must be tagged remnant-H, got " +
                                        std::string(geometry::to_string(h.kind())));
}

std::vector<char> decisions(std::size_t count, double prob, std::uint64_t seed, StreamKind kind) {
  const CounterRng rng(seed, kind);
  std::vector<char> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = rng.uniform(i) < prob ? 1 : 0;
  return out;
}

}  // namespace

std::vector<char> h1_line_decisions(const IncidenceStructure& h, const SamplingSpec& spec) {
  require_remnant(h);
  if (spec.mode != SamplingMode::line_subsample)
    throw Error(ErrorCode::bad_mode, "H1 sampling requires line-subsample mode");
  const double prob = keep_probability(spec.lambda, remnant_order(h));
  return decisions(h.num_lines(), prob, spec.seed, StreamKind::line_keep);
}

std::vector<char> h2_point_decisions(const IncidenceStructure& h, const SamplingSpec& spec) {
  require_remnant(h);
  if (spec.mode != SamplingMode::vertex_eliminate)
    throw Error(ErrorCode::bad_mode, "H2 sampling requires vertex-eliminate mode");
  const double prob = keep_probability(spec.lambda, remnant_order(h));
  return decisions(static_cast<std::size_t>(h.num_points()), prob, spec.seed, StreamKind::point_keep);
}

IncidenceStructure sample_h1_with(const IncidenceStructure& h, std::span<const char> keep) {
  if (keep.size() != h.num_lines()) throw Error(ErrorCode::bad_inputs, "decision vector size mismatch");
  std::vector<geometry::Line> lines;
  for (std::size_t i = 0; i < h.num_lines(); ++i)
    if (keep[i]) lines.push_back(h.line(i));
  return IncidenceStructure(h.num_points(), std::move(lines), StructureKind::sampled_h1);
}

IncidenceStructure sample_h1(const IncidenceStructure& h, const SamplingSpec& spec) {
  return sample_h1_with(h, h1_line_decisions(h, spec));
}

H2Sample sample_h2_with(const IncidenceStructure& h, std::span<const char> survive) {
  if (survive.size() != static_cast<std::size_t>(h.num_points()))
    throw Error(ErrorCode::bad_inputs, "decision vector size mismatch");
  H2Sample out;
  std::vector<int> new_index(survive.size(), -1);
  for (std::size_t v = 0; v < survive.size(); ++v) {
    if (survive[v]) {
      new_index[v] = static_cast<int>(out.surviving.size());
      out.surviving.push_back(static_cast<int>(v));
    } else {
      ++out.eliminated;
    }
  }
  std::vector<geometry::Line> lines;
  for (const auto& l : h.lines()) {
    geometry::Line kept;
    for (int p : l)
      if (new_index[static_cast<std::size_t>(p)] >= 0) kept.push_back(new_index[static_cast<std::size_t>(p)]);
    if (kept.size() < 2) {
      ++out.pruned_lines;
      continue;
    }
    lines.push_back(std::move(kept));
  }
  out.structure = IncidenceStructure(static_cast<int>(out.surviving.size()), std::move(lines),
                                     StructureKind::sampled_h2);
  return out;
}

H2Sample sample_h2_detailed(const IncidenceStructure& h, const SamplingSpec& spec) {
  return sample_h2_with(h, h2_point_decisions(h, spec));
}

IncidenceStructure sample_h2(const IncidenceStructure& h, const SamplingSpec& spec) {
  return sample_h2_detailed(h, spec).structure;
}

}  // namespace rtlab::hypergraph
