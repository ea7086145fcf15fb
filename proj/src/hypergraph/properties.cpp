#include "rtlab/hypergraph/properties.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "rtlab/error.hpp"
#include "rtlab/hypergraph/sampling.hpp"
#include "rtlab/params/bounds.hpp"

namespace rtlab::hypergraph {

using geometry::IncidenceStructure;
using geometry::StructureKind;

namespace {

nlohmann::json range_detail(const std::vector<int>& values, double lambda) {
  const double lo = lambda / 2.0, hi = 1.5 * lambda;
  int outside = 0;
  int first_bad = -1;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < lo || values[i] > hi) {
      if (first_bad < 0) first_bad = static_cast<int>(i);
      ++outside;
    }
  nlohmann::json d = {{"low", lo}, {"high", hi}, {"outside", outside}};
  if (!values.empty()) {
    d["min"] = *std::min_element(values.begin(), values.end());
    d["max"] = *std::max_element(values.begin(), values.end());
  }
  if (first_bad >= 0) d["first_outside"] = first_bad;
  return d;
}

void dangerous_check(VerificationReport& rep, const std::string& name, double log_bound,
                     const IncidenceStructure& hx, int r, const EnumerationLimits& limits, bool type1, int size) {
  try {
    const auto sets = type1 ? enumerate_dangerous_type1(hx, size, limits)
                            : enumerate_dangerous_type2(hx, size, r, limits);
    for (const auto& d : sets)
      if (!validate(hx, d, r)) {
        rep.add_check(name + "-witness", Status::fail, to_json(d));
        return;
      }
    const double bound = std::exp(log_bound);
    const auto count = static_cast<double>(sets.size());
    nlohmann::json detail = {{"count", sets.size()}, {"bound", bound}, {"log_bound", log_bound}};
    rep.add_check(name, count <= bound ? Status::pass : Status::advisory, detail);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::size_limit && e.code() != ErrorCode::bad_param) throw;
    rep.add_check(name, Status::skipped, {{"reason", e.what()}});
  }
}

}  // namespace

VerificationReport verify_h_properties(const IncidenceStructure& hx, const HPropertyInputs& in) {
  const auto start = std::chrono::steady_clock::now();
  const bool h1 = hx.kind() == StructureKind::sampled_h1;
  if (!h1 && hx.kind() != StructureKind::sampled_h2)
    throw Error(ErrorCode::bad_tag, "verify_h_properties needs a sampled-H1 or sampled-H2 structure, got " +
                                        std::string(geometry::to_string(hx.kind())));
  if (in.q < 2) throw Error(ErrorCode::bad_param, "q must be given");

  VerificationReport rep;
  rep.property = h1 ? "h1-properties" : "h2-properties";
  rep.params = {{"q", in.q}, {"lambda", in.lambda}, {"r", in.r}, {"a", in.a}, {"b", in.b}};

  if (auto v = hx.linearity_violation())
    rep.add_check("linearity", Status::fail,
                  {{"points", {(*v)[0], (*v)[1]}}, {"lines", {(*v)[2], (*v)[3]}}});
  else
    rep.add_check("linearity", Status::pass);

  std::vector<int> sizes;
  if (h1) {
    sizes = hx.degrees();
  } else {
    for (const auto& line : hx.lines()) sizes.push_back(static_cast<int>(line.size()));
  }
  auto detail = range_detail(sizes, in.lambda);
  if (!h1) detail["pruned_lines"] = in.pruned_lines;
  rep.add_check(h1 ? "degree-range" : "line-size-range",
                detail["outside"].get<int>() == 0 ? Status::pass : Status::statistical, detail);

  if (in.enumerate_dangerous) {
    const auto q = static_cast<double>(in.q);
    const double l1 = h1 ? params::log_h1_type1_bound(in.lambda, q, in.a) : params::log_h2_type1_bound(in.lambda, q, in.a);
    const double l2 =
        h1 ? params::log_h1_type2_bound(in.lambda, q, in.b, in.r) : params::log_h2_type2_bound(in.lambda, q, in.b, in.r);
    dangerous_check(rep, "dangerous-type1", l1, hx, in.r, in.limits, true, in.a);
    dangerous_check(rep, "dangerous-type2", l2, hx, in.r, in.limits, false, in.b);
  }

  rep.value = {{"points", hx.num_points()}, {"lines", hx.num_lines()}};
  rep.settle();
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

RangeSweep sweep_h1_degree_range(const IncidenceStructure& h, double lambda, std::uint64_t first_seed, int count) {
  RangeSweep out;
  const int q = remnant_order(h);
  for (int i = 0; i < count; ++i) {
    const auto h1 = sample_h1(h, {lambda, SamplingMode::line_subsample, first_seed + static_cast<std::uint64_t>(i)});
    const auto deg = h1.degrees();
    const bool bad = std::any_of(deg.begin(), deg.end(), [&](int d) { return d < lambda / 2.0 || d > 1.5 * lambda; });
    out.out_of_range += bad ? 1 : 0;
  }
  out.seeds = count;
  out.frequency = count > 0 ? static_cast<double>(out.out_of_range) / count : 0.0;
  out.chernoff_union_bound = 2.0 * q * q * std::exp(-lambda / 12.0);
  return out;
}

}  // namespace rtlab::hypergraph
