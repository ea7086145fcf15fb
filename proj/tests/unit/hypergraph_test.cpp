#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rtlab/error.hpp"
#include "rtlab/geometry/affine_plane.hpp"
#include "rtlab/hypergraph/dangerous.hpp"
#include "rtlab/hypergraph/properties.hpp"
#include "rtlab/hypergraph/sampling.hpp"
#include "rtlab/params/bounds.hpp"

using namespace rtlab;
using namespace rtlab::hypergraph;
using geometry::IncidenceStructure;

namespace {

IncidenceStructure remnant(int q) {
  return geometry::remove_parallel_class(geometry::build_affine_plane(q), geometry::vertical_class_index(q));
}

std::vector<std::vector<int>> vertex_sets(const std::vector<DangerousSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.vertices);
  return out;
}

}  // namespace

TEST(SampleH1, FullLambdaKeepsEverything) {
  const auto h = remnant(5);
  const auto h1 = sample_h1(h, {5.0, SamplingMode::line_subsample, 3});
  EXPECT_EQ(h1.kind(), geometry::StructureKind::sampled_h1);
  EXPECT_EQ(h1.lines(), h.lines());
}

TEST(SampleH1, DeterministicAndLinear) {
  const auto h = remnant(11);
  const auto a = sample_h1(h, {4.0, SamplingMode::line_subsample, 42});
  const auto b = sample_h1(h, {4.0, SamplingMode::line_subsample, 42});
  EXPECT_EQ(a, b);
  EXPECT_LE(a.num_lines(), 121u);
  EXPECT_TRUE(a.is_linear());
  const auto c = sample_h1(h, {4.0, SamplingMode::line_subsample, 43});
  EXPECT_NE(a.lines(), c.lines());
}

TEST(SampleH1, DecisionsMatchTheDrawnLines) {
  const auto h = remnant(7);
  const SamplingSpec spec{3.0, SamplingMode::line_subsample, 9};
  const auto keep = h1_line_decisions(h, spec);
  std::vector<geometry::Line> expected;
  for (std::size_t l = 0; l < h.num_lines(); ++l)
    if (keep[l]) expected.push_back(h.line(l));
  EXPECT_EQ(sample_h1(h, spec).lines(), expected);
}

TEST(SampleH1, RejectsBadLambda) {
  const auto h = remnant(5);
  for (double lambda : {0.0, -1.0, 5.5}) {
    try {
      sample_h1(h, {lambda, SamplingMode::line_subsample, 1});
      FAIL() << lambda;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::bad_lambda);
    }
  }
}

TEST(SampleH2, FullLambdaEliminatesNothing) {
  const auto h = remnant(5);
  const auto s = sample_h2_detailed(h, {5.0, SamplingMode::vertex_eliminate, 1});
  EXPECT_EQ(s.eliminated, 0);
  EXPECT_EQ(s.structure.lines(), h.lines());
}

TEST(SampleH2, SurvivorsAreReindexedInOrder) {
  const auto h = remnant(7);
  const SamplingSpec spec{3.0, SamplingMode::vertex_eliminate, 5};
  const auto survive = h2_point_decisions(h, spec);
  const auto s = sample_h2_detailed(h, spec);
  std::vector<int> expected;
  for (int p = 0; p < h.num_points(); ++p)
    if (survive[p]) expected.push_back(p);
  EXPECT_EQ(s.surviving, expected);
  EXPECT_EQ(s.eliminated, h.num_points() - static_cast<int>(expected.size()));
  // Every output line is the image of the surviving part of an input line.
  int pruned = 0;
  std::vector<geometry::Line> images;
  for (const auto& line : h.lines()) {
    geometry::Line img;
    for (int p : line) {
      const auto it = std::lower_bound(expected.begin(), expected.end(), p);
      if (it != expected.end() && *it == p) img.push_back(static_cast<int>(it - expected.begin()));
    }
    if (img.size() >= 2) images.push_back(img); else ++pruned;
  }
  std::sort(images.begin(), images.end());
  EXPECT_EQ(s.structure.lines(), images);
  EXPECT_EQ(s.pruned_lines, pruned);
}

TEST(SampleH2, LinearForEverySeed) {
  const auto h = remnant(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_TRUE(sample_h2(h, {2.0, SamplingMode::vertex_eliminate, seed}).is_linear());
}

TEST(SampleH2, SurvivorCountConcentrates) {
  const auto h = remnant(11);
  const double mean = 121.0 * 5.0 / 11.0;
  const double sigma = std::sqrt(121.0 * (5.0 / 11.0) * (6.0 / 11.0));
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto s = sample_h2_detailed(h, {5.0, SamplingMode::vertex_eliminate, seed});
    const double n = static_cast<double>(s.structure.num_points());
    EXPECT_LE(std::abs(n - mean), 5.0 * sigma);
    total += n;
  }
  EXPECT_LE(std::abs(total / 1000.0 - mean), 5.0 * sigma / std::sqrt(1000.0));
}

TEST(Dangerous, KnownTriangleInAg3) {
  const auto h = remnant(3);
  const auto sets = enumerate_dangerous_type1(h, 3);
  const auto it = std::find_if(sets.begin(), sets.end(), [](const DangerousSet& s) {
    return s.vertices == std::vector<int>{0, 4, 6};
  });
  ASSERT_NE(it, sets.end());
  std::vector<geometry::Line> witness;
  for (int l : it->witness_lines) witness.push_back(h.line(l));
  std::sort(witness.begin(), witness.end());
  EXPECT_EQ(witness, (std::vector<geometry::Line>{{0, 3, 6}, {0, 4, 8}, {2, 4, 6}}));
}

TEST(Dangerous, MatchesSubsetOracle) {
  for (int q : {3, 5}) {
    const auto h = remnant(q);
    EXPECT_EQ(vertex_sets(enumerate_dangerous_type1(h, 3)), oracle::dangerous_type1(h, 3)) << q;
    EXPECT_EQ(vertex_sets(enumerate_dangerous_type2(h, 4, 1)), oracle::dangerous_type2(h, 4, 1)) << q;
  }
  const auto h3 = remnant(3);
  EXPECT_EQ(vertex_sets(enumerate_dangerous_type1(h3, 4)), oracle::dangerous_type1(h3, 4));
  EXPECT_EQ(vertex_sets(enumerate_dangerous_type2(h3, 5, 2)), oracle::dangerous_type2(h3, 5, 2));
}

TEST(Dangerous, SampledStructuresMatchOracle) {
  const auto h = remnant(5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto h1 = sample_h1(h, {3.0, SamplingMode::line_subsample, seed});
    EXPECT_EQ(vertex_sets(enumerate_dangerous_type1(h1, 3)), oracle::dangerous_type1(h1, 3));
    EXPECT_EQ(vertex_sets(enumerate_dangerous_type2(h1, 4, 1)), oracle::dangerous_type2(h1, 4, 1));
  }
}

TEST(Dangerous, WitnessesValidateAndMeetIncidenceFloor) {
  const auto h = remnant(5);
  for (const auto& s : enumerate_dangerous_type2(h, 4, 1)) {
    EXPECT_TRUE(validate(h, s, 1));
    EXPECT_EQ(static_cast<int>(h.line(s.spine_line).size()) >= 3, true);
    EXPECT_EQ(s.incidences, oracle::incidences(h, s.vertices));
    EXPECT_GE(s.incidences, type2_incidence_floor(4, 1));
    EXPECT_EQ(s.off_points.size(), 1u);
  }
  for (const auto& s : enumerate_dangerous_type1(h, 3)) {
    EXPECT_TRUE(validate(h, s, 1));
    EXPECT_EQ(s.witness_lines.size(), 3u);
  }
}

TEST(Dangerous, EdgeCases) {
  const IncidenceStructure one_line(5, {{0, 1, 2, 3, 4}}, geometry::StructureKind::remnant_h);
  EXPECT_TRUE(enumerate_dangerous_type1(one_line, 3).empty());
  EXPECT_TRUE(enumerate_dangerous_type2(remnant(5), 7, 1).empty());
  EXPECT_THROW(enumerate_dangerous_type1(one_line, 2), Error);
  EXPECT_EQ(type2_incidence_floor(4, 1), 8);
  EXPECT_EQ(type2_incidence_floor(5, 2), 25 - 32);
}

TEST(Dangerous, CountIncidences) {
  const auto h = remnant(5);
  const std::vector<int> pts(h.line(0).begin(), h.line(0).end());
  const std::vector<int> lines{0};
  EXPECT_EQ(count_incidences(h, pts, lines), 5);
  EXPECT_EQ(count_incidences(h, std::vector<int>{}, lines), 0);
}

TEST(Properties, FullSampleIsExact) {
  const auto h1 = sample_h1(remnant(5), {5.0, SamplingMode::line_subsample, 1});
  HPropertyInputs in;
  in.q = 5;
  in.lambda = 5.0;
  in.a = 3;
  in.b = 4;
  const auto rep = verify_h_properties(h1, in);
  ASSERT_NE(rep.find_check("linearity"), nullptr);
  EXPECT_EQ(rep.find_check("linearity")->status, Status::pass);
  EXPECT_EQ(rep.find_check("degree-range")->status, Status::pass);
  EXPECT_NE(rep.status, Status::fail);
  EXPECT_THROW(verify_h_properties(remnant(5), in), Error);
}

TEST(Properties, DegreeSweepReportsFrequency) {
  const auto sweep = sweep_h1_degree_range(remnant(7), 3.0, 0, 40);
  EXPECT_EQ(sweep.seeds, 40);
  EXPECT_GE(sweep.frequency, 0.0);
  EXPECT_LE(sweep.frequency, 1.0);
  EXPECT_NEAR(sweep.chernoff_union_bound, 2.0 * 49.0 * std::exp(-3.0 / 12.0), 1e-9);
}
