#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "rtlab/error.hpp"
#include "rtlab/geometry/affine_plane.hpp"
#include "rtlab/geometry/quadrangle.hpp"
#include "rtlab/graph/compose.hpp"
#include "rtlab/graph/partite.hpp"
#include "rtlab/graph/zarankiewicz.hpp"
#include "rtlab/hypergraph/sampling.hpp"
#include "rtlab/io/formats.hpp"

using namespace rtlab;
using namespace rtlab::graph;
using geometry::IncidenceStructure;

namespace {

IncidenceStructure remnant(int q) {
  return geometry::remove_parallel_class(geometry::build_affine_plane(q), geometry::vertical_class_index(q));
}

// Edges implied by an assignment, rebuilt pair by pair.
std::set<Edge> expected_edges(const IncidenceStructure& hx, const PartitionAssignment& a) {
  std::set<Edge> out;
  for (std::size_t l = 0; l < hx.num_lines(); ++l) {
    const auto& line = hx.line(l);
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        const int ci = a.classes[l][i], cj = a.classes[l][j];
        if (ci != kIsolated && cj != kIsolated && ci != cj) out.emplace(line[i], line[j]);
      }
  }
  return out;
}

}  // namespace

TEST(SimpleGraph, NormalizesAndRejectsBadEdges) {
  const SimpleGraph g(4, {{2, 1}, {0, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  EXPECT_THROW(SimpleGraph(3, {{1, 1}}), Error);
  EXPECT_THROW(SimpleGraph(3, {{0, 3}}), Error);
  EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_EQ(petersen_graph().num_edges(), 15u);
  const std::vector<int> parts{2, 3, 4};
  EXPECT_EQ(complete_multipartite(parts).num_edges(), 26u);
}

TEST(Formats, GraphRoundTripKeepsProvenance) {
  const SimpleGraph g(5, cycle_graph(5).edges());
  SimpleGraph h = g;
  h.set_provenance({{"kind", "test"}});
  for (const auto& x : {g, h}) {
    const auto text = io::graph_to_string(x);
    std::istringstream in(text);
    const auto back = io::read_graph(in);
    EXPECT_EQ(back, x);
    EXPECT_EQ(io::graph_to_string(back), text);
  }
  EXPECT_EQ(io::graph_to_string(g), "rtlab-graph v1\nvertices 5\nedges 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n");
  std::istringstream bad("rtlab-graph v1\nvertices 2\nedges 1\ne 1 0\n");
  EXPECT_THROW(io::read_graph(bad), Error);
}

TEST(Coloring, ClassFromDraw) {
  EXPECT_EQ(class_from_draw(0.0, 3, 0.6), 1);
  EXPECT_EQ(class_from_draw(0.19, 3, 0.6), 1);
  EXPECT_EQ(class_from_draw(0.21, 3, 0.6), 2);
  EXPECT_EQ(class_from_draw(0.59, 3, 0.6), 3);
  EXPECT_EQ(class_from_draw(0.61, 3, 0.6), kIsolated);
  EXPECT_EQ(class_from_draw(0.999999, 2, 1.0), 2);
}

TEST(Coloring, FullProbabilityHasNoIsolation) {
  const auto h = remnant(5);
  const auto a = color_lines(h, 3, 1.0, 7);
  for (const auto& line : a.classes)
    for (int c : line) {
      EXPECT_GE(c, 1);
      EXPECT_LE(c, 3);
    }
  EXPECT_EQ(a, color_lines(h, 3, 1.0, 7));
  EXPECT_THROW(color_lines(h, 1, 0.5, 7), Error);
  EXPECT_THROW(color_lines(h, 2, 0.0, 7), Error);
  EXPECT_THROW(color_lines(h, 2, 1.5, 7), Error);
}

TEST(Coloring, ClassCountsFollowBinomial) {
  const IncidenceStructure line(4, {{0, 1, 2, 3}}, geometry::StructureKind::sampled_h1);
  std::vector<int> hist(5, 0);
  const int draws = 4000;
  for (int seed = 0; seed < draws; ++seed) {
    const auto a = color_lines(line, 2, 1.0, static_cast<std::uint64_t>(seed));
    hist[std::count(a.classes[0].begin(), a.classes[0].end(), 1)]++;
  }
  const double pmf[5] = {1 / 16.0, 4 / 16.0, 6 / 16.0, 4 / 16.0, 1 / 16.0};
  for (int k = 0; k <= 4; ++k) {
    const double mean = draws * pmf[k];
    const double sigma = std::sqrt(draws * pmf[k] * (1 - pmf[k]));
    EXPECT_LE(std::abs(hist[k] - mean), 5 * sigma) << k;
  }
}

TEST(PartiteGraph, SingleLineExample) {
  const IncidenceStructure line(3, {{0, 1, 2}}, geometry::StructureKind::sampled_h1);
  PartitionAssignment a;
  a.s = 2;
  a.structure_fingerprint = structure_fingerprint(line);
  a.classes = {{1, 2, 2}};
  const auto g = build_partite_graph(line, a);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(verify_partite_structure(line, a, g).status, Status::pass);
  const SimpleGraph wrong(3, {{0, 1}});
  EXPECT_EQ(verify_partite_structure(line, a, wrong).status, Status::fail);
}

TEST(PartiteGraph, MatchesPairwiseRecount) {
  for (int q : {3, 5, 7}) {
    const auto h = remnant(q);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto h1 = hypergraph::sample_h1(h, {q * 0.6, hypergraph::SamplingMode::line_subsample, seed});
      const auto a = color_lines(h1, 3, 0.7, seed + 100);
      const auto g = build_partite_graph(h1, a);
      const auto exp = expected_edges(h1, a);
      EXPECT_EQ(std::vector<Edge>(exp.begin(), exp.end()), g.edges());
      long long per_line = 0;
      for (auto c : per_line_edge_counts(a)) per_line += c;
      EXPECT_EQ(per_line, static_cast<long long>(g.num_edges()));
      EXPECT_EQ(verify_partite_structure(h1, a, g).status, Status::pass);
    }
  }
}

TEST(PartiteGraph, RejectsForeignAssignment) {
  const auto a = color_lines(remnant(3), 2, 1.0, 1);
  EXPECT_THROW(build_partite_graph(remnant(5), a), Error);
}

TEST(QuadrangleGraph, NoLargeCliques) {
  const auto w2 = geometry::build_w_quadrangle(2);
  const auto w3 = geometry::build_w_quadrangle(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g2 = build_gq_graph(w2, 2, seed);
    EXPECT_EQ(g2.num_vertices(), 15);
    EXPECT_EQ(oracle::clique_count(g2, 3), 0);
    const auto g3 = build_gq_graph(w3, 3, seed);
    EXPECT_EQ(oracle::clique_count(g3, 4), 0);
    const auto a = color_lines_uniform(w2, 2, seed);
    EXPECT_EQ(g2, build_partite_graph(w2, a));
    const auto exp = expected_edges(w2, a);
    EXPECT_EQ(exp.size(), g2.num_edges());
  }
  EXPECT_THROW(build_gq_graph(remnant(3), 2, 1), Error);
}

TEST(Join, CycleExample) {
  const auto g = join_construction(cycle_graph(5), 2);
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 35u);
  EXPECT_EQ(oracle::clique_count(g, 4), 25);
  EXPECT_EQ(oracle::clique_count(g, 5), 0);
  EXPECT_EQ(oracle::independence_number(g), 2);
  EXPECT_EQ(join_construction(empty_graph(1), 3).edges(), complete_graph(3).edges());
  EXPECT_THROW(join_construction(cycle_graph(5), 1), Error);
}

TEST(Join, IndependentSetsStayInOneCopy) {
  const auto g = join_construction(cycle_graph(5), 3);
  const auto m = oracle::adjacency(g);
  for (int k = 2; k <= 3; ++k)
    oracle::subsets(15, k, [&](const std::vector<int>& s) {
      bool independent = true;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) independent &= !m[s[i]][s[j]];
      if (independent)
        for (int v : s) EXPECT_EQ(v / 5, s[0] / 5);
    });
}

TEST(NearEqualParts, Splits) {
  EXPECT_EQ(near_equal_parts(10, 3), (std::vector<int>{4, 3, 3}));
  EXPECT_EQ(near_equal_parts(6, 2), (std::vector<int>{3, 3}));
}

TEST(TwoBlock, Examples) {
  const auto c5 = cycle_graph(5);
  BipartiteGraph empty{5, 5, {}};
  EXPECT_EQ(two_block_construction(c5, empty).num_edges(), 10u);
  BipartiteGraph matching{5, 5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}};
  EXPECT_EQ(two_block_construction(c5, matching).num_edges(), 15u);
  const auto b = restrict_bipartite(projective_plane_incidence(2), 5, 5);
  EXPECT_FALSE(find_kss(b, 2).has_value());
  const auto g = two_block_construction(c5, b);
  EXPECT_EQ(oracle::clique_count(g, 4), 0);
  BipartiteGraph wrong{4, 5, {}};
  EXPECT_THROW(two_block_construction(c5, wrong), Error);
}

TEST(Zarankiewicz, FanoIncidence) {
  const auto z = build_zarankiewicz_bipartite(7, 2);
  EXPECT_EQ(z.method, "projective-plane");
  EXPECT_EQ(z.graph.num_edges(), 21u);
  // C4-free: no two left vertices share two right neighbours.
  const auto g = to_simple_graph(z.graph);
  const auto m = oracle::adjacency(g);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) {
      int common = 0;
      for (int w = 7; w < 14; ++w) common += m[u][w] && m[v][w];
      EXPECT_LE(common, 1);
    }
  EXPECT_EQ(bipartite_from_graph(g), z.graph);
}

TEST(Zarankiewicz, GreedyAndTrivialCases) {
  const auto one = build_zarankiewicz_bipartite(1, 2);
  EXPECT_LE(one.graph.num_edges(), 1u);
  const auto z = build_zarankiewicz_bipartite(10, 3);
  EXPECT_EQ(z.method, "greedy");
  EXPECT_TRUE(z.verified);
  // Exhaustive 3+3 check.
  const auto m = oracle::adjacency(to_simple_graph(z.graph));
  int found = 0;
  oracle::subsets(10, 3, [&](const std::vector<int>& left) {
    oracle::subsets(10, 3, [&](const std::vector<int>& right) {
      bool all = true;
      for (int l : left)
        for (int r : right) all &= m[l][10 + r] != 0;
      found += all;
    });
  });
  EXPECT_EQ(found, 0);
  // Greedy insertion is maximal: every missing edge would create a K_{3,3}.
  for (int l = 0; l < 10; ++l)
    for (int r = 0; r < 10; ++r) {
      if (m[l][10 + r]) continue;
      auto plus = z.graph;
      plus.edges.emplace_back(l, r);
      plus.normalize();
      EXPECT_TRUE(find_kss(plus, 3).has_value()) << l << " " << r;
    }
  EXPECT_THROW(build_zarankiewicz_bipartite(0, 2), Error);
  BipartiteGraph k33{3, 3, {}};
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) k33.edges.emplace_back(l, r);
  EXPECT_TRUE(find_kss(k33, 3).has_value());
}
