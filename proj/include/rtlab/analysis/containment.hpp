#pragma once

#include "rtlab/analysis/cliques.hpp"
#include "rtlab/geometry/incidence.hpp"
#include "rtlab/graph/simple_graph.hpp"
#include "rtlab/report.hpp"

namespace rtlab::analysis {

// Enumerates every (s+r)-clique of g (built from hx by the partite coloring)
// and checks that it contains a Type 1 dangerous subset of size a or a Type 2
// dangerous subset of size b. Cliques inside a single line are reported
// separately: per-line graphs are s-partite, so they cannot exist. Throws
// Error(size_limit) beyond the clique enumeration limits.
VerificationReport check_clique_dangerous_containment(const graph::SimpleGraph& g,
                                                      const geometry::IncidenceStructure& hx, int s, int r, int a,
                                                      int b, CliqueLimits limits = {});

}  // namespace rtlab::analysis
