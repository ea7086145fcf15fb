#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rtlab/bitset.hpp"
#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::analysis {

enum class CliqueMode { exists, count, enumerate };

std::string_view to_string(CliqueMode mode);
CliqueMode clique_mode_from_string(std::string_view name);

struct CliqueLimits {
  int max_vertices = 2000;  // count / enumerate only
  int max_t = 12;
};

struct CliqueResult {
  bool exists = false;
  long long count = 0;                      // count and enumerate modes
  std::vector<std::vector<int>> cliques;    // enumerate mode, sorted
  std::vector<int> witness;                 // lexicographically smallest t-clique
};

// Exact t-clique queries. count/enumerate throw Error(size_limit) beyond the
// limits and run on a degeneracy ordering; exists returns the lexicographically
// smallest clique as witness. Throws Error(bad_param) if t < 1.
CliqueResult find_clique(const graph::SimpleGraph& g, int t, CliqueMode mode, CliqueLimits limits = {});

// Lexicographically smallest t-clique among `candidates`.
std::optional<std::vector<int>> find_clique_in(const std::vector<DynBitset>& adj, const DynBitset& candidates,
                                               int t);
bool has_clique_in(const std::vector<DynBitset>& adj, const DynBitset& candidates, int t);

// Vertices ordered by repeatedly removing a minimum-degree vertex.
std::vector<int> degeneracy_order(const graph::SimpleGraph& g);

// Size of a maximum clique, with a witness (branch and bound with greedy
// coloring bounds).
int clique_number(const graph::SimpleGraph& g, std::vector<int>* witness = nullptr);

bool is_clique(const graph::SimpleGraph& g, std::span<const int> vertices);

DynBitset bitset_of(std::size_t n, std::span<const int> members);

}  // namespace rtlab::analysis
