#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rtlab/geometry/incidence.hpp"
#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::io {

// Hypergraph text format (LF line endings):
//   rtlab-hypergraph v1
//   kind <tag>
//   points <N>
//   lines <M>
//   L <i1> <i2> ...      (M lines, lexicographic order)
void write_hypergraph(std::ostream& out, const geometry::IncidenceStructure& s);
std::string hypergraph_to_string(const geometry::IncidenceStructure& s);
// Throws Error(parse_error) on malformed input.
geometry::IncidenceStructure read_hypergraph(std::istream& in);

// Graph text format:
//   rtlab-graph v1
//   vertices <N>
//   edges <M>
//   e <u> <v>            (M lines, u < v, lexicographic order)
//   # provenance <json>  (optional)
void write_graph(std::ostream& out, const graph::SimpleGraph& g);
std::string graph_to_string(const graph::SimpleGraph& g);
graph::SimpleGraph read_graph(std::istream& in);

void save_hypergraph(const std::filesystem::path& path, const geometry::IncidenceStructure& s);
geometry::IncidenceStructure load_hypergraph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const graph::SimpleGraph& g);
graph::SimpleGraph load_graph(const std::filesystem::path& path);

// Whole-file helpers; load throws Error(missing_artifact) when absent.
void save_text(const std::filesystem::path& path, const std::string& text);
std::string load_text(const std::filesystem::path& path);

}  // namespace rtlab::io
