#include "rtlab/io/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rtlab/error.hpp"

namespace rtlab::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t line_no) {
  throw Error(ErrorCode::parse_error, what + " (line " + std::to_string(line_no) + ")");
}

bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  return true;
}

long long expect_header_value(std::istream& in, std::size_t& line_no, const std::string& key) {
  std::string line;
  if (!next_line(in, line, line_no)) parse_fail("missing '" + key + "' header", line_no + 1);
  std::istringstream ss(line);
  std::string k;
  long long value = -1;
  if (!(ss >> k >> value) || k != key || value < 0) parse_fail("expected '" + key + " <count>'", line_no);
  std::string rest;
  if (ss >> rest) parse_fail("trailing data after '" + key + "'", line_no);
  return value;
}

}  // namespace

void write_hypergraph(std::ostream& out, const geometry::IncidenceStructure& s) {
  out << "rtlab-hypergraph v1\n";
  out << "kind " << geometry::to_string(s.kind()) << '\n';
  out << "points " << s.num_points() << '\n';
  out << "lines " << s.num_lines() << '\n';
  for (const auto& l : s.lines()) {
    out << 'L';
    for (int p : l) out << ' ' << p;
    out << '\n';
  }
}

std::string hypergraph_to_string(const geometry::IncidenceStructure& s) {
  std::ostringstream ss;
  write_hypergraph(ss, s);
  return ss.str();
}

geometry::IncidenceStructure read_hypergraph(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  if (!next_line(in, line, line_no) || line != "rtlab-hypergraph v1") parse_fail("bad hypergraph magic", 1);
  if (!next_line(in, line, line_no) || line.rfind("kind ", 0) != 0) parse_fail("expected 'kind <tag>'", line_no);
  const auto kind = geometry::structure_kind_from_string(line.substr(5));
  const auto n = expect_header_value(in, line_no, "points");
  const auto m = expect_header_value(in, line_no, "lines");
  std::vector<geometry::Line> lines;
  lines.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, line_no)) parse_fail("truncated line list", line_no + 1);
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag != "L") parse_fail("expected 'L ...'", line_no);
    geometry::Line l;
    long long p = 0;
    while (ss >> p) l.push_back(static_cast<int>(p));
    if (!ss.eof()) parse_fail("non-integer point index", line_no);
    lines.push_back(std::move(l));
  }
  if (next_line(in, line, line_no) && !line.empty()) parse_fail("unexpected trailing content", line_no);
  auto sorted = lines;
  try {
    geometry::IncidenceStructure s(static_cast<int>(n), std::move(lines), kind);
    if (s.lines() != sorted) parse_fail("lines are not in lexicographic order", 5);
    return s;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    throw Error(ErrorCode::parse_error, e.what());
  }
}

void write_graph(std::ostream& out, const graph::SimpleGraph& g) {
  out << "rtlab-graph v1\n";
  out << "vertices " << g.num_vertices() << '\n';
  out << "edges " << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  if (!g.provenance().is_null()) out << "# provenance " << g.provenance().dump() << '\n';
}

std::string graph_to_string(const graph::SimpleGraph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

graph::SimpleGraph read_graph(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  if (!next_line(in, line, line_no) || line != "rtlab-graph v1") parse_fail("bad graph magic", 1);
  const auto n = expect_header_value(in, line_no, "vertices");
  const auto m = expect_header_value(in, line_no, "edges");
  std::vector<graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, line_no)) parse_fail("truncated edge list", line_no + 1);
    std::istringstream ss(line);
    std::string tag;
    long long u = -1;
    long long v = -1;
    if (!(ss >> tag >> u >> v) || tag != "e") parse_fail("expected 'e <u> <v>'", line_no);
    if (u >= v) parse_fail("edge endpoints must satisfy u < v", line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  nlohmann::json provenance = nullptr;
  while (next_line(in, line, line_no)) {
    if (line.empty()) continue;
    const std::string prefix = "# provenance ";
    if (line.rfind(prefix, 0) != 0 || !provenance.is_null()) parse_fail("unexpected trailing content", line_no);
    try {
      provenance = nlohmann::json::parse(line.substr(prefix.size()));
    } catch (const nlohmann::json::exception&) {
      parse_fail("malformed provenance json", line_no);
    }
  }
  if (!std::is_sorted(edges.begin(), edges.end())) parse_fail("edges are not in lexicographic order", 4);
  try {
    return graph::SimpleGraph(static_cast<int>(n), std::move(edges), std::move(provenance));
  } catch (const Error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::config_error, "cannot write " + path.string());
  out << text;
}

std::string load_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::missing_artifact, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_hypergraph(const std::filesystem::path& path, const geometry::IncidenceStructure& s) {
  save_text(path, hypergraph_to_string(s));
}

geometry::IncidenceStructure load_hypergraph(const std::filesystem::path& path) {
  std::istringstream ss(load_text(path));
  return read_hypergraph(ss);
}

void save_graph(const std::filesystem::path& path, const graph::SimpleGraph& g) {
  save_text(path, graph_to_string(g));
}

graph::SimpleGraph load_graph(const std::filesystem::path& path) {
  std::istringstream ss(load_text(path));
  return read_graph(ss);
}

}  // namespace rtlab::io
