#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "numfmt.hpp"
#include "swg/errors.hpp"
#include "swg/graph.hpp"

// Text format:
//   swg <n> <r> <seed> <Z> <edge_count>
//   <u> <v>            one line per long-range edge, canonical indices
// Torus edges are implicit.

namespace swg {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <class T>
T field(std::string_view text, const char* name, std::size_t line) {
  auto v = detail::parse_number<T>(text);
  if (!v) throw ParseError(std::string("malformed ") + name, line);
  return *v;
}

}  // namespace

void write_graph(const SmallWorldGraph& g, std::ostream& out) {
  out << "swg " << g.n() << ' ' << detail::format_real(g.r()) << ' ' << g.seed()
      << ' ' << detail::format_real(g.Z()) << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.long_range_edges()) {
    out << e.first << ' ' << e.second << '\n';
  }
}

SmallWorldGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing header", line_no);
  auto head = split_fields(line);
  if (head.size() != 6 || head[0] != "swg") {
    throw ParseError("header must be 'swg n r seed Z edge_count'", line_no);
  }
  ModelParams params;
  params.n = field<int>(head[1], "n", line_no);
  params.r = field<double>(head[2], "r", line_no);
  params.seed = field<std::uint64_t>(head[3], "seed", line_no);
  const double z = field<double>(head[4], "Z", line_no);
  const auto edge_count = field<std::uint64_t>(head[5], "edge_count", line_no);
  try {
    validate(params);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no);
  }
  const double expected_z = compute_Z(params.n, params.r).value;
  if (!(std::abs(z - expected_z) <= 1e-12 * expected_z)) {
    throw ParseError("Z inconsistent with n and r", line_no);
  }

  const Torus torus(params.n);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parts = split_fields(line);
    if (parts.size() != 2) throw ParseError("expected 'u v'", line_no);
    auto u = field<Vertex>(parts[0], "vertex", line_no);
    auto v = field<Vertex>(parts[1], "vertex", line_no);
    if (u >= torus.size() || v >= torus.size()) {
      throw ParseError("vertex index out of range", line_no);
    }
    if (u > v) std::swap(u, v);
    if (torus.distance(u, v) < 2) {
      throw ParseError("long-range edge at torus distance < 2", line_no);
    }
    if (!seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) {
      throw ParseError("duplicate edge", line_no);
    }
    edges.emplace_back(u, v);
  }
  if (edge_count != 2 * torus.size() + edges.size()) {
    throw ParseError("edge_count does not match edge lines", 1);
  }
  return SmallWorldGraph(params, z, std::move(edges));
}

void save_graph(const SmallWorldGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_graph(g, out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

SmallWorldGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace swg
