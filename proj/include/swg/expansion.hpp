#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swg/graph.hpp"
#include "swg/torus.hpp"

namespace swg {

struct CutReport {
  std::size_t set_size = 0;
  std::size_t edge_boundary = 0;
  std::size_t vertex_boundary = 0;
  std::uint64_t degree_sum = 0;
  double conductance = 0.0;
  double alpha = 0.0;  // |S| / N
};

// Edges of g with exactly one endpoint in s, reported as (inside, outside).
std::vector<Edge> edge_boundary(const SmallWorldGraph& g, const VertexSet& s);
std::size_t edge_boundary_size(const SmallWorldGraph& g, const VertexSet& s);

// Vertices outside s adjacent to some vertex of s.
VertexSet vertex_boundary(const SmallWorldGraph& g, const VertexSet& s);

std::uint64_t degree_sum(const SmallWorldGraph& g, const VertexSet& s);

// |dS| / (vol(S) vol(V \ S) / 2|E|). Throws DomainError for empty or full s.
double conductance(const SmallWorldGraph& g, const VertexSet& s);

// All of the above for one set; s must be a proper nonempty subset.
CutReport cut_report(const SmallWorldGraph& g, const VertexSet& s);

struct ExpansionWitness {
  std::size_t subset_size = 0;     // m = |S'|
  std::uint64_t boundary_sum = 0;  // minimal edges from an m-subset to V \ S
};

struct ExpansionVerdict {
  double epsilon = 0.0;
  double c = 0.0;
  bool holds = true;
  std::optional<ExpansionWitness> witness;
};

// Exact (epsilon, c)-expansion test: every S' in S with |S'| >= (1-eps)|S|
// sends at least c|S'| edges out of S. Since the edge count is additive over
// vertices, the worst S' of each size takes the smallest per-vertex counts.
ExpansionVerdict is_expanding(const SmallWorldGraph& g, const VertexSet& s,
                              double epsilon, double c);

struct MinConductance {
  double value = 0.0;
  VertexSet set;
};

inline constexpr std::size_t kAllSubsetsCap = 25;
inline constexpr std::size_t kConnectedSubsetsCap = 400;

// Exact minimum of conductance over proper nonempty subsets, optionally
// restricted to sets inducing a connected subgraph. Connected mode enumerates
// each connected set once by anchored growth and throws CapacityError once
// more than `max_sets` sets have been visited.
MinConductance min_conductance_bruteforce(const SmallWorldGraph& g,
                                          bool connected_only,
                                          std::uint64_t max_sets = 200'000'000);

// Prefix cuts along the order of the second eigenvector of the lazy kernel;
// N - 1 reports, prefix k holding the first k + 1 vertices.
std::vector<CutReport> sweep_cut(const SmallWorldGraph& g);
std::vector<CutReport> sweep_cut(const SmallWorldGraph& g,
                                 std::span<const double> eigenvector);

// Vertices within torus distance L of the origin; 1 <= L <= n.
VertexSet ball_set(int n, int L);

// Number of q-box subsets of the partition that induce a connected subgraph
// of the box graph (boxes adjacent when some edge of g joins them).
std::uint64_t enumerate_connected_boxsets(const SmallWorldGraph& g,
                                          const LPartition& p, int q);

inline constexpr std::size_t kExactDiameterCap = 100'000;

std::vector<std::uint32_t> bfs_distances(const SmallWorldGraph& g,
                                         Vertex source);

struct DiametralPair {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t distance = 0;
  bool exact = false;
};

// exact: all-sources BFS, 64 sources per pass. Otherwise a double-sweep lower
// bound.
DiametralPair diametral_pair(const SmallWorldGraph& g, bool exact);
std::size_t diameter(const SmallWorldGraph& g, bool exact);

}  // namespace swg
