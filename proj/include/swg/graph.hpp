#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "swg/torus.hpp"

namespace swg {

struct ModelParams {
  int n = 1;
  double r = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

void validate(const ModelParams& params);

struct NormaliserZ {
  double value = 0.0;
  int n = 1;
  double r = 0.0;
};

// Sum of dist(origin, w)^-r over all w at torus distance >= 2, evaluated ring
// by ring in O(n).
NormaliserZ compute_Z(int n, double r);

// Probability ell^-r / Z that a given pair at distance ell gets a long-range
// edge.
double edge_probability(int n, double r, int ell);
double edge_probability(const NormaliserZ& z, int ell);

// Number of unordered vertex pairs at torus distance ell.
std::uint64_t pairs_at_distance(int ell, int n);

// Immutable torus-plus-long-range graph in compressed sparse row form.
class SmallWorldGraph {
 public:
  // Validates the long-range pairs (in range, distance >= 2, no duplicates);
  // throws DomainError otherwise.
  SmallWorldGraph(ModelParams params, double z, std::vector<Edge> long_range);

  const ModelParams& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n; }
  double r() const noexcept { return params_.r; }
  std::uint64_t seed() const noexcept { return params_.seed; }
  double Z() const noexcept { return z_; }
  const Torus& torus() const noexcept { return torus_; }

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept {
    return 2 * vertex_count() + long_range_.size();
  }
  // Sorted (u < v) pairs in lexicographic order.
  const std::vector<Edge>& long_range_edges() const noexcept {
    return long_range_;
  }

  std::uint32_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  const std::vector<std::uint32_t>& offsets() const noexcept {
    return offsets_;
  }
  const std::vector<Vertex>& adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const SmallWorldGraph& a,
                         const SmallWorldGraph& b) noexcept {
    return a.params_ == b.params_ && a.z_ == b.z_ &&
           a.long_range_ == b.long_range_;
  }

 private:
  ModelParams params_;
  double z_;
  Torus torus_;
  std::vector<Edge> long_range_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// Per distance class: a Binomial number of long-range edges, each placed on a
// uniform pair at that distance. Distance classes use independent RNG
// substreams derived from the seed.
SmallWorldGraph sample_graph(const ModelParams& params);

// One Bernoulli trial per unordered pair; O(N^2). Statistical oracle only.
SmallWorldGraph sample_graph_naive(const ModelParams& params);

// The bare torus with no long-range edges.
SmallWorldGraph torus_graph(int n);

void write_graph(const SmallWorldGraph& g, std::ostream& out);
SmallWorldGraph read_graph(std::istream& in);
void save_graph(const SmallWorldGraph& g, const std::filesystem::path& path);
SmallWorldGraph load_graph(const std::filesystem::path& path);

}  // namespace swg
