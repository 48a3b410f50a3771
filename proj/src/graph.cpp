#include "swg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "swg/errors.hpp"
#include "swg/rng.hpp"

namespace swg {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Torus offsets (dx, dy) at distance ell, components in [-n, n].
std::vector<TorusCoord> ring_offsets(int ell, int n) {
  return ring({0, 0}, ell, n);
}

}  // namespace

void validate(const ModelParams& params) {
  if (params.n < 1) throw DomainError("model parameter n must be >= 1");
  if (!(params.r >= 0.0) || !std::isfinite(params.r)) {
    throw DomainError("model parameter r must be a finite value >= 0");
  }
}

NormaliserZ compute_Z(int n, double r) {
  validate({n, r, 0});
  // Kahan-compensated: for large r the terms span many decades.
  double sum = 0.0;
  double carry = 0.0;
  for (int ell = 2; ell <= 2 * n; ++ell) {
    double term = ring_size(ell, n) * std::pow(static_cast<double>(ell), -r);
    double y = term - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return {sum, n, r};
}

double edge_probability(const NormaliserZ& z, int ell) {
  if (ell < 2 || ell > 2 * z.n) {
    throw DomainError("long-range distance must lie in [2, 2n]");
  }
  return std::pow(static_cast<double>(ell), -z.r) / z.value;
}

double edge_probability(int n, double r, int ell) {
  return edge_probability(compute_Z(n, r), ell);
}

std::uint64_t pairs_at_distance(int ell, int n) {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(n) + 1;
  return side * side * static_cast<std::uint64_t>(ring_size(ell, n)) / 2;
}

SmallWorldGraph::SmallWorldGraph(ModelParams params, double z,
                                 std::vector<Edge> long_range)
    : params_(params), z_(z), torus_(params.n), long_range_(std::move(long_range)) {
  validate(params_);
  const std::size_t count = torus_.size();
  for (Edge& e : long_range_) {
    if (e.first >= count || e.second >= count) {
      throw DomainError("long-range endpoint outside vertex range");
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    if (torus_.distance(e.first, e.second) < 2) {
      throw DomainError("long-range pair " + std::to_string(e.first) + " " +
                        std::to_string(e.second) + " at torus distance < 2");
    }
  }
  std::sort(long_range_.begin(), long_range_.end());
  auto dup = std::adjacent_find(long_range_.begin(), long_range_.end());
  if (dup != long_range_.end()) {
    throw DomainError("duplicate long-range pair " + std::to_string(dup->first) +
                      " " + std::to_string(dup->second));
  }

  std::vector<std::uint32_t> degree(count, 4);
  for (const Edge& e : long_range_) {
    ++degree[e.first];
    ++degree[e.second];
  }
  offsets_.assign(count + 1, 0);
  for (std::size_t v = 0; v < count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t v = 0; v < count; ++v) {
    for (Vertex w : torus_.neighbours(static_cast<Vertex>(v))) {
      adjacency_[fill[v]++] = w;
    }
  }
  for (const Edge& e : long_range_) {
    adjacency_[fill[e.first]++] = e.second;
    adjacency_[fill[e.second]++] = e.first;
  }
  for (std::size_t v = 0; v < count; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

SmallWorldGraph sample_graph(const ModelParams& params) {
  validate(params);
  const int n = params.n;
  const NormaliserZ z = compute_Z(n, params.r);
  const Torus torus(n);
  const auto count = static_cast<Vertex>(torus.size());

  std::vector<Edge> edges;
  edges.reserve(count / 2 + 64);
  std::unordered_set<std::uint64_t> seen;
  for (int ell = 2; ell <= 2 * n; ++ell) {
    Rng rng(distance_stream_seed(params.seed, static_cast<std::uint64_t>(ell)));
    const double p = edge_probability(z, ell);
    std::binomial_distribution<std::uint64_t> hits(pairs_at_distance(ell, n), p);
    const std::uint64_t k = hits(rng);
    if (k == 0) continue;

    // Uniform vertex, then uniform ring offset: uniform over ordered pairs at
    // distance ell, hence over unordered ones. Duplicates are redrawn.
    const std::vector<TorusCoord> offsets = ring_offsets(ell, n);
    std::uniform_int_distribution<Vertex> pick_vertex(0, count - 1);
    std::uniform_int_distribution<std::size_t> pick_offset(0, offsets.size() - 1);
    seen.clear();
    while (seen.size() < k) {
      Vertex u = pick_vertex(rng);
      TorusCoord c = torus.coord(u);
      TorusCoord off = offsets[pick_offset(rng)];
      Vertex w = torus.index(torus.wrap(c.x + off.x, c.y + off.y));
      if (seen.insert(pair_key(u, w)).second) {
        edges.emplace_back(std::min(u, w), std::max(u, w));
      }
    }
  }
  return SmallWorldGraph(params, z.value, std::move(edges));
}

SmallWorldGraph sample_graph_naive(const ModelParams& params) {
  validate(params);
  const NormaliserZ z = compute_Z(params.n, params.r);
  const Torus torus(params.n);
  const auto count = static_cast<Vertex>(torus.size());

  std::vector<double> prob(2 * static_cast<std::size_t>(params.n) + 1, 0.0);
  for (int ell = 2; ell <= 2 * params.n; ++ell) prob[ell] = edge_probability(z, ell);

  Rng rng(hash_words({params.seed, 0x6E61697665ULL}));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < count; ++u) {
    for (Vertex w = u + 1; w < count; ++w) {
      int d = torus.distance(u, w);
      if (d >= 2 && unit(rng) < prob[d]) edges.emplace_back(u, w);
    }
  }
  return SmallWorldGraph(params, z.value, std::move(edges));
}

SmallWorldGraph torus_graph(int n) {
  ModelParams params{n, 0.0, 0};
  return SmallWorldGraph(params, compute_Z(n, 0.0).value, {});
}

}  // namespace swg
