#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace swg {

using Vertex = std::uint32_t;

// Undirected edge; for boundary listings `first` is the endpoint inside the set.
using Edge = std::pair<Vertex, Vertex>;

struct TorusCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const TorusCoord&, const TorusCoord&) = default;
};

// The (2n+1) x (2n+1) periodic grid centred at the origin, coordinates in
// [-n, n]. Vertex index is (x+n)(2n+1) + (y+n).
class Torus {
 public:
  explicit Torus(int n);

  int n() const noexcept { return n_; }
  int side() const noexcept { return 2 * n_ + 1; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(side()) * static_cast<std::size_t>(side());
  }

  bool contains(TorusCoord c) const noexcept {
    return c.x >= -n_ && c.x <= n_ && c.y >= -n_ && c.y <= n_;
  }
  Vertex index(TorusCoord c) const;
  TorusCoord coord(Vertex v) const;

  // Wraps an arbitrary integer point back into [-n, n]^2.
  TorusCoord wrap(int x, int y) const noexcept;

  std::array<Vertex, 4> neighbours(Vertex v) const noexcept;
  int distance(Vertex u, Vertex v) const noexcept;

 private:
  int n_;
};

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe);
  static VertexSet from_members(std::size_t universe,
                                const std::vector<Vertex>& members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Vertex v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) noexcept {
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(words_[v >> 6] & bit)) {
      words_[v >> 6] |= bit;
      ++count_;
    }
  }
  void erase(Vertex v) noexcept {
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (words_[v >> 6] & bit) {
      words_[v >> 6] &= ~bit;
      --count_;
    }
  }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const noexcept;
  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

// Axis-aligned box [x0, x0+width) x [y0, y0+height) in torus coordinates.
struct Box {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;

  std::size_t area() const noexcept {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
};

// Partition of the torus into boxes whose sides lie in [ell, 2 ell].
class LPartition {
 public:
  LPartition(int n, int ell, std::vector<Box> boxes);

  int n() const noexcept { return n_; }
  int ell() const noexcept { return ell_; }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  std::size_t box_count() const noexcept { return boxes_.size(); }
  std::uint32_t box_of(Vertex v) const noexcept { return box_of_[v]; }
  VertexSet box_vertices(std::size_t box) const;

 private:
  int n_;
  int ell_;
  std::vector<Box> boxes_;
  std::vector<std::uint32_t> box_of_;
};

int torus_distance(TorusCoord u, TorusCoord v, int n);

// Number of vertices at torus distance ell from a fixed vertex.
int ring_size(int ell, int n);

std::vector<TorusCoord> ring(TorusCoord v, int ell, int n);

std::vector<Edge> torus_edge_boundary(const VertexSet& s, int n);
std::size_t torus_edge_boundary_size(const VertexSet& s, int n);

LPartition make_l_partition(int n, int ell);

bool is_box_like(const VertexSet& s, const LPartition& p);

// Union of the boxes fully contained in s.
VertexSet box_core(const VertexSet& s, const LPartition& p);

// Either the box-core keeps a (1 - eta) fraction of s, or the torus boundary
// of s has at least eta |s| / (4 ell^2) edges.
bool box_core_dichotomy_check(const VertexSet& s, const LPartition& p,
                              double eta);

}  // namespace swg
