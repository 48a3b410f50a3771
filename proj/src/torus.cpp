#include "swg/torus.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "swg/errors.hpp"

namespace swg {

namespace {

void require_n(int n) {
  if (n < 1) throw DomainError("torus half-side n must be >= 1");
}

void require_coord(TorusCoord c, int n) {
  if (c.x < -n || c.x > n || c.y < -n || c.y > n) {
    throw DomainError("coordinate (" + std::to_string(c.x) + ", " +
                      std::to_string(c.y) + ") outside torus n=" +
                      std::to_string(n));
  }
}

int axis_distance(int a, int b, int side) {
  int d = std::abs(a - b);
  return std::min(d, side - d);
}

// Splits a side of length `side` into runs of `ell`, the last run absorbing
// the remainder.
std::vector<int> split_side(int side, int ell) {
  int runs = side / ell;
  std::vector<int> lengths(static_cast<std::size_t>(runs), ell);
  lengths.back() += side % ell;
  return lengths;
}

}  // namespace

Torus::Torus(int n) : n_(n) { require_n(n); }

Vertex Torus::index(TorusCoord c) const {
  require_coord(c, n_);
  return static_cast<Vertex>((c.x + n_) * side() + (c.y + n_));
}

TorusCoord Torus::coord(Vertex v) const {
  if (v >= size()) throw DomainError("vertex index out of range");
  int s = side();
  return {static_cast<int>(v) / s - n_, static_cast<int>(v) % s - n_};
}

TorusCoord Torus::wrap(int x, int y) const noexcept {
  int s = side();
  auto fold = [&](int a) {
    int m = ((a + n_) % s + s) % s;
    return m - n_;
  };
  return {fold(x), fold(y)};
}

std::array<Vertex, 4> Torus::neighbours(Vertex v) const noexcept {
  const int s = side();
  const int i = static_cast<int>(v) / s;
  const int j = static_cast<int>(v) % s;
  const int ip = i + 1 == s ? 0 : i + 1;
  const int im = i == 0 ? s - 1 : i - 1;
  const int jp = j + 1 == s ? 0 : j + 1;
  const int jm = j == 0 ? s - 1 : j - 1;
  return {static_cast<Vertex>(ip * s + j), static_cast<Vertex>(im * s + j),
          static_cast<Vertex>(i * s + jp), static_cast<Vertex>(i * s + jm)};
}

int Torus::distance(Vertex u, Vertex v) const noexcept {
  const int s = side();
  return axis_distance(static_cast<int>(u) / s, static_cast<int>(v) / s, s) +
         axis_distance(static_cast<int>(u) % s, static_cast<int>(v) % s, s);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe,
                                  const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) throw DomainError("set member outside vertex range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) c.words_[w] = ~words_[w];
  if (universe_ % 64 != 0) {
    c.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  c.count_ = universe_ - count_;
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (other.universe_ != universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

LPartition::LPartition(int n, int ell, std::vector<Box> boxes)
    : n_(n), ell_(ell), boxes_(std::move(boxes)) {
  Torus t(n);
  if (ell < 1) throw DomainError("l-partition needs ell >= 1");
  box_of_.assign(t.size(), UINT32_MAX);
  for (std::size_t b = 0; b < boxes_.size(); ++b) {
    const Box& box = boxes_[b];
    if (box.width < ell || box.width > 2 * ell || box.height < ell ||
        box.height > 2 * ell) {
      throw DomainError("box sides must lie in [ell, 2 ell]");
    }
    for (int x = box.x0; x < box.x0 + box.width; ++x) {
      for (int y = box.y0; y < box.y0 + box.height; ++y) {
        Vertex v = t.index({x, y});
        if (box_of_[v] != UINT32_MAX) {
          throw DomainError("boxes of an l-partition overlap");
        }
        box_of_[v] = static_cast<std::uint32_t>(b);
      }
    }
  }
  if (std::find(box_of_.begin(), box_of_.end(), UINT32_MAX) != box_of_.end()) {
    throw DomainError("boxes of an l-partition do not cover the torus");
  }
}

VertexSet LPartition::box_vertices(std::size_t box) const {
  Torus t(n_);
  VertexSet s(t.size());
  const Box& b = boxes_.at(box);
  for (int x = b.x0; x < b.x0 + b.width; ++x) {
    for (int y = b.y0; y < b.y0 + b.height; ++y) s.insert(t.index({x, y}));
  }
  return s;
}

int torus_distance(TorusCoord u, TorusCoord v, int n) {
  require_n(n);
  require_coord(u, n);
  require_coord(v, n);
  int side = 2 * n + 1;
  return axis_distance(u.x, v.x, side) + axis_distance(u.y, v.y, side);
}

int ring_size(int ell, int n) {
  require_n(n);
  if (ell < 1 || ell > 2 * n) {
    throw DomainError("ring distance must lie in [1, 2n]");
  }
  return 4 * std::min(ell, 2 * n + 1 - ell);
}

std::vector<TorusCoord> ring(TorusCoord v, int ell, int n) {
  std::vector<TorusCoord> out;
  out.reserve(static_cast<std::size_t>(ring_size(ell, n)));
  require_coord(v, n);
  Torus t(n);
  // Offsets with components in [-n, n] realise every torus distance exactly
  // once, so |dx| + |dy| = ell enumerates the ring without duplicates.
  for (int dx = std::max(-n, -ell); dx <= std::min(n, ell); ++dx) {
    int rest = ell - std::abs(dx);
    if (rest > n) continue;
    out.push_back(t.wrap(v.x + dx, v.y + rest));
    if (rest != 0) out.push_back(t.wrap(v.x + dx, v.y - rest));
  }
  return out;
}

std::vector<Edge> torus_edge_boundary(const VertexSet& s, int n) {
  Torus t(n);
  if (s.universe() != t.size()) throw DomainError("set universe mismatch");
  std::vector<Edge> out;
  s.for_each([&](Vertex v) {
    for (Vertex w : t.neighbours(v)) {
      if (!s.contains(w)) out.emplace_back(v, w);
    }
  });
  return out;
}

std::size_t torus_edge_boundary_size(const VertexSet& s, int n) {
  Torus t(n);
  if (s.universe() != t.size()) throw DomainError("set universe mismatch");
  std::size_t count = 0;
  s.for_each([&](Vertex v) {
    for (Vertex w : t.neighbours(v)) count += !s.contains(w);
  });
  return count;
}

LPartition make_l_partition(int n, int ell) {
  require_n(n);
  if (ell < 1 || ell > n) {
    throw DomainError("l-partition requires 1 <= ell <= n");
  }
  const int side = 2 * n + 1;
  const std::vector<int> runs = split_side(side, ell);
  std::vector<Box> boxes;
  boxes.reserve(runs.size() * runs.size());
  int x0 = -n;
  for (int w : runs) {
    int y0 = -n;
    for (int h : runs) {
      boxes.push_back({x0, y0, w, h});
      y0 += h;
    }
    x0 += w;
  }
  return LPartition(n, ell, std::move(boxes));
}

bool is_box_like(const VertexSet& s, const LPartition& p) {
  std::vector<std::size_t> hits(p.box_count(), 0);
  s.for_each([&](Vertex v) { ++hits[p.box_of(v)]; });
  for (std::size_t b = 0; b < hits.size(); ++b) {
    if (hits[b] != 0 && hits[b] != p.boxes()[b].area()) return false;
  }
  return true;
}

VertexSet box_core(const VertexSet& s, const LPartition& p) {
  std::vector<std::size_t> hits(p.box_count(), 0);
  s.for_each([&](Vertex v) { ++hits[p.box_of(v)]; });
  VertexSet core(s.universe());
  s.for_each([&](Vertex v) {
    std::uint32_t b = p.box_of(v);
    if (hits[b] == p.boxes()[b].area()) core.insert(v);
  });
  return core;
}

bool box_core_dichotomy_check(const VertexSet& s, const LPartition& p,
                              double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie in (0, 1)");
  if (s.empty()) throw DomainError("dichotomy check needs a nonempty set");
  const double size = static_cast<double>(s.size());
  if (static_cast<double>(box_core(s, p).size()) >= (1.0 - eta) * size) {
    return true;
  }
  const double ell = p.ell();
  return static_cast<double>(torus_edge_boundary_size(s, p.n())) >=
         eta * size / (4.0 * ell * ell);
}

}  // namespace swg
