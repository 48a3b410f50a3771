#include "swg/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "swg/errors.hpp"
#include "swg/walk.hpp"

namespace swg {

namespace {

void require_universe(const SmallWorldGraph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) {
    throw DomainError("vertex set universe does not match graph");
  }
}

double conductance_value(std::size_t boundary, std::uint64_t vol_in,
                         std::uint64_t total_volume) {
  const double in = static_cast<double>(vol_in);
  const double out = static_cast<double>(total_volume - vol_in);
  return static_cast<double>(boundary) * static_cast<double>(total_volume) /
         (in * out);
}

// Incremental bookkeeping for prefix or grow-and-shrink scans: membership,
// edge boundary, volume and vertex boundary under single-vertex updates.
class CutTracker {
 public:
  explicit CutTracker(const SmallWorldGraph& g)
      : g_(&g), in_(g.vertex_count(), 0), inside_nb_(g.vertex_count(), 0) {}

  void add(Vertex v) {
    const std::uint32_t d = g_->degree(v);
    boundary_ += d;
    boundary_ -= 2 * inside_nb_[v];
    volume_ += d;
    if (inside_nb_[v] > 0) --vertex_boundary_;
    in_[v] = 1;
    ++size_;
    for (Vertex w : g_->neighbours(v)) {
      if (inside_nb_[w]++ == 0 && !in_[w]) ++vertex_boundary_;
    }
  }

  void remove(Vertex v) {
    const std::uint32_t d = g_->degree(v);
    boundary_ += 2 * inside_nb_[v];
    boundary_ -= d;
    volume_ -= d;
    in_[v] = 0;
    --size_;
    if (inside_nb_[v] > 0) ++vertex_boundary_;
    for (Vertex w : g_->neighbours(v)) {
      if (--inside_nb_[w] == 0 && !in_[w]) --vertex_boundary_;
    }
  }

  bool contains(Vertex v) const { return in_[v] != 0; }
  std::size_t size() const { return size_; }
  std::size_t boundary() const { return boundary_; }
  std::uint64_t volume() const { return volume_; }

  CutReport report() const {
    CutReport r;
    r.set_size = size_;
    r.edge_boundary = boundary_;
    r.vertex_boundary = vertex_boundary_;
    r.degree_sum = volume_;
    r.conductance =
        conductance_value(boundary_, volume_, 2 * g_->edge_count());
    r.alpha = static_cast<double>(size_) / g_->vertex_count();
    return r;
  }

 private:
  const SmallWorldGraph* g_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint32_t> inside_nb_;
  std::size_t size_ = 0;
  std::size_t boundary_ = 0;
  std::size_t vertex_boundary_ = 0;
  std::uint64_t volume_ = 0;
};

// Anchored-growth enumeration of connected vertex sets: every connected set
// is produced exactly once, from its minimum vertex. The visitor sees
// enter(v) after v joins the current set (return false to stop growing it)
// and leave(v) when v is dropped again.
template <class Adjacency, class Visitor>
class ConnectedSetEnumerator {
 public:
  ConnectedSetEnumerator(std::size_t vertices, Adjacency adjacency,
                         std::size_t max_size, Visitor& visitor)
      : vertices_(vertices),
        adjacency_(std::move(adjacency)),
        max_size_(max_size),
        visitor_(&visitor),
        closed_count_(vertices, 0) {}

  void run() {
    for (std::size_t anchor = 0; anchor < vertices_; ++anchor) {
      anchor_ = static_cast<Vertex>(anchor);
      std::vector<Vertex> extension;
      for (Vertex u : adjacency_(anchor_)) {
        if (u > anchor_) extension.push_back(u);
      }
      if (push(anchor_)) grow(std::move(extension));
      pop(anchor_);
    }
  }

 private:
  bool push(Vertex v) {
    ++size_;
    ++closed_count_[v];
    for (Vertex u : adjacency_(v)) ++closed_count_[u];
    return visitor_->enter(v, size_);
  }
  void pop(Vertex v) {
    --size_;
    --closed_count_[v];
    for (Vertex u : adjacency_(v)) --closed_count_[u];
    visitor_->leave(v);
  }

  void grow(std::vector<Vertex> extension) {
    if (size_ >= max_size_) return;
    while (!extension.empty()) {
      const Vertex w = extension.back();
      extension.pop_back();
      std::vector<Vertex> next = extension;
      // Exclusive neighbours of w: outside the closed neighbourhood of the
      // current set.
      for (Vertex u : adjacency_(w)) {
        if (u > anchor_ && closed_count_[u] == 0) next.push_back(u);
      }
      if (push(w)) grow(std::move(next));
      pop(w);
    }
  }

  std::size_t vertices_;
  Adjacency adjacency_;
  std::size_t max_size_;
  Visitor* visitor_;
  std::vector<std::uint32_t> closed_count_;
  std::size_t size_ = 0;
  Vertex anchor_ = 0;
};

std::vector<std::uint32_t> bfs_from(const SmallWorldGraph& g, Vertex s) {
  std::vector<std::uint32_t> dist(g.vertex_count(),
                                  std::numeric_limits<std::uint32_t>::max());
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] == std::numeric_limits<std::uint32_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Edge> edge_boundary(const SmallWorldGraph& g, const VertexSet& s) {
  require_universe(g, s);
  std::vector<Edge> out;
  s.for_each([&](Vertex v) {
    for (Vertex w : g.neighbours(v)) {
      if (!s.contains(w)) out.emplace_back(v, w);
    }
  });
  return out;
}

std::size_t edge_boundary_size(const SmallWorldGraph& g, const VertexSet& s) {
  require_universe(g, s);
  std::size_t count = 0;
  s.for_each([&](Vertex v) {
    for (Vertex w : g.neighbours(v)) count += !s.contains(w);
  });
  return count;
}

VertexSet vertex_boundary(const SmallWorldGraph& g, const VertexSet& s) {
  require_universe(g, s);
  VertexSet out(g.vertex_count());
  s.for_each([&](Vertex v) {
    for (Vertex w : g.neighbours(v)) {
      if (!s.contains(w)) out.insert(w);
    }
  });
  return out;
}

std::uint64_t degree_sum(const SmallWorldGraph& g, const VertexSet& s) {
  require_universe(g, s);
  std::uint64_t sum = 0;
  s.for_each([&](Vertex v) { sum += g.degree(v); });
  return sum;
}

double conductance(const SmallWorldGraph& g, const VertexSet& s) {
  require_universe(g, s);
  if (s.empty() || s.size() == g.vertex_count()) {
    throw DomainError("conductance needs a proper nonempty subset");
  }
  return conductance_value(edge_boundary_size(g, s), degree_sum(g, s),
                           2 * g.edge_count());
}

CutReport cut_report(const SmallWorldGraph& g, const VertexSet& s) {
  CutReport r;
  r.conductance = conductance(g, s);
  r.set_size = s.size();
  r.edge_boundary = edge_boundary_size(g, s);
  r.vertex_boundary = vertex_boundary(g, s).size();
  r.degree_sum = degree_sum(g, s);
  r.alpha = static_cast<double>(s.size()) / g.vertex_count();
  return r;
}

ExpansionVerdict is_expanding(const SmallWorldGraph& g, const VertexSet& s,
                              double epsilon, double c) {
  require_universe(g, s);
  if (s.empty()) throw DomainError("expansion check needs a nonempty set");
  if (!(epsilon > 0.0) || !(c > 0.0)) {
    throw DomainError("epsilon and c must be positive");
  }
  std::vector<std::uint32_t> out_edges;
  out_edges.reserve(s.size());
  s.for_each([&](Vertex v) {
    std::uint32_t b = 0;
    for (Vertex w : g.neighbours(v)) b += !s.contains(w);
    out_edges.push_back(b);
  });
  std::sort(out_edges.begin(), out_edges.end());

  const double size = static_cast<double>(s.size());
  const double threshold = (1.0 - epsilon) * size;
  auto smallest = static_cast<std::size_t>(std::max(0.0, std::ceil(threshold)));

  ExpansionVerdict verdict{epsilon, c, true, std::nullopt};
  std::uint64_t prefix = 0;
  for (std::size_t m = 1; m <= s.size(); ++m) {
    prefix += out_edges[m - 1];
    if (m < smallest) continue;
    if (static_cast<double>(prefix) < c * static_cast<double>(m)) {
      verdict.holds = false;
      verdict.witness = ExpansionWitness{m, prefix};
      break;
    }
  }
  return verdict;
}

MinConductance min_conductance_bruteforce(const SmallWorldGraph& g,
                                          bool connected_only,
                                          std::uint64_t max_sets) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t total = 2 * g.edge_count();
  MinConductance best{std::numeric_limits<double>::infinity(), VertexSet(n)};

  if (!connected_only) {
    if (n > kAllSubsetsCap) {
      throw CapacityError("all-subsets conductance limited to N <= " +
                          std::to_string(kAllSubsetsCap) + ", got N=" +
                          std::to_string(n));
    }
    // Gray-code walk over all subsets; one vertex toggles per step.
    CutTracker tracker(g);
    std::uint64_t best_code = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < limit; ++i) {
      const auto v = static_cast<Vertex>(std::countr_zero(i));
      if (tracker.contains(v)) {
        tracker.remove(v);
      } else {
        tracker.add(v);
      }
      if (tracker.size() == n) continue;
      double phi = conductance_value(tracker.boundary(), tracker.volume(), total);
      if (phi < best.value) {
        best.value = phi;
        best_code = i ^ (i >> 1);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((best_code >> v) & 1U) best.set.insert(static_cast<Vertex>(v));
    }
    return best;
  }

  if (n > kConnectedSubsetsCap) {
    throw CapacityError("connected-set conductance limited to N <= " +
                        std::to_string(kConnectedSubsetsCap) + ", got N=" +
                        std::to_string(n));
  }
  struct Visitor {
    const SmallWorldGraph* g;
    CutTracker tracker;
    std::uint64_t total;
    std::uint64_t max_sets;
    std::uint64_t visited = 0;
    std::vector<Vertex> stack;
    std::vector<Vertex> best_members;
    double best = std::numeric_limits<double>::infinity();

    bool enter(Vertex v, std::size_t) {
      if (++visited > max_sets) {
        throw CapacityError("connected-set enumeration exceeded " +
                            std::to_string(max_sets) + " sets");
      }
      tracker.add(v);
      stack.push_back(v);
      if (tracker.size() < g->vertex_count()) {
        double phi =
            conductance_value(tracker.boundary(), tracker.volume(), total);
        if (phi < best) {
          best = phi;
          best_members = stack;
        }
      }
      return true;
    }
    void leave(Vertex v) {
      tracker.remove(v);
      stack.pop_back();
    }
  } visitor{&g, CutTracker(g), total, max_sets, 0, {}, {}};

  auto adjacency = [&g](Vertex v) { return g.neighbours(v); };
  ConnectedSetEnumerator enumerator(n, adjacency, n, visitor);
  enumerator.run();
  best.value = visitor.best;
  best.set = VertexSet::from_members(n, visitor.best_members);
  return best;
}

std::vector<CutReport> sweep_cut(const SmallWorldGraph& g,
                                 std::span<const double> eigenvector) {
  const std::size_t n = g.vertex_count();
  if (eigenvector.size() != n) {
    throw DomainError("eigenvector length does not match graph");
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return eigenvector[a] < eigenvector[b];
  });
  CutTracker tracker(g);
  std::vector<CutReport> reports;
  reports.reserve(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    tracker.add(order[k]);
    reports.push_back(tracker.report());
  }
  return reports;
}

std::vector<CutReport> sweep_cut(const SmallWorldGraph& g) {
  return sweep_cut(g, second_eigenpair(g).eigenvector);
}

VertexSet ball_set(int n, int L) {
  Torus t(n);
  if (L < 1 || L > n) throw DomainError("ball radius must lie in [1, n]");
  VertexSet s(t.size());
  for (int x = -L; x <= L; ++x) {
    int span = L - std::abs(x);
    for (int y = -span; y <= span; ++y) s.insert(t.index({x, y}));
  }
  return s;
}

std::uint64_t enumerate_connected_boxsets(const SmallWorldGraph& g,
                                          const LPartition& p, int q) {
  constexpr int kMaxQ = 6;
  constexpr std::size_t kMaxBoxes = 4096;
  if (p.n() != g.n()) throw DomainError("partition and graph disagree on n");
  if (q < 1) throw DomainError("q must be >= 1");
  if (q > kMaxQ || p.box_count() > kMaxBoxes) {
    throw CapacityError("box-set enumeration limited to q <= " +
                        std::to_string(kMaxQ) + " and at most " +
                        std::to_string(kMaxBoxes) + " boxes");
  }
  const std::size_t boxes = p.box_count();
  std::vector<std::vector<Vertex>> box_adj(boxes);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t bv = p.box_of(static_cast<Vertex>(v));
    for (Vertex w : g.neighbours(static_cast<Vertex>(v))) {
      const std::uint32_t bw = p.box_of(w);
      if (bw != bv) box_adj[bv].push_back(bw);
    }
  }
  for (auto& adj : box_adj) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  struct Visitor {
    std::size_t q;
    std::uint64_t count = 0;
    bool enter(Vertex, std::size_t size) {
      if (size == q) ++count;
      return size < q;
    }
    void leave(Vertex) {}
  } visitor{static_cast<std::size_t>(q)};
  auto adjacency = [&box_adj](Vertex b) -> const std::vector<Vertex>& {
    return box_adj[b];
  };
  ConnectedSetEnumerator enumerator(boxes, adjacency,
                                    static_cast<std::size_t>(q), visitor);
  enumerator.run();
  return visitor.count;
}

std::vector<std::uint32_t> bfs_distances(const SmallWorldGraph& g,
                                         Vertex source) {
  if (source >= g.vertex_count()) throw DomainError("source out of range");
  return bfs_from(g, source);
}

DiametralPair diametral_pair(const SmallWorldGraph& g, bool exact) {
  const std::size_t n = g.vertex_count();
  DiametralPair best;
  best.exact = exact;
  if (!exact) {
    auto farthest = [&](const std::vector<std::uint32_t>& d) {
      return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
    };
    Vertex a = farthest(bfs_from(g, 0));
    auto da = bfs_from(g, a);
    Vertex b = farthest(da);
    best.u = a;
    best.v = b;
    best.distance = da[b];
    return best;
  }
  if (n > kExactDiameterCap) {
    throw CapacityError("exact diameter limited to N <= " +
                        std::to_string(kExactDiameterCap) + ", got N=" +
                        std::to_string(n));
  }
  // 64 BFS runs per pass, one bit lane per source.
  std::vector<std::uint64_t> visited(n), frontier(n), next(n);
  for (std::size_t base = 0; base < n; base += 64) {
    const std::size_t lanes = std::min<std::size_t>(64, n - base);
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (std::size_t i = 0; i < lanes; ++i) {
      visited[base + i] = frontier[base + i] = std::uint64_t{1} << i;
    }
    for (std::size_t level = 1;; ++level) {
      bool any = false;
      for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t reach = 0;
        for (Vertex w : g.neighbours(static_cast<Vertex>(v))) reach |= frontier[w];
        reach &= ~visited[v];
        next[v] = reach;
        if (reach) {
          any = true;
          if (level > best.distance) {
            best.distance = level;
            best.u = static_cast<Vertex>(base + std::countr_zero(reach));
            best.v = static_cast<Vertex>(v);
          }
        }
      }
      if (!any) break;
      for (std::size_t v = 0; v < n; ++v) visited[v] |= next[v];
      frontier.swap(next);
    }
  }
  return best;
}

std::size_t diameter(const SmallWorldGraph& g, bool exact) {
  return diametral_pair(g, exact).distance;
}

}  // namespace swg
