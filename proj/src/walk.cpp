#include "swg/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "swg/errors.hpp"

namespace swg {

namespace {

constexpr std::size_t kRenormalizeEvery = 64;

// Several distributions evolved side by side, stored vertex-major so one
// kernel application streams the adjacency once for all columns.
class WalkBatch {
 public:
  WalkBatch(const SmallWorldGraph& g, std::span<const Vertex> starts)
      : g_(&g), width_(starts.size()), n_(g.vertex_count()) {
    cur_.assign(n_ * width_, 0.0);
    for (std::size_t s = 0; s < width_; ++s) cur_[starts[s] * width_ + s] = 1.0;
    half_inv_degree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      half_inv_degree_[v] = 0.5 / g.degree(static_cast<Vertex>(v));
    }
  }

  std::size_t time() const noexcept { return t_; }
  std::size_t width() const noexcept { return width_; }

  void advance_to(std::size_t target) {
    while (t_ < target) step();
  }

  void step() {
    scaled_.resize(cur_.size());
    for (std::size_t v = 0; v < n_; ++v) {
      const double k = half_inv_degree_[v];
      const double* in = &cur_[v * width_];
      double* out = &scaled_[v * width_];
      for (std::size_t s = 0; s < width_; ++s) out[s] = in[s] * k;
    }
    const auto& off = g_->offsets();
    const auto& adj = g_->adjacency();
    for (std::size_t w = 0; w < n_; ++w) {
      double* out = &cur_[w * width_];
      for (std::size_t s = 0; s < width_; ++s) out[s] *= 0.5;
      for (std::uint32_t e = off[w]; e < off[w + 1]; ++e) {
        const double* in = &scaled_[adj[e] * width_];
        for (std::size_t s = 0; s < width_; ++s) out[s] += in[s];
      }
    }
    ++t_;
    if (t_ % kRenormalizeEvery == 0) renormalize();
  }

  // TV of every column against pi.
  std::vector<double> tv(const std::vector<double>& pi) const {
    std::vector<double> d(width_, 0.0);
    for (std::size_t v = 0; v < n_; ++v) {
      const double* row = &cur_[v * width_];
      for (std::size_t s = 0; s < width_; ++s) d[s] += std::abs(row[s] - pi[v]);
    }
    for (double& x : d) x *= 0.5;
    return d;
  }

 private:
  void renormalize() {
    std::vector<double> mass(width_, 0.0);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t s = 0; s < width_; ++s) mass[s] += cur_[v * width_ + s];
    }
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t s = 0; s < width_; ++s) cur_[v * width_ + s] /= mass[s];
    }
  }

  const SmallWorldGraph* g_;
  std::size_t width_;
  std::size_t n_;
  std::size_t t_ = 0;
  std::vector<double> cur_;
  std::vector<double> scaled_;
  std::vector<double> half_inv_degree_;
};

double max_of(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

struct ChunkOutcome {
  std::size_t t = 0;
  std::size_t worst = 0;
  double tv_at_t = 0.0;
  double tv_before = 0.0;
};

// Mixing time of one chunk of starts. Returns false when every start in the
// chunk is already within epsilon after `known` steps.
bool mix_chunk(const SmallWorldGraph& g, std::span<const Vertex> starts,
               const std::vector<double>& pi, const MixingOptions& opt,
               std::size_t known, ChunkOutcome& result) {
  const double eps = opt.epsilon;
  WalkBatch lo_state(g, starts);
  std::vector<double> lo_tv = lo_state.tv(pi);
  if (max_of(lo_tv) <= eps) {
    result = {0, 0, max_of(lo_tv), 0.0};
    return known == 0;
  }
  std::size_t hi = 1;
  if (known > 0) {
    lo_state.advance_to(known);
    lo_tv = lo_state.tv(pi);
    if (max_of(lo_tv) <= eps) return false;
    hi = 2 * known;
  }

  // Doubling: lo_state always sits at a time whose worst TV exceeds eps.
  WalkBatch hi_state = lo_state;
  std::vector<double> hi_tv;
  for (;;) {
    if (hi > opt.max_steps) {
      throw ConvergenceError("mixing time exceeds max_steps=" +
                                 std::to_string(opt.max_steps),
                             max_of(lo_tv), lo_tv);
    }
    hi_state.advance_to(hi);
    hi_tv = hi_state.tv(pi);
    if (max_of(hi_tv) <= eps) break;
    lo_state = hi_state;
    lo_tv = hi_tv;
    hi *= 2;
  }

  while (hi - lo_state.time() > 1) {
    std::size_t mid = lo_state.time() + (hi - lo_state.time()) / 2;
    WalkBatch probe = lo_state;
    probe.advance_to(mid);
    std::vector<double> probe_tv = probe.tv(pi);
    if (max_of(probe_tv) <= eps) {
      hi = mid;
      hi_tv = std::move(probe_tv);
    } else {
      lo_state = std::move(probe);
      lo_tv = std::move(probe_tv);
    }
  }
  auto worst = static_cast<std::size_t>(
      std::max_element(lo_tv.begin(), lo_tv.end()) - lo_tv.begin());
  result = {hi, worst, max_of(hi_tv), lo_tv[worst]};
  return true;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> entries)
    : p_(std::move(entries)) {
  double mass = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0)) throw DomainError("probability entries must be >= 0");
    mass += x;
  }
  if (std::abs(mass - 1.0) > 1e-9) {
    throw DomainError("probability vector must sum to 1");
  }
}

ProbabilityVector ProbabilityVector::point_mass(std::size_t size, Vertex v) {
  if (v >= size) throw DomainError("point mass outside vertex range");
  std::vector<double> p(size, 0.0);
  p[v] = 1.0;
  return ProbabilityVector(std::move(p));
}

ProbabilityVector stationary(const SmallWorldGraph& g) {
  const double total = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> pi(g.vertex_count());
  for (std::size_t v = 0; v < pi.size(); ++v) {
    pi[v] = g.degree(static_cast<Vertex>(v)) / total;
  }
  return ProbabilityVector(std::move(pi), ProbabilityVector::Unchecked{});
}

ProbabilityVector step_distribution(const SmallWorldGraph& g,
                                    const ProbabilityVector& mu) {
  if (mu.size() != g.vertex_count()) {
    throw DomainError("distribution length does not match graph");
  }
  const std::size_t n = mu.size();
  std::vector<double> scaled(n);
  for (std::size_t v = 0; v < n; ++v) {
    scaled[v] = mu[v] * 0.5 / g.degree(static_cast<Vertex>(v));
  }
  std::vector<double> next(n);
  for (std::size_t w = 0; w < n; ++w) {
    double acc = 0.5 * mu[w];
    for (Vertex v : g.neighbours(static_cast<Vertex>(w))) acc += scaled[v];
    next[w] = acc;
  }
  return ProbabilityVector(std::move(next), ProbabilityVector::Unchecked{});
}

double tv_distance(const ProbabilityVector& mu, const ProbabilityVector& nu) {
  if (mu.size() != nu.size()) {
    throw DomainError("tv_distance: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) sum += std::abs(mu[i] - nu[i]);
  return 0.5 * sum;
}

double distance_to_stationarity(const SmallWorldGraph& g, Vertex v,
                                std::size_t t) {
  if (v >= g.vertex_count()) throw DomainError("start vertex out of range");
  const ProbabilityVector pi = stationary(g);
  const std::vector<double> pi_vec(pi.entries().begin(), pi.entries().end());
  const Vertex start[] = {v};
  WalkBatch walk(g, start);
  walk.advance_to(t);
  return walk.tv(pi_vec)[0];
}

MixingEstimate mixing_time(const SmallWorldGraph& g,
                           std::span<const Vertex> starts,
                           const MixingOptions& options) {
  if (starts.empty()) throw DomainError("mixing_time needs at least one start");
  if (!(options.epsilon > 0.0 && options.epsilon <= 1.0)) {
    throw DomainError("epsilon must lie in (0, 1]");
  }
  for (Vertex v : starts) {
    if (v >= g.vertex_count()) throw DomainError("start vertex out of range");
  }
  const ProbabilityVector pi = stationary(g);
  const std::vector<double> pi_vec(pi.entries().begin(), pi.entries().end());

  MixingEstimate est;
  est.starts.assign(starts.begin(), starts.end());
  est.epsilon = options.epsilon;
  VertexSet covered(g.vertex_count());
  for (Vertex v : starts) covered.insert(v);
  est.exact = covered.size() == g.vertex_count();
  est.worst_start = starts.front();

  // T = max over starts of each start's own first passage below epsilon, so
  // chunks only need re-examining when they beat the running maximum.
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk);
  bool have = false;
  for (std::size_t begin = 0; begin < starts.size(); begin += chunk) {
    auto part = starts.subspan(begin, std::min(chunk, starts.size() - begin));
    ChunkOutcome out;
    if (mix_chunk(g, part, pi_vec, options, est.t_mix, out)) {
      if (!have || out.t > est.t_mix) {
        est.t_mix = out.t;
        est.worst_start = part[out.worst];
        est.tv_at_t_mix = out.tv_at_t;
        est.tv_before = out.tv_before;
      }
      have = true;
    }
  }
  // tv_at_t_mix must cover every start, not only the last improving chunk.
  if (est.t_mix > 0 && starts.size() > chunk) {
    double worst = 0.0;
    for (std::size_t begin = 0; begin < starts.size(); begin += chunk) {
      auto part = starts.subspan(begin, std::min(chunk, starts.size() - begin));
      WalkBatch b(g, part);
      b.advance_to(est.t_mix);
      worst = std::max(worst, max_of(b.tv(pi_vec)));
    }
    est.tv_at_t_mix = worst;
  }
  return est;
}

MixingEstimate mixing_time_all(const SmallWorldGraph& g,
                               const MixingOptions& options) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  return mixing_time(g, all, options);
}

SpectralResult second_eigenpair(const SmallWorldGraph& g,
                                const SpectralOptions& options) {
  const std::size_t n = g.vertex_count();
  std::vector<double> sqrt_deg(n), inv_sqrt_deg(n);
  double norm2 = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double d = g.degree(static_cast<Vertex>(v));
    sqrt_deg[v] = std::sqrt(d);
    inv_sqrt_deg[v] = 1.0 / sqrt_deg[v];
    norm2 += d;
  }
  // Top eigenvector of the symmetrised kernel: sqrt(pi), unit length.
  std::vector<double> top(n);
  for (std::size_t v = 0; v < n; ++v) top[v] = sqrt_deg[v] / std::sqrt(norm2);

  auto deflate_and_normalise = [&](std::vector<double>& x) {
    double dot = 0.0;
    for (std::size_t v = 0; v < n; ++v) dot += x[v] * top[v];
    double nrm = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      x[v] -= dot * top[v];
      nrm += x[v] * x[v];
    }
    nrm = std::sqrt(nrm);
    for (double& xi : x) xi /= nrm;
  };

  // y = A x with A = D^{1/2} P D^{-1/2}; y_w = x_w/2 + sum_v x_v / (2 sqrt(d_v d_w)).
  std::vector<double> scaled(n);
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t v = 0; v < n; ++v) scaled[v] = 0.5 * x[v] * inv_sqrt_deg[v];
    for (std::size_t w = 0; w < n; ++w) {
      double acc = 0.0;
      for (Vertex v : g.neighbours(static_cast<Vertex>(w))) acc += scaled[v];
      y[w] = 0.5 * x[w] + acc * inv_sqrt_deg[w];
    }
  };

  Rng rng(options.seed);
  std::normal_distribution<double> gauss;
  std::vector<double> x(n), y(n);
  for (double& xi : x) xi = gauss(rng);
  deflate_and_normalise(x);

  // Rayleigh quotients increase monotonically for a PSD operator. The
  // remaining error is extrapolated from the contraction of windowed
  // increments.
  constexpr std::size_t kWindow = 16;
  std::vector<double> history;
  double rho = 0.0;
  std::size_t it = 0;
  for (; it < options.max_iterations; ++it) {
    apply(x, y);
    rho = 0.0;
    for (std::size_t v = 0; v < n; ++v) rho += x[v] * y[v];
    x.swap(y);
    deflate_and_normalise(x);
    history.push_back(rho);
    if (history.size() > 2 * kWindow + 1) {
      history.erase(history.begin());
      const double d_new = history[2 * kWindow] - history[kWindow];
      const double d_old = history[kWindow] - history[0];
      const double gap = 1.0 - rho;
      if (std::abs(d_new) <= 1e-13 * gap) break;
      if (d_old > 0.0 && d_new >= 0.0 && d_new < d_old) {
        const double q = d_new / d_old;
        const double remaining = d_new * q / (1.0 - q);
        if (remaining <= options.tolerance * gap) break;
      }
    }
  }
  if (it == options.max_iterations) {
    throw ConvergenceError("power iteration did not converge within " +
                               std::to_string(options.max_iterations) +
                               " iterations",
                           1.0 - rho, x);
  }

  SpectralResult out;
  out.lambda2 = rho;
  out.gap = 1.0 - rho;
  out.iterations = it + 1;
  // f = x / sqrt(pi): right eigenvector of P. With x unit length,
  // sum pi f^2 = 1.
  out.eigenvector.resize(n);
  const double scale = std::sqrt(norm2);
  for (std::size_t v = 0; v < n; ++v) {
    out.eigenvector[v] = x[v] * inv_sqrt_deg[v] * scale;
  }
  return out;
}

double spectral_gap(const SmallWorldGraph& g, const SpectralOptions& options) {
  return second_eigenpair(g, options).gap;
}

std::vector<Vertex> sample_trajectory(const SmallWorldGraph& g, Vertex v,
                                      std::size_t t, Rng& rng) {
  if (v >= g.vertex_count()) throw DomainError("start vertex out of range");
  std::vector<Vertex> path;
  path.reserve(t + 1);
  path.push_back(v);
  std::bernoulli_distribution hold(0.5);
  for (std::size_t i = 0; i < t; ++i) {
    if (!hold(rng)) {
      auto nb = g.neighbours(v);
      std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
      v = nb[pick(rng)];
    }
    path.push_back(v);
  }
  return path;
}

}  // namespace swg
