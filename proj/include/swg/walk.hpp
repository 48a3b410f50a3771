#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swg/graph.hpp"
#include "swg/rng.hpp"

namespace swg {

// Distribution over vertices, indexed canonically.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;
  // Throws DomainError on negative entries or mass off 1 by more than 1e-9.
  explicit ProbabilityVector(std::vector<double> entries);

  static ProbabilityVector point_mass(std::size_t size, Vertex v);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const noexcept { return p_[i]; }
  std::span<const double> entries() const noexcept { return p_; }

 private:
  struct Unchecked {};
  ProbabilityVector(std::vector<double> entries, Unchecked)
      : p_(std::move(entries)) {}
  friend ProbabilityVector step_distribution(const SmallWorldGraph&,
                                             const ProbabilityVector&);
  friend ProbabilityVector stationary(const SmallWorldGraph&);

  std::vector<double> p_;
};

// pi_v = d_v / (2|E|).
ProbabilityVector stationary(const SmallWorldGraph& g);

// One step of the lazy walk: hold with probability 1/2, else move to a
// uniform neighbour.
ProbabilityVector step_distribution(const SmallWorldGraph& g,
                                    const ProbabilityVector& mu);

double tv_distance(const ProbabilityVector& mu, const ProbabilityVector& nu);

// || P^t(v, .) - pi ||_TV.
double distance_to_stationarity(const SmallWorldGraph& g, Vertex v,
                                std::size_t t);

struct MixingOptions {
  double epsilon = 0.25;
  std::size_t max_steps = std::size_t{1} << 26;
  // Starts evolved together; bounds memory at chunk * N doubles per state.
  std::size_t chunk = 64;
};

struct MixingEstimate {
  std::size_t t_mix = 0;
  std::vector<Vertex> starts;
  double epsilon = 0.25;
  // True when the starts cover every vertex, i.e. t_mix is the mixing time
  // itself rather than a lower estimate.
  bool exact = false;
  Vertex worst_start = 0;
  // Worst TV over the starts at t_mix, and at t_mix - 1 for worst_start
  // (meaningless when t_mix == 0).
  double tv_at_t_mix = 0.0;
  double tv_before = 0.0;
};

// First t with max over starts of ||P^t(v,.) - pi||_TV <= epsilon. Uses
// doubling then bisection, relying on monotonicity of the TV curve.
MixingEstimate mixing_time(const SmallWorldGraph& g,
                           std::span<const Vertex> starts,
                           const MixingOptions& options = {});
MixingEstimate mixing_time_all(const SmallWorldGraph& g,
                               const MixingOptions& options = {});

struct SpectralOptions {
  double tolerance = 1e-6;
  std::size_t max_iterations = 4'000'000;
  std::uint64_t seed = 0x5EED;
};

struct SpectralResult {
  double gap = 0.0;
  double lambda2 = 0.0;
  // Right eigenvector of the lazy kernel for lambda2, normalised so that
  // sum_v pi_v f_v^2 = 1 and sum_v pi_v f_v = 0.
  std::vector<double> eigenvector;
  std::size_t iterations = 0;
};

// Power iteration on D^{1/2} P D^{-1/2} with sqrt(pi) deflated exactly.
// Throws ConvergenceError (carrying the last iterate) at the iteration cap.
SpectralResult second_eigenpair(const SmallWorldGraph& g,
                                const SpectralOptions& options = {});
double spectral_gap(const SmallWorldGraph& g,
                    const SpectralOptions& options = {});

std::vector<Vertex> sample_trajectory(const SmallWorldGraph& g, Vertex v,
                                      std::size_t t, Rng& rng);

}  // namespace swg
