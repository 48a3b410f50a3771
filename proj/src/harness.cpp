#include "swg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "swg/errors.hpp"
#include "swg/expansion.hpp"
#include "swg/rng.hpp"
#include "swg/walk.hpp"

namespace swg {

namespace {

struct Cell {
  int n;
  double r;
  std::uint64_t replicate;
};

std::vector<Cell> grid(const SweepConfig& cfg) {
  std::vector<int> ns = cfg.n_values;
  std::vector<double> rs = cfg.r_values;
  std::vector<std::uint64_t> reps = cfg.replicates;
  std::sort(ns.begin(), ns.end());
  std::sort(rs.begin(), rs.end());
  std::sort(reps.begin(), reps.end());
  std::vector<Cell> cells;
  cells.reserve(ns.size() * rs.size() * reps.size());
  for (int n : ns) {
    for (double r : rs) {
      for (std::uint64_t rep : reps) cells.push_back({n, r, rep});
    }
  }
  return cells;
}

// Runs fn(cell) over the grid on a bounded pool. Results land at the cell's
// index, so output order never depends on scheduling; the exception of the
// lowest failing cell is rethrown.
template <class Fn>
std::vector<ExperimentRecord> run_grid(const SweepConfig& cfg, Fn fn) {
  cfg.validate();
  const std::vector<Cell> cells = grid(cfg);
  std::vector<ExperimentRecord> out(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        out[i] = fn(cells[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min(effective_threads(cfg), cells.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::pair<SmallWorldGraph, ExperimentRecord> instance(const SweepConfig& cfg,
                                                      const Cell& cell) {
  const std::uint64_t seed = instance_seed(
      cfg.seed_base, static_cast<std::uint64_t>(cell.n), cell.r, cell.replicate);
  SmallWorldGraph g = sample_graph({cell.n, cell.r, seed});
  ExperimentRecord rec;
  rec.experiment = std::string(to_string(cfg.experiment));
  rec.n = cell.n;
  rec.r = cell.r;
  rec.replicate = cell.replicate;
  rec.seed = seed;
  rec.vertex_count = g.vertex_count();
  rec.edge_count = g.edge_count();
  rec.Z = g.Z();
  return {std::move(g), std::move(rec)};
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::mix: return "mix";
    case Experiment::conductance: return "conductance";
    case Experiment::diameter: return "diameter";
    case Experiment::routing: return "routing";
    case Experiment::wq: return "wq";
    case Experiment::expansion: return "expansion";
  }
  return "mix";
}

std::string_view to_string(StartPolicy p) {
  switch (p) {
    case StartPolicy::all: return "all";
    case StartPolicy::heuristic: return "heuristic";
    case StartPolicy::automatic: return "auto";
  }
  return "auto";
}

Experiment parse_experiment(std::string_view text) {
  for (Experiment e : {Experiment::mix, Experiment::conductance,
                       Experiment::diameter, Experiment::routing,
                       Experiment::wq, Experiment::expansion}) {
    if (to_string(e) == text) return e;
  }
  throw DomainError("unknown experiment '" + std::string(text) + "'");
}

StartPolicy parse_start_policy(std::string_view text) {
  for (StartPolicy p :
       {StartPolicy::all, StartPolicy::heuristic, StartPolicy::automatic}) {
    if (to_string(p) == text) return p;
  }
  throw DomainError("unknown start policy '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw DomainError("unknown output format '" + std::string(text) + "'");
}

std::vector<std::uint64_t> replicate_range(std::size_t count) {
  std::vector<std::uint64_t> reps(count);
  std::iota(reps.begin(), reps.end(), std::uint64_t{0});
  return reps;
}

void SweepConfig::validate() const {
  if (n_values.empty() || r_values.empty() || replicates.empty()) {
    throw DomainError("sweep needs nonempty n, r and seed lists");
  }
  for (int n : n_values) {
    if (n < 1) throw DomainError("every n must be >= 1");
  }
  for (double r : r_values) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw DomainError("every r must be a finite value >= 0");
    }
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError("epsilon must lie in (0, 1]");
  }
  switch (experiment) {
    case Experiment::mix:
      if (starts == StartPolicy::all) {
        for (int n : n_values) {
          const std::size_t count =
              static_cast<std::size_t>(2 * n + 1) * static_cast<std::size_t>(2 * n + 1);
          if (count > kExactMixingCap) {
            throw CapacityError("exact mixing time over all starts requested for n=" +
                                std::to_string(n) + " (N=" + std::to_string(count) +
                                "); cap is N <= " + std::to_string(kExactMixingCap));
          }
        }
      }
      break;
    case Experiment::conductance:
      if (!(ball_frac > 0.0 && ball_frac <= 1.0)) {
        throw DomainError("ball_frac must lie in (0, 1]");
      }
      break;
    case Experiment::wq:
    case Experiment::expansion:
      if (ell < 1) throw DomainError("ell must be >= 1");
      for (int n : n_values) {
        if (ell > n) {
          throw DomainError("ell=" + std::to_string(ell) + " exceeds n=" +
                            std::to_string(n));
        }
      }
      if (experiment == Experiment::wq) {
        if (qmax < 1) throw DomainError("qmax must be >= 1");
        if (qmax > 6) throw CapacityError("exact box-set enumeration supports qmax <= 6");
      }
      if (experiment == Experiment::expansion &&
          (!(expansion_epsilon > 0.0) || !(expansion_c > 0.0) || sets == 0)) {
        throw DomainError("expansion needs positive epsilon, c and set count");
      }
      break;
    case Experiment::routing:
      if (pairs == 0) throw DomainError("routing needs at least one pair");
      break;
    case Experiment::diameter:
      break;
  }
}

std::size_t effective_threads(const SweepConfig& cfg) {
  if (const char* env = std::getenv("SWG_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max<std::size_t>(1, cfg.threads);
}

void ExperimentRecord::set(std::string name, FieldValue value) {
  for (auto& [k, v] : fields) {
    if (k == name) {
      v = std::move(value);
      return;
    }
  }
  fields.emplace_back(std::move(name), std::move(value));
}

const FieldValue* ExperimentRecord::find(std::string_view name) const {
  for (const auto& [k, v] : fields) {
    if (k == name) return &v;
  }
  return nullptr;
}

double ExperimentRecord::number(std::string_view name) const {
  const FieldValue* v = find(name);
  if (!v) throw DomainError("record has no field '" + std::string(name) + "'");
  if (auto i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
  if (auto d = std::get_if<double>(v)) return *d;
  throw DomainError("field '" + std::string(name) + "' is not numeric");
}

RoutingResult greedy_route(const SmallWorldGraph& g, Vertex source,
                           Vertex target, std::size_t hop_cap) {
  if (source >= g.vertex_count() || target >= g.vertex_count()) {
    throw DomainError("routing endpoint out of range");
  }
  if (hop_cap < 1) throw DomainError("hop_cap must be >= 1");
  const Torus& t = g.torus();
  RoutingResult res{source, target, 0, false};
  Vertex cur = source;
  while (cur != target && res.hops < hop_cap) {
    Vertex best = cur;
    int best_d = t.distance(cur, target);
    // Neighbour lists are sorted, so strict improvement keeps the smallest
    // index among ties.
    bool first = true;
    for (Vertex w : g.neighbours(cur)) {
      int d = t.distance(w, target);
      if (first || d < best_d) {
        best = w;
        best_d = d;
        first = false;
      }
    }
    cur = best;
    ++res.hops;
  }
  res.delivered = cur == target;
  return res;
}

std::vector<ExperimentRecord> run_mixing_sweep(const SweepConfig& cfg) {
  return run_grid(cfg, [&cfg](const Cell& cell) {
    auto [g, rec] = instance(cfg, cell);
    const std::size_t count = g.vertex_count();
    const bool exact_diameter = count <= kExactDiameterCap;
    const DiametralPair pair = diametral_pair(g, exact_diameter);
    const SpectralResult eig = second_eigenpair(g);

    const bool all = cfg.starts == StartPolicy::all ||
                     (cfg.starts == StartPolicy::automatic &&
                      count <= kExactMixingCap);
    std::vector<Vertex> starts;
    if (all) {
      starts.resize(count);
      std::iota(starts.begin(), starts.end(), Vertex{0});
    } else {
      // Endpoints of a diametral pair, extremes of the second eigenvector,
      // then uniform random vertices.
      const auto& f = eig.eigenvector;
      auto [lo, hi] = std::minmax_element(f.begin(), f.end());
      std::vector<Vertex> candidates = {
          pair.u, pair.v, static_cast<Vertex>(hi - f.begin()),
          static_cast<Vertex>(lo - f.begin())};
      Rng rng(hash_words({rec.seed, 0x7374617274ULL}));
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(count - 1));
      for (std::size_t i = 0; i < cfg.random_starts; ++i) {
        candidates.push_back(pick(rng));
      }
      VertexSet seen(count);
      for (Vertex v : candidates) {
        if (!seen.contains(v)) {
          seen.insert(v);
          starts.push_back(v);
        }
      }
    }
    MixingOptions mopt;
    mopt.epsilon = cfg.epsilon;
    const MixingEstimate est = mixing_time(g, starts, mopt);

    std::uint32_t min_degree = UINT32_MAX;
    for (std::size_t v = 0; v < count; ++v) {
      min_degree = std::min(min_degree, g.degree(static_cast<Vertex>(v)));
    }
    const double pi_min = min_degree / (2.0 * static_cast<double>(g.edge_count()));
    const double t_mix = static_cast<double>(est.t_mix);
    // Relaxation-time sandwich; ln 2 and ln(4 / pi_min) at epsilon = 1/4.
    const double lower = (1.0 / eig.gap - 1.0) * std::log(1.0 / (2.0 * cfg.epsilon));
    const double upper = std::log(1.0 / (cfg.epsilon * pi_min)) / eig.gap;

    rec.set("t_mix", as_int(est.t_mix));
    rec.set("t_mix_exact", std::int64_t{est.exact});
    rec.set("start_count", as_int(starts.size()));
    rec.set("worst_start", std::int64_t{est.worst_start});
    rec.set("tv_at_t_mix", est.tv_at_t_mix);
    rec.set("diameter", as_int(pair.distance));
    rec.set("diameter_exact", std::int64_t{pair.exact});
    rec.set("gap", eig.gap);
    rec.set("pi_min", pi_min);
    rec.set("relax_lower", lower);
    rec.set("relax_upper", upper);
    rec.set("diameter_bound_ok",
            std::int64_t{3.0 * t_mix >= static_cast<double>(pair.distance)});
    rec.set("relax_sandwich_ok", std::int64_t{lower <= t_mix && t_mix <= upper});
    return rec;
  });
}

std::vector<ExperimentRecord> run_conductance_sweep(const SweepConfig& cfg) {
  return run_grid(cfg, [&cfg](const Cell& cell) {
    auto [g, rec] = instance(cfg, cell);
    const int L = std::max(1, static_cast<int>(std::floor(cfg.ball_frac * cell.n)));
    const VertexSet ball = ball_set(cell.n, L);
    const CutReport cut = cut_report(g, ball);
    const double phi_complement = conductance(g, ball.complement());
    rec.set("L", std::int64_t{L});
    rec.set("ball_size", as_int(cut.set_size));
    rec.set("ball_edge_boundary", as_int(cut.edge_boundary));
    rec.set("ball_torus_boundary", as_int(torus_edge_boundary_size(ball, cell.n)));
    rec.set("ball_vertex_boundary", as_int(cut.vertex_boundary));
    rec.set("ball_degree_sum", static_cast<std::int64_t>(cut.degree_sum));
    rec.set("phi_ball", cut.conductance);
    rec.set("phi_ball_complement", phi_complement);
    rec.set("boundary_order_ok", std::int64_t{cut.edge_boundary >= cut.vertex_boundary});
    rec.set("complement_symmetry_ok", std::int64_t{phi_complement == cut.conductance});
    if (cfg.sweep_cut) {
      const auto reports = sweep_cut(g);
      auto best = std::min_element(
          reports.begin(), reports.end(),
          [](const CutReport& a, const CutReport& b) { return a.conductance < b.conductance; });
      rec.set("sweep_min", best->conductance);
      rec.set("sweep_min_size", as_int(best->set_size));
    }
    return rec;
  });
}

std::vector<ExperimentRecord> run_diameter_sweep(const SweepConfig& cfg) {
  return run_grid(cfg, [&cfg](const Cell& cell) {
    auto [g, rec] = instance(cfg, cell);
    const bool exact = g.vertex_count() <= kExactDiameterCap;
    rec.set("diameter", as_int(diameter(g, exact)));
    rec.set("diameter_exact", std::int64_t{exact});
    rec.set("double_sweep", as_int(diameter(g, false)));
    return rec;
  });
}

std::vector<ExperimentRecord> run_routing_sweep(const SweepConfig& cfg) {
  return run_grid(cfg, [&cfg](const Cell& cell) {
    auto [g, rec] = instance(cfg, cell);
    const std::size_t count = g.vertex_count();
    const std::size_t cap = cfg.hop_cap ? cfg.hop_cap : 10 * count;
    Rng rng(hash_words({rec.seed, 0x726F757465ULL}));
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(count - 1));
    std::vector<double> hops;
    hops.reserve(cfg.pairs);
    std::size_t delivered = 0;
    double torus_sum = 0.0;
    for (std::size_t i = 0; i < cfg.pairs; ++i) {
      Vertex s = pick(rng);
      Vertex t = pick(rng);
      RoutingResult res = greedy_route(g, s, t, cap);
      delivered += res.delivered;
      hops.push_back(static_cast<double>(res.hops));
      torus_sum += g.torus().distance(s, t);
    }
    const double mean = std::accumulate(hops.begin(), hops.end(), 0.0) / hops.size();
    rec.set("pairs", as_int(cfg.pairs));
    rec.set("delivered", as_int(delivered));
    rec.set("median_hops", median(hops));
    rec.set("mean_hops", mean);
    rec.set("max_hops", *std::max_element(hops.begin(), hops.end()));
    rec.set("mean_torus_distance", torus_sum / static_cast<double>(cfg.pairs));
    rec.set("hop_cap", as_int(cap));
    return rec;
  });
}

double wq_bound(int n, int ell, int q) {
  return static_cast<double>(n) * n * std::pow(40.0 * ell * ell, q);
}

std::vector<ExperimentRecord> run_wq_experiment(const SweepConfig& cfg) {
  return run_grid(cfg, [&cfg](const Cell& cell) {
    auto [g, rec] = instance(cfg, cell);
    const LPartition p = make_l_partition(cell.n, cfg.ell);
    rec.set("ell", std::int64_t{cfg.ell});
    rec.set("box_count", as_int(p.box_count()));
    for (int q = 1; q <= cfg.qmax; ++q) {
      rec.set("w_" + std::to_string(q),
              static_cast<std::int64_t>(enumerate_connected_boxsets(g, p, q)));
    }
    for (int q = 1; q <= cfg.qmax; ++q) {
      rec.set("bound_" + std::to_string(q), wq_bound(cell.n, cfg.ell, q));
    }
    return rec;
  });
}

std::vector<WqSummary> summarize_wq(const std::vector<ExperimentRecord>& records) {
  std::vector<WqSummary> out;
  for (const ExperimentRecord& rec : records) {
    if (rec.experiment != "wq") continue;
    for (int q = 1;; ++q) {
      const std::string key = "w_" + std::to_string(q);
      if (!rec.find(key)) break;
      auto it = std::find_if(out.begin(), out.end(), [&](const WqSummary& s) {
        return s.n == rec.n && s.r == rec.r && s.q == q;
      });
      if (it == out.end()) {
        out.push_back({rec.n, rec.r, q, 0, 0.0,
                       rec.number("bound_" + std::to_string(q))});
        it = out.end() - 1;
      }
      ++it->seeds;
      it->mean += rec.number(key);
    }
  }
  for (WqSummary& s : out) s.mean /= static_cast<double>(s.seeds);
  return out;
}

std::vector<ExperimentRecord> run_expansion_sweep(const SweepConfig& cfg) {
  return run_grid(cfg, [&cfg](const Cell& cell) {
    auto [g, rec] = instance(cfg, cell);
    const LPartition p = make_l_partition(cell.n, cfg.ell);
    const std::size_t count = g.vertex_count();
    Rng rng(hash_words({rec.seed, 0x657870616E64ULL}));
    std::uniform_real_distribution<double> alpha_dist(0.1, 0.5);
    std::vector<std::uint32_t> order(p.box_count());
    std::iota(order.begin(), order.end(), 0U);

    std::size_t passed = 0;
    bool boundary_ok = true;
    double m_hat = 0.0;
    double vexp_min = std::numeric_limits<double>::infinity();
    double vexp_first = 0.0;
    for (std::size_t i = 0; i < cfg.sets; ++i) {
      // Random box-like set: whole boxes in random order until alpha N.
      const double target = alpha_dist(rng) * static_cast<double>(count);
      std::shuffle(order.begin(), order.end(), rng);
      VertexSet s(count);
      for (std::uint32_t b : order) {
        if (static_cast<double>(s.size()) >= target) break;
        p.box_vertices(b).for_each([&](Vertex v) { s.insert(v); });
      }
      const double size = static_cast<double>(s.size());
      const double alpha = size / static_cast<double>(count);
      const std::size_t eb = edge_boundary_size(g, s);
      const std::size_t vb = vertex_boundary(g, s).size();
      boundary_ok = boundary_ok && eb >= vb;
      passed += is_expanding(g, s, cfg.expansion_epsilon, cfg.expansion_c).holds;
      m_hat = std::max(m_hat, (static_cast<double>(degree_sum(g, s)) -
                               static_cast<double>(eb)) / size);
      const double vexp = static_cast<double>(vb) * std::log(static_cast<double>(cell.n)) /
                          (size * std::log(1.0 / alpha));
      if (i == 0) vexp_first = vexp;
      vexp_min = std::min(vexp_min, vexp);
    }
    rec.set("ell", std::int64_t{cfg.ell});
    rec.set("sets", as_int(cfg.sets));
    rec.set("expanding_passed", as_int(passed));
    rec.set("expanding_fraction",
            static_cast<double>(passed) / static_cast<double>(cfg.sets));
    rec.set("m_hat", m_hat);
    rec.set("vexp_first", vexp_first);
    rec.set("vexp_min", vexp_min);
    rec.set("boundary_order_ok", std::int64_t{boundary_ok});
    return rec;
  });
}

std::vector<ExperimentRecord> run_experiment(const SweepConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::mix: return run_mixing_sweep(cfg);
    case Experiment::conductance: return run_conductance_sweep(cfg);
    case Experiment::diameter: return run_diameter_sweep(cfg);
    case Experiment::routing: return run_routing_sweep(cfg);
    case Experiment::wq: return run_wq_experiment(cfg);
    case Experiment::expansion: return run_expansion_sweep(cfg);
  }
  return {};
}

}  // namespace swg
