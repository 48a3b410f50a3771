#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "swg/errors.hpp"
#include "swg/graph.hpp"
#include "swg/harness.hpp"

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kCapacity = 3, kIo = 4 };

struct GridOptions {
  std::vector<int> n;
  std::vector<double> r;
  std::size_t seeds = 20;
  std::uint64_t seed_base = 1;
  std::string out;
  std::string format = "csv";
  std::size_t threads = 1;
};

void add_grid(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--n", g.n, "Torus radius; comma separated list")
      ->required()
      ->delimiter(',');
  cmd->add_option("--r", g.r, "Long-range exponent; comma separated list")
      ->required()
      ->delimiter(',');
  cmd->add_option("--seeds", g.seeds, "Replicates per (n, r) cell")
      ->capture_default_str();
  cmd->add_option("--seed-base", g.seed_base, "Base seed")->capture_default_str();
  cmd->add_option("--out", g.out, "Output file")->required();
  cmd->add_option("--format", g.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--threads", g.threads, "Worker threads (SWG_THREADS overrides)")
      ->capture_default_str();
}

swg::SweepConfig base_config(swg::Experiment e, const GridOptions& g) {
  swg::SweepConfig cfg;
  cfg.experiment = e;
  cfg.n_values = g.n;
  cfg.r_values = g.r;
  cfg.replicates = swg::replicate_range(g.seeds);
  cfg.seed_base = g.seed_base;
  cfg.out = g.out;
  cfg.format = swg::parse_format(g.format);
  cfg.threads = g.threads;
  return cfg;
}

void run_and_emit(const swg::SweepConfig& cfg) {
  cfg.validate();
  if (cfg.out.empty()) throw swg::DomainError("config needs an output path");
  auto records = swg::run_experiment(cfg);
  swg::emit(records, cfg.format, cfg.out, swg::make_manifest(cfg, records.size()));
  std::cerr << records.size() << " records written to " << cfg.out.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-world torus graphs: sampling, mixing and expansion experiments"};
  app.require_subcommand(1);

  swg::ModelParams gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Sample one graph and write it");
  generate->add_option("--n", gen.n, "Torus radius")->required();
  generate->add_option("--r", gen.r, "Long-range exponent")->required();
  generate->add_option("--seed", gen.seed, "Sampler seed")->required();
  generate->add_option("--out", gen_out, "Output graph file")->required();

  GridOptions mix_grid;
  std::string starts = "auto";
  double epsilon = 0.25;
  auto* mix = app.add_subcommand("mix", "Mixing time sweep");
  add_grid(mix, mix_grid);
  mix->add_option("--starts", starts, "Start policy")
      ->check(CLI::IsMember({"all", "heuristic", "auto"}))
      ->capture_default_str();
  mix->add_option("--epsilon", epsilon, "TV threshold")->capture_default_str();

  GridOptions cond_grid;
  double ball_frac = 0.9;
  bool no_sweep = false;
  auto* cond = app.add_subcommand("conductance", "Ball and sweep-cut conductance");
  add_grid(cond, cond_grid);
  cond->add_option("--ball-frac", ball_frac, "Ball radius as a fraction of n")
      ->capture_default_str();
  cond->add_flag("--no-sweep-cut", no_sweep, "Skip the spectral sweep cut");

  GridOptions wq_grid;
  int ell = 2;
  int qmax = 3;
  auto* wq = app.add_subcommand("wq", "Connected box-set counts");
  add_grid(wq, wq_grid);
  wq->add_option("--ell", ell, "Partition scale")->capture_default_str();
  wq->add_option("--qmax", qmax, "Largest box-set size")->capture_default_str();

  GridOptions route_grid;
  std::size_t pairs = 1000;
  std::size_t hop_cap = 0;
  auto* route = app.add_subcommand("route", "Greedy routing");
  add_grid(route, route_grid);
  route->add_option("--pairs", pairs, "Random pairs per instance")->capture_default_str();
  route->add_option("--hop-cap", hop_cap, "Hop cap; 0 means 10 N")->capture_default_str();

  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "Run a sweep from a config file");
  sweep->add_option("--config", config_path, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (generate->parsed()) {
      auto g = swg::sample_graph(gen);
      swg::save_graph(g, gen_out);
      std::cerr << "N=" << g.vertex_count() << " edges=" << g.edge_count()
                << " long_range=" << g.long_range_edges().size() << '\n';
    } else if (mix->parsed()) {
      auto cfg = base_config(swg::Experiment::mix, mix_grid);
      cfg.starts = swg::parse_start_policy(starts);
      cfg.epsilon = epsilon;
      run_and_emit(cfg);
    } else if (cond->parsed()) {
      auto cfg = base_config(swg::Experiment::conductance, cond_grid);
      cfg.ball_frac = ball_frac;
      cfg.sweep_cut = !no_sweep;
      run_and_emit(cfg);
    } else if (wq->parsed()) {
      auto cfg = base_config(swg::Experiment::wq, wq_grid);
      cfg.ell = ell;
      cfg.qmax = qmax;
      run_and_emit(cfg);
    } else if (route->parsed()) {
      auto cfg = base_config(swg::Experiment::routing, route_grid);
      cfg.pairs = pairs;
      cfg.hop_cap = hop_cap;
      run_and_emit(cfg);
    } else if (sweep->parsed()) {
      run_and_emit(swg::load_config(config_path));
    }
  } catch (const swg::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const swg::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const swg::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const swg::DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
