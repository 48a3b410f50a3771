#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "swg/graph.hpp"

namespace swg {

inline constexpr std::string_view kVersionTag = "swg-1.0.0";

// Largest graph on which mixing times are computed over every start.
inline constexpr std::size_t kExactMixingCap = 400;

enum class Experiment { mix, conductance, diameter, routing, wq, expansion };
enum class StartPolicy {
  all,        // every vertex; exact T_mix, capacity-limited
  heuristic,  // extremal vertices plus random ones; a lower estimate
  automatic,  // all when N <= kExactMixingCap, heuristic otherwise
};
enum class OutputFormat { csv, json };

std::string_view to_string(Experiment e);
std::string_view to_string(StartPolicy p);
Experiment parse_experiment(std::string_view text);
StartPolicy parse_start_policy(std::string_view text);
OutputFormat parse_format(std::string_view text);

struct SweepConfig {
  Experiment experiment = Experiment::mix;
  std::vector<int> n_values;
  std::vector<double> r_values;
  // Replicate indices; the instance seed of cell (n, r, i) is
  // instance_seed(seed_base, n, r, i).
  std::vector<std::uint64_t> replicates;
  std::uint64_t seed_base = 1;
  std::filesystem::path out;
  OutputFormat format = OutputFormat::csv;
  std::size_t threads = 1;

  // mix
  StartPolicy starts = StartPolicy::automatic;
  double epsilon = 0.25;
  std::size_t random_starts = 32;
  // conductance
  double ball_frac = 0.9;
  bool sweep_cut = true;
  // wq and expansion
  int ell = 2;
  int qmax = 3;
  // routing
  std::size_t pairs = 1000;
  std::size_t hop_cap = 0;  // 0: 10 N
  // expansion
  std::size_t sets = 50;
  double expansion_epsilon = 0.1;
  double expansion_c = 0.05;

  // Throws DomainError on empty grids or invalid values, CapacityError on
  // exact requests the library cannot serve.
  void validate() const;
  // Canonical key=value text; its hash goes into the output manifest.
  std::string canonical_text() const;
};

std::vector<std::uint64_t> replicate_range(std::size_t count);

// Flat key = value text, '#' comments. Throws ParseError with line numbers.
SweepConfig parse_config(std::istream& in);
SweepConfig load_config(const std::filesystem::path& path);

// Worker count: SWG_THREADS when set, else the configured value.
std::size_t effective_threads(const SweepConfig& cfg);

using FieldValue = std::variant<std::int64_t, double, std::string>;

struct ExperimentRecord {
  std::string experiment;
  std::string version{kVersionTag};
  int n = 0;
  double r = 0.0;
  std::uint64_t replicate = 0;
  std::uint64_t seed = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  double Z = 0.0;
  // Experiment-specific columns in emission order.
  std::vector<std::pair<std::string, FieldValue>> fields;

  void set(std::string name, FieldValue value);
  const FieldValue* find(std::string_view name) const;
  // Numeric field as double; throws DomainError when absent or a string.
  double number(std::string_view name) const;

  friend bool operator==(const ExperimentRecord&,
                         const ExperimentRecord&) = default;
};

struct RoutingResult {
  Vertex source = 0;
  Vertex target = 0;
  std::size_t hops = 0;
  bool delivered = false;
};

// Greedy decentralised routing: step to the neighbour closest to the target
// in torus distance, smallest index on ties, until delivered or hop_cap.
RoutingResult greedy_route(const SmallWorldGraph& g, Vertex source,
                           Vertex target, std::size_t hop_cap);

std::vector<ExperimentRecord> run_mixing_sweep(const SweepConfig& cfg);
std::vector<ExperimentRecord> run_conductance_sweep(const SweepConfig& cfg);
std::vector<ExperimentRecord> run_diameter_sweep(const SweepConfig& cfg);
std::vector<ExperimentRecord> run_routing_sweep(const SweepConfig& cfg);
std::vector<ExperimentRecord> run_wq_experiment(const SweepConfig& cfg);
std::vector<ExperimentRecord> run_expansion_sweep(const SweepConfig& cfg);
std::vector<ExperimentRecord> run_experiment(const SweepConfig& cfg);

// n^2 (40 ell^2)^q.
double wq_bound(int n, int ell, int q);

struct WqSummary {
  int n = 0;
  double r = 0.0;
  int q = 0;
  std::size_t seeds = 0;
  double mean = 0.0;
  double bound = 0.0;
};
std::vector<WqSummary> summarize_wq(const std::vector<ExperimentRecord>& records);

struct Manifest {
  std::string experiment;
  std::string version{kVersionTag};
  std::string config_hash;
  std::uint64_t seed_base = 0;
  std::size_t records = 0;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

Manifest make_manifest(const SweepConfig& cfg, std::size_t records);

void write_csv(const std::vector<ExperimentRecord>& records,
               const Manifest& manifest, std::ostream& out);
void write_json(const std::vector<ExperimentRecord>& records,
                const Manifest& manifest, std::ostream& out);

struct ParsedOutput {
  std::vector<ExperimentRecord> records;
  Manifest manifest;
};
ParsedOutput parse_csv(std::istream& in);
ParsedOutput parse_json(std::istream& in);

// Throws DomainError (and creates nothing) for an empty record list, IoError
// on write failure.
void emit(const std::vector<ExperimentRecord>& records, OutputFormat format,
          const std::filesystem::path& path, const Manifest& manifest);

}  // namespace swg
