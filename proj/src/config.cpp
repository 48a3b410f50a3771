#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "numfmt.hpp"
#include "swg/errors.hpp"
#include "swg/harness.hpp"

namespace swg {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
T number(std::string_view text, std::size_t line) {
  auto v = detail::parse_number<T>(text);
  if (!v) throw ParseError("malformed number '" + std::string(text) + "'", line);
  return *v;
}

template <class T>
std::vector<T> numbers(std::string_view text, std::size_t line) {
  std::vector<T> out;
  for (auto item : split_list(text)) out.push_back(number<T>(item, line));
  return out;
}

bool boolean(std::string_view text, std::size_t line) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError("expected a boolean, got '" + std::string(text) + "'", line);
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += detail::format_real(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

}  // namespace

SweepConfig parse_config(std::istream& in) {
  SweepConfig cfg;
  std::string raw;
  std::size_t line = 0;
  bool have_seeds = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", line);
    const std::string key(trim(text.substr(0, eq)));
    const std::string_view value = trim(text.substr(eq + 1));
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line);
    try {
      if (key == "experiment") {
        cfg.experiment = parse_experiment(value);
      } else if (key == "n") {
        cfg.n_values = numbers<int>(value, line);
      } else if (key == "r") {
        cfg.r_values = numbers<double>(value, line);
      } else if (key == "seeds") {
        cfg.replicates = replicate_range(number<std::size_t>(value, line));
        have_seeds = true;
      } else if (key == "replicates") {
        cfg.replicates = numbers<std::uint64_t>(value, line);
        have_seeds = true;
      } else if (key == "seed_base") {
        cfg.seed_base = number<std::uint64_t>(value, line);
      } else if (key == "out") {
        cfg.out = std::string(value);
      } else if (key == "format") {
        cfg.format = parse_format(value);
      } else if (key == "threads") {
        cfg.threads = number<std::size_t>(value, line);
      } else if (key == "starts") {
        cfg.starts = parse_start_policy(value);
      } else if (key == "epsilon") {
        cfg.epsilon = number<double>(value, line);
      } else if (key == "random_starts") {
        cfg.random_starts = number<std::size_t>(value, line);
      } else if (key == "ball_frac") {
        cfg.ball_frac = number<double>(value, line);
      } else if (key == "sweep_cut") {
        cfg.sweep_cut = boolean(value, line);
      } else if (key == "ell") {
        cfg.ell = number<int>(value, line);
      } else if (key == "qmax") {
        cfg.qmax = number<int>(value, line);
      } else if (key == "pairs") {
        cfg.pairs = number<std::size_t>(value, line);
      } else if (key == "hop_cap") {
        cfg.hop_cap = number<std::size_t>(value, line);
      } else if (key == "sets") {
        cfg.sets = number<std::size_t>(value, line);
      } else if (key == "expansion_epsilon") {
        cfg.expansion_epsilon = number<double>(value, line);
      } else if (key == "expansion_c") {
        cfg.expansion_c = number<double>(value, line);
      } else {
        throw ParseError("unknown key '" + key + "'", line);
      }
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line);
    }
  }
  if (!have_seeds) throw ParseError("config must set 'seeds' or 'replicates'", line);
  return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  return parse_config(in);
}

std::string SweepConfig::canonical_text() const {
  // Output path and worker count do not influence results and are left out.
  std::map<std::string, std::string> kv;
  kv["experiment"] = std::string(to_string(experiment));
  kv["n"] = join(n_values);
  kv["r"] = join(r_values);
  kv["replicates"] = join(replicates);
  kv["seed_base"] = std::to_string(seed_base);
  kv["format"] = format == OutputFormat::csv ? "csv" : "json";
  switch (experiment) {
    case Experiment::mix:
      kv["starts"] = std::string(to_string(starts));
      kv["epsilon"] = detail::format_real(epsilon);
      kv["random_starts"] = std::to_string(random_starts);
      break;
    case Experiment::conductance:
      kv["ball_frac"] = detail::format_real(ball_frac);
      kv["sweep_cut"] = sweep_cut ? "true" : "false";
      break;
    case Experiment::wq:
      kv["ell"] = std::to_string(ell);
      kv["qmax"] = std::to_string(qmax);
      break;
    case Experiment::routing:
      kv["pairs"] = std::to_string(pairs);
      kv["hop_cap"] = std::to_string(hop_cap);
      break;
    case Experiment::expansion:
      kv["ell"] = std::to_string(ell);
      kv["sets"] = std::to_string(sets);
      kv["expansion_epsilon"] = detail::format_real(expansion_epsilon);
      kv["expansion_c"] = detail::format_real(expansion_c);
      break;
    case Experiment::diameter:
      break;
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

}  // namespace swg
