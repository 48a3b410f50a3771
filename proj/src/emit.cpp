#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <json.hpp>
#include <sstream>
#include <string>

#include "numfmt.hpp"
#include "swg/errors.hpp"
#include "swg/harness.hpp"
#include "swg/rng.hpp"

namespace swg {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kCoreColumns[] = {"experiment", "version", "n",
                                        "r",          "replicate", "seed",
                                        "N",          "edge_count", "Z"};

// Doubles always carry a '.', exponent, or inf/nan marker so the column type
// survives a text round trip.
std::string format_double_cell(double v) {
  std::string s = detail::format_real(v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell(const FieldValue& v) {
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (auto d = std::get_if<double>(&v)) return format_double_cell(*d);
  return quote(std::get<std::string>(v));
}

std::vector<std::string> extra_columns(const std::vector<ExperimentRecord>& records) {
  std::vector<std::string> cols;
  for (const auto& rec : records) {
    for (const auto& [k, v] : rec.fields) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

std::vector<std::string> split_csv(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = was_quoted = true;
    } else if (c == ',') {
      out.push_back(was_quoted ? "\"" + cur : cur);
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote", line_no);
  out.push_back(was_quoted ? "\"" + cur : cur);
  return out;
}

// Cells arrive with a leading '"' marker when they were quoted.
FieldValue parse_cell(const std::string& text, std::size_t line_no) {
  if (!text.empty() && text[0] == '"') return text.substr(1);
  if (text.find_first_of(".eEn") != std::string::npos) {
    if (auto d = detail::parse_number<double>(text)) return *d;
  } else if (auto i = detail::parse_number<std::int64_t>(text)) {
    return *i;
  }
  throw ParseError("malformed cell '" + text + "'", line_no);
}

template <class T>
T core_number(const std::string& text, const char* name, std::size_t line_no) {
  auto v = detail::parse_number<T>(text);
  if (!v) throw ParseError(std::string("malformed ") + name, line_no);
  return *v;
}

std::string strip_quote(const std::string& s) {
  return !s.empty() && s[0] == '"' ? s.substr(1) : s;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Manifest make_manifest(const SweepConfig& cfg, std::size_t records) {
  const std::string text = cfg.canonical_text();
  std::uint64_t h = 0x6D616E6966657374ULL;
  for (std::size_t i = 0; i < text.size(); i += 8) {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < 8 && i + j < text.size(); ++j) {
      word |= static_cast<std::uint64_t>(static_cast<unsigned char>(text[i + j])) << (8 * j);
    }
    h = splitmix64(h ^ word);
  }
  Manifest m;
  m.experiment = std::string(to_string(cfg.experiment));
  m.config_hash = hex64(h);
  m.seed_base = cfg.seed_base;
  m.records = records;
  return m;
}

void write_csv(const std::vector<ExperimentRecord>& records,
               const Manifest& manifest, std::ostream& out) {
  const auto extra = extra_columns(records);
  std::string header;
  for (const char* c : kCoreColumns) header += std::string(header.empty() ? "" : ",") + c;
  for (const auto& c : extra) header += "," + c;
  out << header << '\n';
  for (const auto& rec : records) {
    out << rec.experiment << ',' << rec.version << ',' << rec.n << ','
        << format_double_cell(rec.r) << ',' << rec.replicate << ',' << rec.seed
        << ',' << rec.vertex_count << ',' << rec.edge_count << ','
        << format_double_cell(rec.Z);
    for (const auto& c : extra) {
      out << ',';
      if (const FieldValue* v = rec.find(c)) out << cell(*v);
    }
    out << '\n';
  }
  out << "# manifest experiment=" << manifest.experiment
      << " version=" << manifest.version << " config_hash=" << manifest.config_hash
      << " seed_base=" << manifest.seed_base << " records=" << manifest.records
      << '\n';
}

ParsedOutput parse_csv(std::istream& in) {
  ParsedOutput parsed;
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing header", line_no);
  const auto header = split_csv(line, line_no);
  constexpr std::size_t kCore = std::size(kCoreColumns);
  if (header.size() < kCore) throw ParseError("header lacks core columns", line_no);
  for (std::size_t i = 0; i < kCore; ++i) {
    if (header[i] != kCoreColumns[i]) throw ParseError("unexpected core column", line_no);
  }
  bool have_manifest = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("# manifest", 0) == 0) {
      std::istringstream kv(line.substr(10));
      std::string item;
      while (kv >> item) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("malformed manifest", line_no);
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "experiment") parsed.manifest.experiment = value;
        else if (key == "version") parsed.manifest.version = value;
        else if (key == "config_hash") parsed.manifest.config_hash = value;
        else if (key == "seed_base") parsed.manifest.seed_base = core_number<std::uint64_t>(value, "seed_base", line_no);
        else if (key == "records") parsed.manifest.records = core_number<std::size_t>(value, "records", line_no);
      }
      have_manifest = true;
      continue;
    }
    const auto cells = split_csv(line, line_no);
    if (cells.size() != header.size()) throw ParseError("column count mismatch", line_no);
    ExperimentRecord rec;
    rec.experiment = strip_quote(cells[0]);
    rec.version = strip_quote(cells[1]);
    rec.n = core_number<int>(cells[2], "n", line_no);
    rec.r = core_number<double>(cells[3], "r", line_no);
    rec.replicate = core_number<std::uint64_t>(cells[4], "replicate", line_no);
    rec.seed = core_number<std::uint64_t>(cells[5], "seed", line_no);
    rec.vertex_count = core_number<std::uint64_t>(cells[6], "N", line_no);
    rec.edge_count = core_number<std::uint64_t>(cells[7], "edge_count", line_no);
    rec.Z = core_number<double>(cells[8], "Z", line_no);
    for (std::size_t i = kCore; i < header.size(); ++i) {
      if (cells[i].empty()) continue;
      rec.fields.emplace_back(header[i], parse_cell(cells[i], line_no));
    }
    parsed.records.push_back(std::move(rec));
  }
  if (!have_manifest) throw ParseError("missing manifest line", line_no);
  return parsed;
}

void write_json(const std::vector<ExperimentRecord>& records,
                const Manifest& manifest, std::ostream& out) {
  ordered_json arr = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json obj;
    obj["experiment"] = rec.experiment;
    obj["version"] = rec.version;
    obj["n"] = rec.n;
    obj["r"] = rec.r;
    obj["replicate"] = rec.replicate;
    obj["seed"] = rec.seed;
    obj["N"] = rec.vertex_count;
    obj["edge_count"] = rec.edge_count;
    obj["Z"] = rec.Z;
    for (const auto& [k, v] : rec.fields) {
      std::visit([&obj, &k](const auto& x) { obj[k] = x; }, v);
    }
    arr.push_back(std::move(obj));
  }
  ordered_json m;
  m["experiment"] = manifest.experiment;
  m["version"] = manifest.version;
  m["config_hash"] = manifest.config_hash;
  m["seed_base"] = manifest.seed_base;
  m["records"] = manifest.records;
  arr.push_back(ordered_json{{"manifest", m}});
  out << arr.dump(1) << '\n';
}

ParsedOutput parse_json(std::istream& in) {
  ordered_json arr;
  try {
    arr = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  if (!arr.is_array() || arr.empty() || !arr.back().contains("manifest")) {
    throw ParseError("expected an array ending in a manifest object", 0);
  }
  ParsedOutput parsed;
  try {
    const auto& m = arr.back()["manifest"];
    parsed.manifest.experiment = m.at("experiment").get<std::string>();
    parsed.manifest.version = m.at("version").get<std::string>();
    parsed.manifest.config_hash = m.at("config_hash").get<std::string>();
    parsed.manifest.seed_base = m.at("seed_base").get<std::uint64_t>();
    parsed.manifest.records = m.at("records").get<std::size_t>();
    for (std::size_t i = 0; i + 1 < arr.size(); ++i) {
      const auto& obj = arr[i];
      ExperimentRecord rec;
      rec.experiment = obj.at("experiment").get<std::string>();
      rec.version = obj.at("version").get<std::string>();
      rec.n = obj.at("n").get<int>();
      rec.r = obj.at("r").get<double>();
      rec.replicate = obj.at("replicate").get<std::uint64_t>();
      rec.seed = obj.at("seed").get<std::uint64_t>();
      rec.vertex_count = obj.at("N").get<std::uint64_t>();
      rec.edge_count = obj.at("edge_count").get<std::uint64_t>();
      rec.Z = obj.at("Z").get<double>();
      std::size_t idx = 0;
      for (const auto& [k, v] : obj.items()) {
        if (idx++ < std::size(kCoreColumns)) continue;
        if (v.is_number_float()) {
          rec.fields.emplace_back(k, v.get<double>());
        } else if (v.is_number_integer()) {
          rec.fields.emplace_back(k, v.get<std::int64_t>());
        } else if (v.is_string()) {
          rec.fields.emplace_back(k, v.get<std::string>());
        } else if (v.is_null()) {
          rec.fields.emplace_back(k, std::numeric_limits<double>::quiet_NaN());
        } else {
          throw ParseError("unsupported value for '" + k + "'", i + 1);
        }
      }
      parsed.records.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  return parsed;
}

void emit(const std::vector<ExperimentRecord>& records, OutputFormat format,
          const std::filesystem::path& path, const Manifest& manifest) {
  if (records.empty()) throw DomainError("emit needs at least one record");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  if (format == OutputFormat::csv) {
    write_csv(records, manifest, out);
  } else {
    write_json(records, manifest, out);
  }
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace swg
