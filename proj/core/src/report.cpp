#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "adnrg/error.hpp"
#include "adnrg/numeric.hpp"
#include "adnrg/verify.hpp"

#ifndef ADNRG_VERSION
#define ADNRG_VERSION "0.0.0"
#endif

namespace adnrg {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kCsvHeader{"inequality", "trial", "label", "inputs_hash",
                                          "lhs",        "rhs",   "margin", "pass"};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Splits one CSV line; quoted fields may contain commas and doubled quotes.
std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::Parse, "unterminated quote in CSV line");
  return out;
}

json record_json(const TrialRecord& r) {
  json j{{"inequality", r.inequality}, {"trial", r.trial},   {"label", r.label},
         {"inputs_hash", r.inputs_hash}, {"lhs", r.lhs},     {"rhs", r.rhs},
         {"margin", r.margin},           {"pass", r.pass}};
  if (!r.pass) j["counterexample"] = r.counterexample;
  return j;
}

std::string render_json(const VerifyReport& report) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  const json doc{{"experiment", to_string(report.config.experiment)},
                 {"pass", report.pass},
                 {"config", report.config.to_json()},
                 {"environment",
                  {{"version", library_version()}, {"seed", std::to_string(report.config.seed)}}},
                 {"measured", report.measured},
                 {"records", records}};
  return doc.dump(2) + "\n";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void render_measured_md(std::ostream& out, const json& measured) {
  if (measured.empty()) return;
  out << "\n## Measured\n\n";
  for (const auto& [key, value] : measured.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << "### " << key << "\n\n";
      std::vector<std::string> cols;
      for (const auto& [col, v] : value.front().items()) cols.push_back(col);
      out << "|";
      for (const auto& c : cols) out << " " << c << " |";
      out << "\n|";
      for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : value) {
        out << "|";
        for (const auto& c : cols) {
          out << " " << md_cell(row.contains(c) ? row[c].get<std::string>() : "") << " |";
        }
        out << "\n";
      }
      out << "\n";
    } else {
      out << "- " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

std::string render_markdown(const VerifyReport& report) {
  std::ostringstream out;
  out << "# " << to_string(report.config.experiment) << "\n\n";
  out << "- verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  out << "- version: " << library_version() << "\n";
  out << "- seed: " << report.config.seed << "\n";
  out << "- records: " << report.records.size() << "\n";

  std::vector<std::string> order;
  for (const auto& r : report.records) {
    if (std::find(order.begin(), order.end(), r.inequality) == order.end()) {
      order.push_back(r.inequality);
    }
  }
  for (const auto& inequality : order) {
    out << "\n## " << inequality << "\n\n";
    out << "| trial | label | inputs | LHS | RHS | margin | pass |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : report.records) {
      if (r.inequality != inequality) continue;
      out << "| " << r.trial << " | " << md_cell(r.label) << " | " << r.inputs_hash << " | "
          << r.lhs << " | " << r.rhs << " | " << r.margin << " | " << (r.pass ? "yes" : "NO")
          << " |\n";
    }
  }
  render_measured_md(out, report.measured);
  return out.str();
}

std::string render_csv(const VerifyReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < kCsvHeader.size(); ++i) out << (i ? "," : "") << kCsvHeader[i];
  out << "\n";
  for (const auto& r : report.records) {
    out << csv_field(r.inequality) << ',' << r.trial << ',' << csv_field(r.label) << ','
        << r.inputs_hash << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
        << csv_field(r.margin) << ',' << (r.pass ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace

const char* library_version() { return ADNRG_VERSION; }

std::string inputs_hash(const json& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json ExperimentConfig::to_json() const {
  return json{{"experiment", adnrg::to_string(experiment)},
              {"seed", seed},
              {"trials", trials},
              {"max_points", max_points},
              {"max_half_width", max_half_width},
              {"hl_universe", hl_universe},
              {"sentinel", sentinel},
              {"mc_samples", mc_samples},
              {"tolerance", tolerance},
              {"output", output}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  if (!j.is_object()) throw Error(ErrorCode::Parse, "experiment config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") c.experiment = parse_experiment(value.get<std::string>());
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "trials") c.trials = value.get<std::size_t>();
      else if (key == "max_points") c.max_points = value.get<std::size_t>();
      else if (key == "max_half_width") c.max_half_width = value.get<Coord>();
      else if (key == "hl_universe") c.hl_universe = value.get<Coord>();
      else if (key == "sentinel") c.sentinel = value.get<double>();
      else if (key == "mc_samples") c.mc_samples = value.get<std::uint64_t>();
      else if (key == "tolerance") c.tolerance = value.get<double>();
      else if (key == "output") c.output = value.get<std::string>();
      else throw Error(ErrorCode::Parse, "unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("experiment config: ") + e.what());
  }
  return c;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown report format '" + name + "'");
}

std::string render_report(const VerifyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Markdown: return render_markdown(report);
    case ReportFormat::Csv: return render_csv(report);
  }
  return {};
}

void emit_report(const VerifyReport& report, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << render_report(report, format);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

std::vector<TrialRecord> parse_csv_records(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || csv_split(line) != kCsvHeader) {
    throw Error(ErrorCode::Parse, "CSV header mismatch");
  }
  std::vector<TrialRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = csv_split(line);
    if (f.size() != kCsvHeader.size() || (f[7] != "true" && f[7] != "false")) {
      throw Error(ErrorCode::Parse, "CSV line " + std::to_string(line_no) + " is malformed");
    }
    TrialRecord r;
    r.inequality = f[0];
    try {
      r.trial = std::stoull(f[1]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "CSV line " + std::to_string(line_no) + ": bad trial index");
    }
    r.label = f[2];
    r.inputs_hash = f[3];
    r.lhs = f[4];
    r.rhs = f[5];
    r.margin = f[6];
    r.pass = f[7] == "true";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace adnrg
