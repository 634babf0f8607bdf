#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adnrg/lattice.hpp"

namespace adnrg {

enum class ExperimentId { HL, COMPRESS, DOWNSET, SHIFT, PROPZD, SMALLE, HY, SUPERADD, CONVERGE, CARRIES };

/// Every registered experiment, in registry order.
const std::vector<ExperimentId>& all_experiments();
std::string to_string(ExperimentId id);
/// Throws UnknownExperiment.
ExperimentId parse_experiment(const std::string& name);

struct ExperimentConfig {
  ExperimentId experiment = ExperimentId::HL;
  std::uint64_t seed = 1;
  /// 0 selects the experiment's own default.
  std::size_t trials = 0;
  /// Random sets have between 1 and max_points points.
  std::size_t max_points = 40;
  /// Random boxes have half-widths between 1 and this.
  Coord max_half_width = 4;
  /// HL enumerates odd subsets of [-u, u].
  Coord hl_universe = 3;
  /// Bound on the measured constant for SHIFT and PROPZD.
  double sentinel = 100.0;
  std::uint64_t mc_samples = 10'000'000;
  /// 0 selects the ball module default.
  double tolerance = 0.0;
  std::string output;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  bool operator==(const ExperimentConfig&) const = default;
};

std::size_t default_trials(ExperimentId id);

struct TrialRecord {
  std::string inequality;
  std::size_t trial = 0;
  std::string label;
  std::string inputs_hash;
  std::string lhs;
  std::string rhs;
  std::string margin;  ///< rhs - lhs, nonnegative on pass
  bool pass = false;
  /// Null on pass; on failure the full input needed to recompute the verdict.
  nlohmann::json counterexample;

  bool operator==(const TrialRecord&) const = default;
};

struct VerifyReport {
  ExperimentConfig config;
  bool pass = false;
  std::vector<TrialRecord> records;
  /// Experiment-specific summary values (measured constants, tables).
  nlohmann::json measured = nlohmann::json::object();
  double wall_ms = 0.0;
};

/// Throws UnknownExperiment (via the config) or BudgetExceeded.
VerifyReport run_experiment(const ExperimentConfig& cfg);

/// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string inputs_hash(const nlohmann::json& inputs);

enum class ReportFormat { Json, Markdown, Csv };
ReportFormat parse_format(const std::string& name);

const char* library_version();

/// Deterministic rendering: sorted keys, 12 significant digits, counts as strings. Wall time
/// is left out so equal configs give byte-identical output.
std::string render_report(const VerifyReport& report, ReportFormat format);
/// Throws Io with the path on failure.
void emit_report(const VerifyReport& report, ReportFormat format, const std::filesystem::path& path);

/// Reads the records back from render_report(..., Csv). Counterexamples are not part of the
/// CSV table.
std::vector<TrialRecord> parse_csv_records(std::istream& in);

}  // namespace adnrg
