#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "adnrg/compression.hpp"
#include "adnrg/energy.hpp"
#include "adnrg/error.hpp"
#include "adnrg/lattice_io.hpp"
#include "adnrg/sampling.hpp"
#include "adnrg/verify.hpp"

using namespace adnrg;

namespace {

ExperimentConfig quick(ExperimentId id, std::size_t trials = 0) {
  ExperimentConfig cfg;
  cfg.experiment = id;
  cfg.trials = trials;
  cfg.seed = 7;
  cfg.mc_samples = 200'000;
  return cfg;
}

}  // namespace

TEST(Registry, CoversEveryCheckedInequality) {
  const std::set<std::string> expected{"HL",     "COMPRESS", "DOWNSET", "SHIFT",    "PROPZD",
                                       "SMALLE", "HY",       "SUPERADD", "CONVERGE", "CARRIES"};
  std::set<std::string> registered;
  for (ExperimentId id : all_experiments()) {
    registered.insert(to_string(id));
    EXPECT_EQ(parse_experiment(to_string(id)), id);
  }
  EXPECT_EQ(registered, expected);
  EXPECT_EQ(parse_experiment("compress"), ExperimentId::COMPRESS);
  try {
    parse_experiment("NOPE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownExperiment);
  }
}

TEST(ExperimentConfig, JsonRoundTrip) {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentId::PROPZD;
  cfg.seed = 0xFFFFFFFFFFFFFFFFULL;
  cfg.trials = 12;
  cfg.max_points = 17;
  cfg.max_half_width = 3;
  cfg.hl_universe = 2;
  cfg.sentinel = 12.5;
  cfg.mc_samples = 1234;
  cfg.tolerance = 1e-10;
  cfg.output = "out.json";
  const auto text = cfg.to_json().dump();
  EXPECT_EQ(ExperimentConfig::from_json(nlohmann::json::parse(text)), cfg);
  EXPECT_EQ(ExperimentConfig::from_json(nlohmann::json::object()), ExperimentConfig{});
  EXPECT_THROW(ExperimentConfig::from_json(nlohmann::json{{"bogus", 1}}), Error);
}

TEST(Sampling, SubsetsAreUniformAndInsideTheBox) {
  std::mt19937_64 rng(derive_seed(3, 4));
  const BoxShape box({2, 1});
  std::vector<int> hits(15, 0);
  for (int t = 0; t < 3000; ++t) {
    const LatticeSet s = random_subset(box, 5, rng);
    ASSERT_EQ(s.size(), 5u);
    ASSERT_TRUE(box.contains(s));
    for (std::size_t i = 0; i < s.size(); ++i) ++hits[(s[i][0] + 2) * 3 + (s[i][1] + 1)];
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 150);
  EXPECT_EQ(random_subset(box, 15, rng).size(), 15u);
  EXPECT_THROW(random_subset(box, 16, rng), Error);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Experiments, QuickRunsPass) {
  for (ExperimentId id : {ExperimentId::COMPRESS, ExperimentId::DOWNSET, ExperimentId::SHIFT,
                          ExperimentId::PROPZD, ExperimentId::SMALLE, ExperimentId::SUPERADD}) {
    const VerifyReport r = run_experiment(quick(id, 25));
    EXPECT_TRUE(r.pass) << to_string(id);
    EXPECT_FALSE(r.records.empty());
  }
  EXPECT_TRUE(run_experiment(quick(ExperimentId::CARRIES)).pass);
  ExperimentConfig hl = quick(ExperimentId::HL);
  hl.hl_universe = 2;
  const VerifyReport r = run_experiment(hl);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.measured["odd_subsets"], "16");
}

TEST(Experiments, BudgetAndArgumentErrors) {
  ExperimentConfig hl = quick(ExperimentId::HL);
  hl.hl_universe = 5;
  try {
    run_experiment(hl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  ExperimentConfig bad = quick(ExperimentId::COMPRESS, 3);
  bad.max_half_width = 0;
  EXPECT_THROW(run_experiment(bad), Error);
}

TEST(Experiments, FailureCarriesAReproducingCounterexample) {
  // a zero sentinel turns every positive shift deficit into a reported violation
  ExperimentConfig cfg = quick(ExperimentId::SHIFT, 30);
  cfg.sentinel = 0.0;
  const VerifyReport r = run_experiment(cfg);
  ASSERT_FALSE(r.pass);
  std::size_t failures = 0;
  for (const auto& rec : r.records) {
    if (rec.pass) {
      EXPECT_TRUE(rec.counterexample.is_null());
      continue;
    }
    ++failures;
    const auto& dump = rec.counterexample;
    EXPECT_EQ(inputs_hash(dump), rec.inputs_hash);
    std::vector<LatticeSet> sets;
    for (const auto& s : dump["sets"]) sets.push_back(set_from_json(s));
    const BoxShape box(dump["box"].get<std::vector<Coord>>());
    const Point shift(dump["shift"].get<std::vector<Coord>>());
    const ShiftStabilityReport again = downset_shift_stability(sets, box, shift);
    EXPECT_EQ(to_string(again.deficit), rec.lhs);
    EXPECT_GT(again.ratio, 0.0);
  }
  EXPECT_GT(failures, 0u);
}

TEST(Report, JsonIsByteIdenticalAcrossRunsAndWorkerCounts) {
  const ExperimentConfig cfg = quick(ExperimentId::COMPRESS, 40);
  setenv("ADNRG_THREADS", "1", 1);
  const std::string one = render_report(run_experiment(cfg), ReportFormat::Json);
  setenv("ADNRG_THREADS", "3", 1);
  const std::string three = render_report(run_experiment(cfg), ReportFormat::Json);
  unsetenv("ADNRG_THREADS");
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, render_report(run_experiment(cfg), ReportFormat::Json));
  EXPECT_EQ(one.find("wall"), std::string::npos);

  const auto doc = nlohmann::json::parse(one);
  EXPECT_EQ(doc["experiment"], "COMPRESS");
  EXPECT_EQ(doc["environment"]["version"], library_version());
  EXPECT_EQ(doc["environment"]["seed"], "7");
  EXPECT_TRUE(doc["records"][0]["lhs"].is_string());
}

TEST(Report, MarkdownHasOneTablePerInequality) {
  const VerifyReport r = run_experiment(quick(ExperimentId::DOWNSET, 5));
  const std::string md = render_report(r, ReportFormat::Markdown);
  std::set<std::string> inequalities;
  for (const auto& rec : r.records) inequalities.insert(rec.inequality);
  EXPECT_EQ(inequalities.size(), 3u);
  std::size_t tables = 0;
  for (std::size_t pos = 0; (pos = md.find("| trial | label | inputs | LHS | RHS |", pos)) != std::string::npos; ++pos) {
    ++tables;
  }
  EXPECT_EQ(tables, inequalities.size());
  for (const auto& name : inequalities) EXPECT_NE(md.find("## " + name), std::string::npos);
}

TEST(Report, CsvLoadsBackToTheSameValues) {
  const VerifyReport r = run_experiment(quick(ExperimentId::CARRIES));
  std::istringstream in(render_report(r, ReportFormat::Csv));
  const auto back = parse_csv_records(in);
  ASSERT_EQ(back.size(), r.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    TrialRecord expected = r.records[i];
    expected.counterexample = nullptr;
    EXPECT_EQ(back[i], expected);
    EXPECT_EQ(parse_rational(back[i].lhs), parse_rational(r.records[i].lhs));
  }
  const VerifyReport hy = run_experiment(quick(ExperimentId::SUPERADD, 4));
  std::istringstream hy_in(render_report(hy, ReportFormat::Csv));
  const auto hy_back = parse_csv_records(hy_in);
  for (std::size_t i = 0; i < hy_back.size(); ++i) {
    EXPECT_EQ(std::stod(hy_back[i].lhs), std::stod(hy.records[i].lhs));
    EXPECT_EQ(std::stod(hy_back[i].rhs), std::stod(hy.records[i].rhs));
  }
}

TEST(Report, EmitWritesFilesAndNamesBadPaths) {
  const VerifyReport r = run_experiment(quick(ExperimentId::SMALLE, 3));
  const auto path = std::filesystem::temp_directory_path() / "adnrg_report_test.json";
  emit_report(r, ReportFormat::Json, path);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), render_report(r, ReportFormat::Json));
  std::filesystem::remove(path);
  try {
    emit_report(r, ReportFormat::Json, "/nonexistent_dir/x/report.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
    EXPECT_NE(e.message().find("/nonexistent_dir/x/report.json"), std::string::npos);
  }
  EXPECT_EQ(parse_format("md"), ReportFormat::Markdown);
  EXPECT_THROW(parse_format("xml"), Error);
}
