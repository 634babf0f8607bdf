#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adnrg/ball.hpp"
#include "adnrg/carries.hpp"
#include "adnrg/compression.hpp"
#include "adnrg/energy.hpp"
#include "adnrg/error.hpp"
#include "adnrg/lattice_io.hpp"
#include "adnrg/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace adnrg;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json points_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(std::vector<Coord>(p.coords().begin(), p.coords().end()));
  return out;
}

struct EnergyArgs {
  std::size_t k = 4;
  std::vector<std::string> sets;
  bool negate_last_half = false;
  std::string engine = "fast";
  double cap = 1e8;
};

int run_energy(const EnergyArgs& a) {
  if (a.k < 2) throw Error(ErrorCode::InvalidArgument, "--k must be >= 2");
  if (a.sets.size() != 1 && a.sets.size() != a.k) {
    throw Error(ErrorCode::InvalidArgument, "--sets takes one file or exactly k files");
  }
  std::vector<LatticeSet> sets;
  for (std::size_t i = 0; i < a.k; ++i) sets.push_back(load_set(a.sets[a.sets.size() == 1 ? 0 : i]));
  if (a.negate_last_half) {
    for (std::size_t i = a.k - a.k / 2; i < a.k; ++i) sets[i] = negate(sets[i]);
  }
  EngineConfig cfg;
  cfg.oracle_cap = a.cap;

  const auto start = std::chrono::steady_clock::now();
  std::optional<EnergyResult> brute, fast;
  if (a.engine != "fast") brute = energy_bruteforce(sets, cfg);
  if (a.engine != "brute") fast = energy_fast(sets, cfg);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const EnergyResult& r = fast ? *fast : *brute;
  json out{{"E_k", to_string(r.value)},
           {"normalized", to_string(r.normalized)},
           {"engine", a.engine},
           {"elapsed_ms", static_cast<std::int64_t>(ms)}};
  if (brute && fast) {
    const bool agree = brute->value == fast->value;
    out["engines_agree"] = agree;
    print(out);
    return agree ? kPass : kViolation;
  }
  print(out);
  return kPass;
}

struct CompressArgs {
  std::size_t axis = 1;
  std::vector<Coord> box;
  std::string in, out;
};

int run_compress(const CompressArgs& a) {
  const LatticeSet set = load_set(a.in);
  if (a.axis < 1 || a.axis > set.dim()) {
    throw Error(ErrorCode::InvalidArgument, "--axis must be in 1.." + std::to_string(set.dim()));
  }
  const std::size_t axis = a.axis - 1;
  json out{{"axis", a.axis}, {"size_before", set.size()}};
  if (!a.box.empty()) {
    const BoxShape box(a.box);
    if (box.dim() != set.dim()) throw Error(ErrorCode::DimensionMismatch, "--box dimension");
    if (!box.contains(set)) throw Error(ErrorCode::OutOfBox, "input is not inside --box");
    out["size_bound"] = to_string(BigInt(set.size()) + box.fiber_count(axis));
  }
  const LatticeSet c = compress(set, axis);
  save_set(a.out, c);
  out["size_after"] = c.size();
  out["compressed"] = is_compressed(c, axis);
  print(out);
  return kPass;
}

int run_downset(const std::string& in, const std::string& out_path) {
  const LatticeSet set = load_set(in);
  const LatticeSet d = downset_transform(set);
  save_set(out_path, d);
  print(json{{"size_before", set.size()}, {"size_after", d.size()}, {"is_downset", is_downset(d)}});
  return kPass;
}

struct VerifyArgs {
  std::string experiment;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> samples;
  std::string out;
  std::string format = "json";
};

ExperimentConfig experiment_config(const VerifyArgs& a) {
  ExperimentConfig cfg;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + a.config);
    try {
      cfg = ExperimentConfig::from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, a.config + ": " + e.what());
    }
  }
  if (!a.experiment.empty()) cfg.experiment = parse_experiment(a.experiment);
  else if (a.config.empty()) throw Error(ErrorCode::InvalidArgument, "--experiment is required");
  if (a.seed) cfg.seed = *a.seed;
  if (a.trials) cfg.trials = *a.trials;
  if (a.samples) cfg.mc_samples = *a.samples;
  if (!a.out.empty()) cfg.output = a.out;
  return cfg;
}

int run_verify(const VerifyArgs& a) {
  const ExperimentConfig cfg = experiment_config(a);
  const ReportFormat format = parse_format(a.format);
  const VerifyReport report = run_experiment(cfg);
  if (cfg.output.empty()) {
    std::cout << render_report(report, format);
  } else {
    emit_report(report, format, cfg.output);
    std::cerr << to_string(cfg.experiment) << ": " << (report.pass ? "pass" : "FAIL") << " ("
              << report.records.size() << " records, " << static_cast<std::int64_t>(report.wall_ms)
              << " ms) -> " << cfg.output << "\n";
  }
  return report.pass ? kPass : kViolation;
}

int run_check_lemma(const std::string& lemma, std::size_t trials, std::uint64_t seed) {
  VerifyArgs a;
  if (lemma == "compress" || lemma == "4.2") a.experiment = "COMPRESS";
  else if (lemma == "downset" || lemma == "4.3") a.experiment = "DOWNSET";
  else if (lemma == "shift" || lemma == "4.4") a.experiment = "SHIFT";
  else throw Error(ErrorCode::InvalidArgument, "unknown lemma '" + lemma + "'");
  a.trials = trials;
  a.seed = seed;
  const VerifyReport report = run_experiment(experiment_config(a));
  json failures = json::array();
  for (const auto& r : report.records) {
    if (!r.pass) {
      failures.push_back({{"inequality", r.inequality},
                          {"trial", r.trial},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"counterexample", r.counterexample}});
    }
  }
  json out{{"experiment", to_string(report.config.experiment)},
           {"pass", report.pass},
           {"trials", trials},
           {"seed", std::to_string(seed)},
           {"records", report.records.size()},
           {"failures", failures}};
  if (report.measured.contains("max_ratio")) out["max_ratio"] = report.measured["max_ratio"];
  print(out);
  return report.pass ? kPass : kViolation;
}

struct BallArgs {
  std::size_t dim = 2;
  std::size_t k = 4;
  std::vector<double> volumes;
  std::string method = "quad";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  double tol = 0.0;
};

int run_ball(const BallArgs& a) {
  if (a.volumes.size() != a.k && a.volumes.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "--volumes takes one value or exactly k values");
  }
  std::vector<BallSpec> specs;
  for (std::size_t i = 0; i < a.k; ++i) specs.emplace_back(a.dim, a.volumes[a.volumes.size() == 1 ? 0 : i]);
  const QuadratureEstimate q = a.method == "mc" ? ball_Ek_montecarlo(specs, a.samples, a.seed)
                                                : ball_Ek_quadrature(specs, a.tol);
  json out{{"value", format_double(q.value)},
           {"error_bound", format_double(q.abs_error_bound)},
           {"method", to_string(q.method)},
           {"nodes_or_samples", std::to_string(q.samples_or_nodes)}};
  if (q.method == IntegrationMethod::MonteCarlo) out["seed"] = std::to_string(q.seed);
  print(out);
  return kPass;
}

struct CarriesArgs {
  Coord base = 3;
  std::size_t dim = 1;
  std::string mode = "exhaustive";
  std::string objective = "max";
  std::uint64_t seed = 1;
  std::size_t restarts = 16;
};

int run_carries(const CarriesArgs& a) {
  SearchConfig cfg;
  cfg.objective = a.objective == "min" ? Objective::Min : Objective::Max;
  cfg.seed = a.seed;
  cfg.restarts = a.restarts;
  json out;
  if (a.mode == "centered") {
    const RepSystem sys = centered_box_system(a.base, a.dim);
    out = json{{"c", to_string(carry_probability(sys))},
               {"system", points_json(sys.reps())},
               {"mode", "centered"},
               {"steps", 0}};
  } else {
    const RepWindow window = default_window(a.base, a.dim);
    const SearchResult r = a.mode == "local" ? local_search(a.base, a.dim, window, cfg)
                                             : exhaustive_search(a.base, a.dim, window, cfg);
    out = json{{"c", to_string(r.best_c)},
               {"system", points_json(r.best_system.reps())},
               {"mode", to_string(r.mode)},
               {"objective", to_string(cfg.objective)},
               {"steps", r.steps}};
  }
  print(out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact additive energy computations and inequality checks"};
  app.require_subcommand(1);
  std::function<int()> action;

  EnergyArgs energy;
  auto* e = app.add_subcommand("energy", "E_k of k lattice sets");
  e->add_option("--k", energy.k, "arity")->capture_default_str();
  e->add_option("--sets", energy.sets, "one file (repeated k times) or k files")
      ->required()
      ->delimiter(',');
  e->add_flag("--negate-last-half", energy.negate_last_half, "negate the last floor(k/2) sets");
  e->add_option("--engine", energy.engine)
      ->check(CLI::IsMember({"brute", "fast", "both"}))
      ->capture_default_str();
  e->add_option("--oracle-cap", energy.cap, "largest tuple count for the brute-force engine")
      ->capture_default_str();
  e->callback([&] { action = [&] { return run_energy(energy); }; });

  CompressArgs comp;
  auto* c = app.add_subcommand("compress", "compress a set along one axis");
  c->add_option("--axis", comp.axis, "axis, 1-based")->required();
  c->add_option("--box", comp.box, "box half-widths N1,N2,...")->delimiter(',');
  c->add_option("in", comp.in)->required();
  c->add_option("out", comp.out)->required();
  c->callback([&] { action = [&] { return run_compress(comp); }; });

  std::string down_in, down_out;
  auto* d = app.add_subcommand("downset", "compress along every axis");
  d->add_option("in", down_in)->required();
  d->add_option("out", down_out)->required();
  d->callback([&] { action = [&] { return run_downset(down_in, down_out); }; });

  std::string lemma;
  std::size_t lemma_trials = 100;
  std::uint64_t lemma_seed = 1;
  auto* l = app.add_subcommand("check-lemma", "random trials of a compression inequality");
  l->add_option("lemma", lemma, "compress, downset or shift")->required();
  l->add_option("--trials", lemma_trials)->capture_default_str();
  l->add_option("--seed", lemma_seed)->capture_default_str();
  l->callback([&] { action = [&] { return run_check_lemma(lemma, lemma_trials, lemma_seed); }; });

  BallArgs ball;
  auto* b = app.add_subcommand("ball", "E_k of origin-centred balls");
  b->add_option("--dim", ball.dim)->required();
  b->add_option("--k", ball.k)->capture_default_str();
  b->add_option("--volumes", ball.volumes)->required()->delimiter(',');
  b->add_option("--method", ball.method)
      ->check(CLI::IsMember({"quad", "mc"}))
      ->capture_default_str();
  b->add_option("--samples", ball.samples)->capture_default_str();
  b->add_option("--seed", ball.seed)->capture_default_str();
  b->add_option("--tol", ball.tol, "absolute tolerance, 0 for the default");
  b->callback([&] { action = [&] { return run_ball(ball); }; });

  CarriesArgs carries;
  auto* r = app.add_subcommand("carries", "search representative systems for c(A)");
  r->add_option("--base", carries.base)->required();
  r->add_option("--dim", carries.dim)->capture_default_str();
  r->add_option("--mode", carries.mode)
      ->check(CLI::IsMember({"exhaustive", "local", "centered"}))
      ->capture_default_str();
  r->add_option("--objective", carries.objective)
      ->check(CLI::IsMember({"max", "min"}))
      ->capture_default_str();
  r->add_option("--seed", carries.seed)->capture_default_str();
  r->add_option("--restarts", carries.restarts)->capture_default_str();
  r->callback([&] { action = [&] { return run_carries(carries); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run a registered experiment");
  v->add_option("--experiment", verify.experiment, "HL COMPRESS DOWNSET SHIFT PROPZD SMALLE HY SUPERADD CONVERGE CARRIES");
  v->add_option("--config", verify.config, "experiment config JSON");
  v->add_option("--seed", verify.seed);
  v->add_option("--trials", verify.trials);
  v->add_option("--samples", verify.samples, "Monte Carlo samples");
  v->add_option("--out", verify.out, "report path (stdout if omitted)");
  v->add_option("--format", verify.format)
      ->check(CLI::IsMember({"json", "md", "csv"}))
      ->capture_default_str();
  v->callback([&] { action = [&] { return run_verify(verify); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return action();
  } catch (const Error& err) {
    std::cerr << "adnrg: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "adnrg: " << err.what() << "\n";
    return kUsage;
  }
}
