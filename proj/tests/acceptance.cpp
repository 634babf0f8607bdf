// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "adnrg/ball.hpp"
#include "adnrg/compression.hpp"
#include "adnrg/energy.hpp"
#include "adnrg/sampling.hpp"
#include "adnrg/verify.hpp"
#include "oracle.hpp"

using namespace adnrg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= time_limit_s) {
    out.pass = false;
    out.detail += " (over the " + format_double(time_limit_s) + " s limit)";
  }
  if (!out.pass) ++failures;
  std::printf("criterion %2d %-34s %s  %.2fs  %s\n", id, name, out.pass ? "PASS" : "FAIL", secs,
              out.detail.c_str());
  std::fflush(stdout);
}

LatticeSet interval(Coord n) {
  std::vector<Coord> flat;
  for (Coord x = 0; x < n; ++x) flat.push_back(x);
  return LatticeSet::from_flat(1, flat);
}

std::vector<LatticeSet> quad(const LatticeSet& a) { return {a, a, negate(a), negate(a)}; }

Outcome experiment(ExperimentId id, ExperimentConfig cfg = {}) {
  cfg.experiment = id;
  const VerifyReport r = run_experiment(cfg);
  std::size_t violations = 0;
  for (const auto& rec : r.records) violations += !rec.pass;
  std::ostringstream s;
  s << r.records.size() << " records, " << violations << " violations";
  if (r.measured.contains("families_checked")) {
    s << ", " << r.measured["families_checked"].get<std::string>() << " families";
  }
  return {r.pass && violations == 0, s.str()};
}

}  // namespace

int main() {
  criterion(1, "interval energy closed form", 1.0, [] {
    const BigInt small = energy_bruteforce(quad(interval(3))).value;
    const BigInt large = energy_fast(quad(interval(100))).value;
    const bool ok = small == 19 && small == oracle::interval_e4(3) && large == 666700 &&
                    large == oracle::interval_e4(100);
    return Outcome{ok, "E_4(I_3)=" + to_string(small) + " E_4(I_100)=" + to_string(large)};
  });

  criterion(2, "ball constants e_1 e_2 c_1 c_2", 10.0, [] {
    using std::numbers::pi;
    const double e1 = energy_constant_e(1).value, e2 = energy_constant_e(2).value;
    const double c1 = energy_constant_c(1).value, c2 = energy_constant_c(2).value;
    const bool ok = std::abs(e1 - 2.0 / 3) < 1e-9 && std::abs(e2 - (1 - 16 / (3 * pi * pi))) < 1e-6 &&
                    std::abs(c1 - 0.75) < 1e-9 &&
                    std::abs(c2 - (1 - 3 * std::sqrt(3.0) / (4 * pi))) < 1e-6;
    return Outcome{ok, "e_1=" + format_double(e1) + " e_2=" + format_double(e2) +
                           " c_1=" + format_double(c1) + " c_2=" + format_double(c2)};
  });

  criterion(3, "lattice ball convergence", 60.0, [] {
    const ConvergenceReport r = discretization_convergence(2, {10, 20, 40});
    const ConvergenceRow& last = r.rows.back();
    const bool ok = r.monotone && std::abs(last.difference) < 0.02 &&
                    last.lattice.normalized > Rational(4, 9);
    std::string detail;
    for (const auto& row : r.rows) {
      detail += "R=" + to_string(row.radius) + ":" + format_double(row.difference) + " ";
    }
    return Outcome{ok, detail + "e(R=40)=" + format_double(last.lattice_value)};
  });

  criterion(4, "compression monotonicity", 120.0,
            [] { return experiment(ExperimentId::COMPRESS); });

  criterion(5, "down-set transform", 120.0, [] { return experiment(ExperimentId::DOWNSET); });

  criterion(6, "odd-size interval rearrangement", 300.0,
            [] { return experiment(ExperimentId::HL); });

  criterion(7, "small energy bound", 120.0, [] { return experiment(ExperimentId::SMALLE); });

  criterion(8, "Hausdorff-Young bound", 300.0, [] { return experiment(ExperimentId::HY); });

  criterion(9, "carries optima and product law", 120.0,
            [] { return experiment(ExperimentId::CARRIES); });

  criterion(10, "engine equivalence and folding", 300.0, [] {
    std::mt19937_64 rng(derive_seed(10, 0));
    std::size_t mismatches = 0;
    for (int t = 0; t < 500; ++t) {
      const std::size_t d = 1 + rng() % 3;
      const std::size_t k = 3 + rng() % 3;
      std::vector<LatticeSet> sets;
      for (std::size_t i = 0; i < k; ++i) {
        sets.push_back(oracle::random_set(d, 1 + rng() % 30, -6, 6, rng));
      }
      mismatches += energy_fast(sets).value != energy_bruteforce(sets).value;
    }
    std::size_t fold_mismatches = 0;
    for (int t = 0; t < 100; ++t) {
      const std::size_t rank = 2 + rng() % 2;
      const std::size_t keep = rng() % rank;
      const std::size_t k = 3 + rng() % 2;
      std::vector<Coord> widths(rank);
      for (auto& w : widths) w = 1 + static_cast<Coord>(rng() % 3);
      const BoxShape box(widths);
      std::size_t room = 1;
      for (Coord w : widths) room *= static_cast<std::size_t>(2 * w + 1);
      std::vector<LatticeSet> sets, folded;
      for (std::size_t i = 0; i < k; ++i) {
        sets.push_back(random_subset(box, 1 + rng() % std::min<std::size_t>(12, room), rng));
        folded.push_back(fold_isomorphism(sets.back(), widths, keep, k));
      }
      fold_mismatches += energy_bruteforce(sets).value != energy_fast(folded).value;
    }
    return Outcome{mismatches == 0 && fold_mismatches == 0,
                   "500 engine instances, " + std::to_string(mismatches) + " mismatches; 100 folds, " +
                       std::to_string(fold_mismatches) + " mismatches"};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
