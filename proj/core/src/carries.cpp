#include "adnrg/carries.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "adnrg/ball.hpp"
#include "adnrg/energy.hpp"
#include "adnrg/error.hpp"
#include "adnrg/parallel.hpp"
#include "adnrg/sampling.hpp"

namespace adnrg {

namespace {

Coord floor_mod(Coord a, Coord b) {
  const Coord r = a % b;
  return r < 0 ? r + b : r;
}

void require_base(Coord base) {
  if (base < 2) throw Error(ErrorCode::InvalidArgument, "base must be >= 2");
}

void validate_window(Coord base, std::size_t dim, const RepWindow& window) {
  const std::size_t classes = RepSystem::class_count(base, dim);
  if (window.size() != classes) {
    throw Error(ErrorCode::InvalidArgument, "window has " + std::to_string(window.size()) +
                                                " classes, expected " + std::to_string(classes));
  }
  for (std::size_t i = 0; i < classes; ++i) {
    if (window[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty window entry");
    for (const auto& p : window[i]) {
      if (p.dim() != dim || RepSystem::class_of(base, p) != i) {
        throw Error(ErrorCode::InvalidArgument,
                    "window candidate not in class " + std::to_string(i));
      }
    }
  }
}

bool better(std::uint64_t candidate, std::uint64_t incumbent, Objective o) {
  return o == Objective::Max ? candidate > incumbent : candidate < incumbent;
}

Rational as_probability(std::uint64_t triples, std::size_t n) {
  return Rational(BigInt(triples), BigInt(n) * n);
}

RepSystem system_from(Coord base, std::size_t dim, const RepWindow& window,
                      const std::vector<std::size_t>& choice) {
  std::vector<Point> reps;
  reps.reserve(choice.size());
  for (std::size_t i = 0; i < choice.size(); ++i) reps.push_back(window[i][choice[i]]);
  return RepSystem(base, dim, std::move(reps));
}

}  // namespace

RepSystem::RepSystem(Coord base, std::size_t dim, std::vector<Point> reps)
    : base_(base), dim_(dim), reps_(std::move(reps)) {
  require_base(base);
  if (reps_.size() != class_count(base, dim)) {
    throw Error(ErrorCode::InvalidArgument, "need exactly b^d representatives");
  }
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (reps_[i].dim() != dim || class_of(base, reps_[i]) != i) {
      throw Error(ErrorCode::InvalidArgument,
                  "representative " + std::to_string(i) + " is not in its residue class");
    }
  }
}

std::size_t RepSystem::class_count(Coord base, std::size_t dim) {
  require_base(base);
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  std::size_t n = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (__builtin_mul_overflow(n, static_cast<std::size_t>(base), &n) || n > (1u << 24)) {
      throw Error(ErrorCode::BudgetExceeded, "b^d too large");
    }
  }
  return n;
}

Point RepSystem::residue(Coord base, std::size_t dim, std::size_t index) {
  Point p = Point::zero(dim);
  for (std::size_t j = dim; j-- > 0;) {
    p[j] = static_cast<Coord>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
  }
  return p;
}

std::size_t RepSystem::class_of(Coord base, const Point& p) {
  std::size_t index = 0;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    index = index * static_cast<std::size_t>(base) + static_cast<std::size_t>(floor_mod(p[j], base));
  }
  return index;
}

LatticeSet RepSystem::as_set() const { return LatticeSet(dim_, reps_); }

RepWindow default_window(Coord base, std::size_t dim) {
  const std::size_t classes = RepSystem::class_count(base, dim);
  RepWindow window(classes);
  for (std::size_t i = 0; i < classes; ++i) {
    const Point canonical = RepSystem::residue(base, dim, i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
      Point p = canonical;
      for (std::size_t j = 0; j < dim; ++j) {
        if (mask >> j & 1) p[j] -= base;
      }
      window[i].push_back(std::move(p));
    }
  }
  return window;
}

RepSystem centered_box_system(Coord base, std::size_t dim) {
  require_base(base);
  if (base % 2 == 0) throw Error(ErrorCode::InvalidArgument, "centered box needs odd b");
  const std::size_t classes = RepSystem::class_count(base, dim);
  const Coord half = (base - 1) / 2;
  std::vector<Point> reps;
  reps.reserve(classes);
  for (std::size_t i = 0; i < classes; ++i) {
    Point p = RepSystem::residue(base, dim, i);
    for (std::size_t j = 0; j < dim; ++j) {
      if (p[j] > half) p[j] -= base;
    }
    reps.push_back(std::move(p));
  }
  return RepSystem(base, dim, std::move(reps));
}

Rational carry_probability(const RepSystem& sys) { return carry_density(sys.as_set()).normalized; }

std::string to_string(Objective o) { return o == Objective::Max ? "max" : "min"; }

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::Local: return "local";
    case SearchMode::Centered: return "centered";
  }
  return "unknown";
}

TripleCounter::TripleCounter(std::size_t dim) : dim_(dim) {}

bool TripleCounter::member(const Point& p) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), p);
}

std::uint64_t TripleCounter::touching(const Point& p) const {
  // inclusion-exclusion over which of the three slots hold p
  std::uint64_t as_summand = 0;  // a + p in A
  std::uint64_t as_total = 0;    // p - a in A
  for (const auto& a : points_) {
    if (member(a + p)) ++as_summand;
    if (member(p - a)) ++as_total;
  }
  const Point zero = Point::zero(dim_);
  std::uint64_t out = 2 * as_summand + as_total;
  if (member(p + p)) --out;
  if (member(zero)) out -= 2;
  if (p == zero) ++out;
  return out;
}

void TripleCounter::insert(const Point& p) {
  if (p.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "TripleCounter::insert");
  if (member(p)) throw Error(ErrorCode::InvalidArgument, "point already present");
  points_.push_back(p);
  sorted_.insert(std::upper_bound(sorted_.begin(), sorted_.end(), p), p);
  triples_ += touching(p);
}

void TripleCounter::erase(const Point& p) {
  if (!member(p)) throw Error(ErrorCode::InvalidArgument, "point not present");
  triples_ -= touching(p);
  points_.erase(std::find(points_.begin(), points_.end(), p));
  sorted_.erase(std::lower_bound(sorted_.begin(), sorted_.end(), p));
}

SearchResult exhaustive_search(Coord base, std::size_t dim, const RepWindow& window,
                               const SearchConfig& cfg) {
  validate_window(base, dim, window);
  BigInt systems = 1;
  for (const auto& w : window) systems *= w.size();
  if (systems > cfg.budget) {
    throw Error(ErrorCode::BudgetExceeded, "exhaustive search would visit " + systems.str() +
                                               " systems (budget " + std::to_string(cfg.budget) +
                                               "); use local search");
  }

  const std::size_t n = window.size();
  std::vector<std::size_t> choice(n, 0);
  TripleCounter counter(dim);
  for (std::size_t i = 0; i < n; ++i) counter.insert(window[i][0]);

  std::vector<std::size_t> best_choice = choice;
  std::uint64_t best = counter.triples();
  std::vector<std::pair<std::size_t, Rational>> trajectory{{0, as_probability(best, n)}};
  std::uint64_t visited = 1;
  while (true) {
    // odometer step; each changed digit is one incremental move
    std::size_t i = 0;
    for (; i < n; ++i) {
      counter.erase(window[i][choice[i]]);
      choice[i] = (choice[i] + 1) % window[i].size();
      counter.insert(window[i][choice[i]]);
      if (choice[i] != 0) break;
    }
    if (i == n) break;
    ++visited;
    if (better(counter.triples(), best, cfg.objective)) {
      best = counter.triples();
      best_choice = choice;
      trajectory.emplace_back(visited - 1, as_probability(best, n));
    }
  }
  return SearchResult{system_from(base, dim, window, best_choice), as_probability(best, n),
                      std::move(trajectory), SearchMode::Exhaustive, visited};
}

namespace {

struct ClimbResult {
  std::vector<std::size_t> choice;
  std::uint64_t triples = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> trajectory;
};

ClimbResult climb(const RepWindow& window, std::size_t dim, std::vector<std::size_t> choice,
                  Objective objective) {
  const std::size_t n = window.size();
  TripleCounter counter(dim);
  for (std::size_t i = 0; i < n; ++i) counter.insert(window[i][choice[i]]);
  ClimbResult r;
  r.trajectory.emplace_back(0, counter.triples());
  while (true) {
    std::uint64_t best = counter.triples();
    std::size_t best_class = n;
    std::size_t best_pick = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& current = window[i][choice[i]];
      counter.erase(current);
      for (std::size_t c = 0; c < window[i].size(); ++c) {
        if (c == choice[i]) continue;
        counter.insert(window[i][c]);
        if (better(counter.triples(), best, objective)) {
          best = counter.triples();
          best_class = i;
          best_pick = c;
        }
        counter.erase(window[i][c]);
      }
      counter.insert(current);
    }
    if (best_class == n) break;
    counter.erase(window[best_class][choice[best_class]]);
    choice[best_class] = best_pick;
    counter.insert(window[best_class][best_pick]);
    r.trajectory.emplace_back(r.trajectory.size(), counter.triples());
  }
  r.triples = counter.triples();
  r.choice = std::move(choice);
  return r;
}

/// Window index of each centered-box representative, if all are present.
std::optional<std::vector<std::size_t>> centered_choice(Coord base, std::size_t dim,
                                                        const RepWindow& window) {
  if (base % 2 == 0) return std::nullopt;
  const RepSystem box = centered_box_system(base, dim);
  std::vector<std::size_t> choice(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    const auto it = std::find(window[i].begin(), window[i].end(), box.reps()[i]);
    if (it == window[i].end()) return std::nullopt;
    choice[i] = static_cast<std::size_t>(it - window[i].begin());
  }
  return choice;
}

}  // namespace

SearchResult local_search(Coord base, std::size_t dim, const RepWindow& window,
                          const SearchConfig& cfg) {
  validate_window(base, dim, window);
  const std::size_t n = window.size();
  const std::size_t restarts = std::max<std::size_t>(1, cfg.restarts);
  const auto centered =
      cfg.objective == Objective::Max ? centered_choice(base, dim, window) : std::nullopt;

  std::vector<ClimbResult> results(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    std::vector<std::size_t> start(n);
    if (r == 0 && centered) {
      start = *centered;
    } else {
      std::mt19937_64 rng(derive_seed(cfg.seed, r));
      for (std::size_t i = 0; i < n; ++i) {
        start[i] = std::uniform_int_distribution<std::size_t>(0, window[i].size() - 1)(rng);
      }
    }
    results[r] = climb(window, dim, std::move(start), cfg.objective);
  });

  std::size_t best = 0;
  std::uint64_t steps = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    steps += results[r].trajectory.size() - 1;
    if (better(results[r].triples, results[best].triples, cfg.objective)) best = r;
  }
  std::vector<std::pair<std::size_t, Rational>> trajectory;
  for (const auto& [step, t] : results[best].trajectory) {
    trajectory.emplace_back(step, as_probability(t, n));
  }
  return SearchResult{system_from(base, dim, window, results[best].choice),
                      as_probability(results[best].triples, n), std::move(trajectory),
                      SearchMode::Local, steps};
}

CorollaryScan corollary_scan(std::size_t dim, const std::vector<Coord>& bases,
                             const SearchConfig& cfg) {
  CorollaryScan scan;
  scan.dim = dim;
  const double ball_constant = energy_constant_c(dim).value;
  SearchConfig search = cfg;
  search.objective = Objective::Max;
  for (Coord b : bases) {
    CorollaryRow row;
    row.base = b;
    row.ball_constant = ball_constant;
    row.conjectured = std::pow(0.75, static_cast<double>(dim));
    if (b % 2 == 1) {
      row.centered_available = true;
      row.centered_c = carry_probability(centered_box_system(b, dim));
    }
    const RepWindow window = default_window(b, dim);
    BigInt systems = 1;
    for (const auto& w : window) systems *= w.size();
    const SearchResult found = systems <= search.budget ? exhaustive_search(b, dim, window, search)
                                                        : local_search(b, dim, window, search);
    row.best_c = found.best_c;
    row.best_mode = found.mode;
    scan.rows.push_back(std::move(row));
  }

  scan.within_trivial_bound = std::all_of(scan.rows.begin(), scan.rows.end(),
                                          [](const CorollaryRow& r) { return r.best_c <= 1; });
  std::vector<const CorollaryRow*> odd;
  for (const auto& r : scan.rows) {
    if (r.centered_available) odd.push_back(&r);
  }
  std::sort(odd.begin(), odd.end(), [](auto* a, auto* b) { return a->base < b->base; });
  scan.centered_decreasing = true;
  for (std::size_t i = 1; i < odd.size(); ++i) {
    if (!(odd[i]->centered_c < odd[i - 1]->centered_c)) scan.centered_decreasing = false;
  }
  return scan;
}

}  // namespace adnrg
