#include "adnrg/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "adnrg/error.hpp"
#include "checked.hpp"

namespace adnrg {

namespace {

void require_uniform_dim(const std::vector<LatticeSet>& sets, const char* op) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, std::string(op) + ": no sets");
  for (const auto& s : sets) {
    if (s.dim() != sets.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": sets of dimension " +
                                                    std::to_string(sets.front().dim()) +
                                                    " and " + std::to_string(s.dim()));
    }
  }
}

void require_arity(const std::vector<LatticeSet>& sets, const char* op) {
  if (sets.size() < 3) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(op) + ": E_k needs k >= 3 sets, got " + std::to_string(sets.size()));
  }
}

BigInt product_of_sizes(const std::vector<LatticeSet>& sets, std::size_t count) {
  BigInt out = 1;
  for (std::size_t i = 0; i < count; ++i) out *= sets[i].size();
  return out;
}

EnergyResult make_result(BigInt value, const std::vector<LatticeSet>& sets) {
  const BigInt denom = product_of_sizes(sets, sets.size() - 1);
  Rational normalized = denom == 0 ? Rational(0) : Rational(value, denom);
  return {std::move(value), std::move(normalized)};
}

bool any_empty(const std::vector<LatticeSet>& sets) {
  return std::any_of(sets.begin(), sets.end(), [](const LatticeSet& s) { return s.empty(); });
}

/// Dense row-major grid over an axis-aligned box; the last axis is contiguous.
template <class T>
struct Grid {
  std::vector<Coord> lo;
  std::vector<Coord> extent;
  std::vector<std::uint64_t> stride;
  std::vector<T> cells;

  std::size_t dim() const { return lo.size(); }

  static Grid allocate(std::vector<Coord> lo, const std::vector<Coord>& hi,
                       const EngineConfig& cfg) {
    Grid g;
    const std::size_t d = lo.size();
    g.extent.resize(d);
    g.stride.resize(d);
    BigInt volume = 1;
    for (std::size_t j = 0; j < d; ++j) {
      g.extent[j] = detail::checked_add(detail::checked_add(hi[j], -lo[j], "grid extent"), 1,
                                        "grid extent");
      volume *= g.extent[j];
    }
    const BigInt bytes = volume * sizeof(T);
    if (bytes > cfg.memory_budget) {
      throw Error(ErrorCode::BudgetExceeded, "dense grid needs " + bytes.str() +
                                                 " bytes, budget is " +
                                                 std::to_string(cfg.memory_budget));
    }
    std::uint64_t s = 1;
    for (std::size_t j = d; j-- > 0;) {
      g.stride[j] = s;
      s *= static_cast<std::uint64_t>(g.extent[j]);
    }
    g.lo = std::move(lo);
    g.cells.assign(static_cast<std::size_t>(s), T(0));
    return g;
  }

  std::vector<Coord> hi() const {
    std::vector<Coord> out(dim());
    for (std::size_t j = 0; j < dim(); ++j) out[j] = lo[j] + extent[j] - 1;
    return out;
  }

  /// Linear index of p, or npos when p lies outside the grid.
  std::size_t index_of(std::span<const Coord> p) const {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < dim(); ++j) {
      const Coord off = p[j] - lo[j];
      if (off < 0 || off >= extent[j]) return npos;
      idx += static_cast<std::uint64_t>(off) * stride[j];
    }
    return static_cast<std::size_t>(idx);
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

template <class T>
Grid<T> indicator_grid(const LatticeSet& set, const EngineConfig& cfg) {
  const Point lo = set.lower();
  const Point hi = set.upper();
  auto g = Grid<T>::allocate(std::vector<Coord>(lo.coords().begin(), lo.coords().end()),
                             std::vector<Coord>(hi.coords().begin(), hi.coords().end()), cfg);
  for (std::size_t i = 0; i < set.size(); ++i) g.cells[g.index_of(set[i])] = T(1);
  return g;
}

/// out[c + a] += g[c] for every nonzero cell c and every a in the set.
template <class T>
Grid<T> convolve(const Grid<T>& g, const LatticeSet& set, const EngineConfig& cfg) {
  const std::size_t d = g.dim();
  const Point slo = set.lower();
  const Point shi = set.upper();
  const auto ghi = g.hi();
  std::vector<Coord> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = detail::checked_add(g.lo[j], slo[j], "convolution box");
    hi[j] = detail::checked_add(ghi[j], shi[j], "convolution box");
  }
  auto out = Grid<T>::allocate(std::move(lo), hi, cfg);

  std::vector<std::size_t> offsets(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto a = set[i];
    std::uint64_t off = 0;
    for (std::size_t j = 0; j < d; ++j) {
      off += static_cast<std::uint64_t>(a[j] - slo[j]) * out.stride[j];
    }
    offsets[i] = static_cast<std::size_t>(off);
  }

  std::vector<Coord> idx(d, 0);
  std::uint64_t base = 0;
  for (std::size_t cell = 0; cell < g.cells.size(); ++cell) {
    const T& v = g.cells[cell];
    if (v != 0) {
      for (const std::size_t off : offsets) out.cells[base + off] += v;
    }
    // advance the multi-index and the matching base offset in the output grid
    for (std::size_t j = d; j-- > 0;) {
      if (++idx[j] < g.extent[j]) {
        base += out.stride[j];
        break;
      }
      base -= static_cast<std::uint64_t>(idx[j] - 1) * out.stride[j];
      idx[j] = 0;
    }
  }
  return out;
}

/// Convolution of `sets` taken in the given order. All sets nonempty.
template <class T>
Grid<T> convolve_all(const std::vector<const LatticeSet*>& sets, const EngineConfig& cfg) {
  Grid<T> g = indicator_grid<T>(*sets.front(), cfg);
  for (std::size_t i = 1; i < sets.size(); ++i) g = convolve(g, *sets[i], cfg);
  return g;
}

/// uint64 counters suffice whenever the total mass fits, since every count is bounded by it.
bool fits_u64(const std::vector<const LatticeSet*>& sets) {
  BigInt mass = 1;
  for (const auto* s : sets) mass *= s->size();
  return mass <= std::numeric_limits<std::uint64_t>::max();
}

template <class T>
BigInt read_against(const std::vector<const LatticeSet*>& conv_sets, const LatticeSet& target,
                    const EngineConfig& cfg) {
  const Grid<T> g = convolve_all<T>(conv_sets, cfg);
  T total = 0;
  std::vector<Coord> neg(target.dim());
  for (std::size_t i = 0; i < target.size(); ++i) {
    const auto p = target[i];
    for (std::size_t j = 0; j < p.size(); ++j) neg[j] = -p[j];
    const std::size_t idx = g.index_of(neg);
    if (idx != Grid<T>::npos) total += g.cells[idx];
  }
  return BigInt(total);
}

template <class T>
std::vector<std::pair<Point, BigInt>> table_entries(const Grid<T>& g) {
  std::vector<std::pair<Point, BigInt>> out;
  const std::size_t d = g.dim();
  std::vector<Coord> p(g.lo);
  for (std::size_t cell = 0; cell < g.cells.size(); ++cell) {
    if (g.cells[cell] != 0) out.emplace_back(Point(p), BigInt(g.cells[cell]));
    for (std::size_t j = d; j-- > 0;) {
      if (++p[j] < g.lo[j] + g.extent[j]) break;
      p[j] = g.lo[j];
    }
  }
  return out;
}

}  // namespace

RepTable::RepTable(std::size_t dim, std::size_t arity,
                   std::vector<std::pair<Point, BigInt>> entries)
    : dim_(dim), arity_(arity), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

BigInt RepTable::count(const Point& s) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                                   [](const auto& e, const Point& p) { return e.first < p; });
  if (it == entries_.end() || it->first != s) return 0;
  return it->second;
}

BigInt RepTable::total_mass() const {
  BigInt out = 0;
  for (const auto& e : entries_) out += e.second;
  return out;
}

EnergyResult energy_bruteforce(const std::vector<LatticeSet>& sets, const EngineConfig& cfg) {
  require_arity(sets, "energy_bruteforce");
  require_uniform_dim(sets, "energy_bruteforce");
  const std::size_t k = sets.size();
  const BigInt tuples = product_of_sizes(sets, k - 1);
  if (tuples > cfg.oracle_cap) {
    throw Error(ErrorCode::OracleCapExceeded,
                "brute force would enumerate " + tuples.str() + " tuples (cap " +
                    std::to_string(cfg.oracle_cap) + "); use the fast engine");
  }
  if (any_empty(sets)) return make_result(0, sets);

  const std::size_t d = sets.front().dim();
  std::vector<std::vector<Coord>> partial(k, std::vector<Coord>(d, 0));
  std::vector<Coord> target(d);
  std::uint64_t count = 0;
  // partial[level] holds a_1 + ... + a_level
  auto descend = [&](auto&& self, std::size_t level) -> void {
    if (level == k - 1) {
      for (std::size_t j = 0; j < d; ++j) target[j] = -partial[level][j];
      if (sets[k - 1].contains(target)) ++count;
      return;
    }
    const LatticeSet& s = sets[level];
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto a = s[i];
      for (std::size_t j = 0; j < d; ++j) {
        partial[level + 1][j] = detail::checked_add(partial[level][j], a[j], "brute-force sum");
      }
      self(self, level + 1);
    }
  };
  descend(descend, 0);
  return make_result(count, sets);
}

RepTable rep_table(const std::vector<LatticeSet>& sets, const EngineConfig& cfg) {
  require_uniform_dim(sets, "rep_table");
  const std::size_t d = sets.front().dim();
  if (any_empty(sets)) return RepTable(d, sets.size(), {});
  std::vector<const LatticeSet*> ptrs;
  for (const auto& s : sets) ptrs.push_back(&s);
  if (fits_u64(ptrs)) {
    return RepTable(d, sets.size(), table_entries(convolve_all<std::uint64_t>(ptrs, cfg)));
  }
  return RepTable(d, sets.size(), table_entries(convolve_all<BigInt>(ptrs, cfg)));
}

EnergyResult energy_fast(const std::vector<LatticeSet>& sets, const EngineConfig& cfg) {
  require_arity(sets, "energy_fast");
  require_uniform_dim(sets, "energy_fast");
  if (any_empty(sets)) return make_result(0, sets);

  // E_k is symmetric in its arguments: convolve the k-1 smallest, test against the largest
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sets[a].size() < sets[b].size();
  });
  std::vector<const LatticeSet*> conv;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) conv.push_back(&sets[order[i]]);
  const LatticeSet& target = sets[order.back()];

  BigInt value = fits_u64(conv) ? read_against<std::uint64_t>(conv, target, cfg)
                                : read_against<BigInt>(conv, target, cfg);
  return make_result(std::move(value), sets);
}

BigInt representation_count(const std::vector<LatticeSet>& sets, const Point& s,
                            const EngineConfig& cfg) {
  require_uniform_dim(sets, "representation_count");
  if (s.dim() != sets.front().dim()) {
    throw Error(ErrorCode::DimensionMismatch, "representation_count: target point");
  }
  std::vector<LatticeSet> shifted(sets);
  shifted.back() = translate(sets.back(), -s);
  if (shifted.size() >= 3) return energy_fast(shifted, cfg).value;
  // fewer than three sets: read the table directly
  return rep_table(sets, cfg).count(s);
}

EnergyResult additive_energy(const LatticeSet& a, const EngineConfig& cfg) {
  if (a.empty()) throw Error(ErrorCode::EmptyInput, "additive energy of an empty set");
  const LatticeSet neg = negate(a);
  return energy_fast({a, a, neg, neg}, cfg);
}

EnergyResult carry_density(const LatticeSet& a, const EngineConfig& cfg) {
  if (a.empty()) throw Error(ErrorCode::EmptyInput, "carry density of an empty set");
  return energy_fast({a, a, negate(a)}, cfg);
}

SmallEnergyReport small_energy_bound_check(const std::vector<LatticeSet>& ys,
                                           const EngineConfig& cfg) {
  require_arity(ys, "small_energy_bound_check");
  require_uniform_dim(ys, "small_energy_bound_check");
  SmallEnergyReport r;
  r.lhs = energy_fast(ys, cfg).value;
  r.e4 = energy_fast({ys[0], ys[1], negate(ys[0]), negate(ys[1])}, cfg).value;
  BigInt tail = 1;
  for (std::size_t i = 3; i < ys.size(); ++i) tail *= ys[i].size();
  r.rhs_squared = tail * tail * ys[2].size() * r.e4;
  r.holds = r.lhs * r.lhs <= r.rhs_squared;
  r.rhs = std::sqrt(r.rhs_squared.convert_to<double>());
  return r;
}

}  // namespace adnrg
