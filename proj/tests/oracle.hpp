#pragma once

// Slow reference implementations that share no code with the library engines.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adnrg/lattice.hpp"

namespace oracle {

using adnrg::Coord;
using Vec = std::vector<Coord>;
using Big = boost::multiprecision::cpp_int;

inline std::vector<Vec> rows(const adnrg::LatticeSet& a) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i].begin(), a[i].end());
  return out;
}

/// Counts every k-tuple with zero sum, no membership shortcut.
inline std::uint64_t energy(const std::vector<adnrg::LatticeSet>& sets) {
  std::vector<std::vector<Vec>> pts;
  for (const auto& s : sets) pts.push_back(rows(s));
  const std::size_t d = sets.front().dim();
  std::uint64_t count = 0;
  Vec acc(d, 0);
  auto go = [&](auto&& self, std::size_t level) -> void {
    if (level == pts.size()) {
      bool zero = true;
      for (Coord c : acc) zero = zero && c == 0;
      count += zero;
      return;
    }
    for (const auto& p : pts[level]) {
      for (std::size_t j = 0; j < d; ++j) acc[j] += p[j];
      self(self, level + 1);
      for (std::size_t j = 0; j < d; ++j) acc[j] -= p[j];
    }
  };
  go(go, 0);
  return count;
}

inline std::set<Vec> sumset(const adnrg::LatticeSet& a, const adnrg::LatticeSet& b) {
  std::set<Vec> out;
  for (const auto& p : rows(a)) {
    for (const auto& q : rows(b)) {
      Vec s(p.size());
      for (std::size_t j = 0; j < p.size(); ++j) s[j] = p[j] + q[j];
      out.insert(s);
    }
  }
  return out;
}

/// #{(a, b) in A^2 : a + b in A}.
inline std::uint64_t carry_triples(const adnrg::LatticeSet& a) {
  const auto pts = rows(a);
  const std::set<Vec> members(pts.begin(), pts.end());
  std::uint64_t n = 0;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      Vec s(p.size());
      for (std::size_t j = 0; j < p.size(); ++j) s[j] = p[j] + q[j];
      n += members.count(s);
    }
  }
  return n;
}

/// E_4(I, I, -I, -I) for I = {0, ..., N-1}.
inline Big interval_e4(std::int64_t n) { return (Big(2) * n * n * n + n) / 3; }

/// Area of the intersection of two unit disks at distance t <= 2.
inline double unit_lens_2d(double t) {
  return 2.0 * std::acos(t / 2.0) - t / 2.0 * std::sqrt(4.0 - t * t);
}

/// Uniform random subset of [lo, hi]^d with n distinct points (n must fit).
inline adnrg::LatticeSet random_set(std::size_t d, std::size_t n, Coord lo, Coord hi,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<Coord> coord(lo, hi);
  // clamp to the number of points the cube actually holds
  std::size_t room = 1;
  for (std::size_t j = 0; j < d && room < n; ++j) room *= static_cast<std::size_t>(hi - lo + 1);
  n = std::min(n, room);
  std::set<Vec> pts;
  while (pts.size() < n) {
    Vec p(d);
    for (auto& c : p) c = coord(rng);
    pts.insert(p);
  }
  std::vector<adnrg::Point> out;
  for (const auto& p : pts) out.emplace_back(p);
  return adnrg::LatticeSet(d, out);
}

/// Coefficients of prod_i (sum_{a in A_i} x^a) for 1-d sets, as a map offset -> count.
inline std::vector<Big> poly_product(const std::vector<adnrg::LatticeSet>& sets, Coord& low) {
  std::vector<Big> acc{1};
  low = 0;
  for (const auto& s : sets) {
    const Coord lo = s[0][0];
    const Coord hi = s[s.size() - 1][0];
    std::vector<Big> next(acc.size() + static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < s.size(); ++j) next[i + static_cast<std::size_t>(s[j][0] - lo)] += acc[i];
    }
    acc = std::move(next);
    low += lo;
  }
  return acc;
}

}  // namespace oracle
