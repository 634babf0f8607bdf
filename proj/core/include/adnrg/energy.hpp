#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "adnrg/lattice.hpp"
#include "adnrg/numeric.hpp"

namespace adnrg {

/// Limits shared by the counting engines.
struct EngineConfig {
  /// Maximum number of (k-1)-tuples the brute-force oracle will enumerate.
  std::uint64_t oracle_cap = 100'000'000;
  /// Maximum bytes for one dense convolution grid.
  std::uint64_t memory_budget = std::uint64_t{1} << 30;
};

/// Exact counts S_m(A_1,...,A_m; s) = #{a_1 + ... + a_m = s}. Zero entries are omitted.
class RepTable {
 public:
  RepTable(std::size_t dim, std::size_t arity, std::vector<std::pair<Point, BigInt>> entries);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t arity() const noexcept { return arity_; }
  /// Sorted by point.
  const std::vector<std::pair<Point, BigInt>>& entries() const noexcept { return entries_; }
  BigInt count(const Point& s) const;
  BigInt total_mass() const;

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::vector<std::pair<Point, BigInt>> entries_;
};

struct EnergyResult {
  /// Unnormalized E_k.
  BigInt value;
  /// value / prod_{i<k} |A_i|; this is e(A) for (A, A, -A, -A) and c(A) for (A, A, -A).
  Rational normalized;
};

/// E_k by enumerating A_1 x ... x A_{k-1} and testing -(a_1 + ... + a_{k-1}) in A_k.
EnergyResult energy_bruteforce(const std::vector<LatticeSet>& sets,
                               const EngineConfig& cfg = {});

/// Iterated dense-grid convolution over the running Minkowski bounding box.
RepTable rep_table(const std::vector<LatticeSet>& sets, const EngineConfig& cfg = {});

/// E_k from the convolution of the k-1 smallest sets, read off against the largest.
EnergyResult energy_fast(const std::vector<LatticeSet>& sets, const EngineConfig& cfg = {});

/// S_k(A_1, ..., A_k; s) = E_k(A_1, ..., A_{k-1}, A_k - s).
BigInt representation_count(const std::vector<LatticeSet>& sets, const Point& s,
                            const EngineConfig& cfg = {});

/// e(A) = E_4(A, A, -A, -A) / |A|^3.
EnergyResult additive_energy(const LatticeSet& a, const EngineConfig& cfg = {});

/// c(A) = E_3(A, A, -A) / |A|^2.
EnergyResult carry_density(const LatticeSet& a, const EngineConfig& cfg = {});

/// Both sides of E_k(Y) <= |Y_4|...|Y_k| |Y_3|^{1/2} E_4(Y_1, Y_2, -Y_1, -Y_2)^{1/2}.
/// The comparison is done on squares, so it is exact.
struct SmallEnergyReport {
  BigInt lhs;
  BigInt e4;
  BigInt rhs_squared;
  bool holds = false;
  /// sqrt(rhs_squared), informational only.
  double rhs = 0.0;
};

SmallEnergyReport small_energy_bound_check(const std::vector<LatticeSet>& ys,
                                           const EngineConfig& cfg = {});

}  // namespace adnrg
