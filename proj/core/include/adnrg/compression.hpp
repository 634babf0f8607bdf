#pragma once

#include <cstddef>
#include <vector>

#include "adnrg/energy.hpp"
#include "adnrg/lattice.hpp"

namespace adnrg {

/// I(l): the interval [-m, m] with 2m + 1 = l for odd l and l + 1 for even l. Requires l >= 1.
LatticeSet centered_interval(Coord length);

/// C_i(A): each line parallel to `axis` that meets A is replaced by the centered interval
/// I(l), l being the number of points A has on that line. Axes are 0-based.
LatticeSet compress(const LatticeSet& a, std::size_t axis);

bool is_compressed(const LatticeSet& a, std::size_t axis);
/// Compressed along every axis.
bool is_downset(const LatticeSet& a);

/// C_0 C_1 ... C_{d-1}(A), applied right to left (the last axis first).
LatticeSet downset_transform(const LatticeSet& a);

struct CompressionReport {
  std::size_t axis = 0;
  EnergyResult before;
  EnergyResult after;
  std::vector<std::size_t> size_before;
  std::vector<std::size_t> size_after;
  /// Allowed growth per set, |P| / (2N_i + 1).
  BigInt bound;
  bool energy_monotone = false;
  bool size_bound_holds = false;

  bool holds() const { return energy_monotone && size_bound_holds; }
};

/// E_k before and after C_axis, and the per-set size growth against |P| / (2N_axis + 1).
CompressionReport compression_report(const std::vector<LatticeSet>& sets, const BoxShape& box,
                                     std::size_t axis, const EngineConfig& cfg = {});

struct DownsetReport {
  std::vector<LatticeSet> transformed;
  EnergyResult before;
  EnergyResult after;
  Rational bound;  ///< lambda(dP)
  bool all_downsets = false;
  bool size_bound_holds = false;
  bool energy_monotone = false;

  bool holds() const { return all_downsets && size_bound_holds && energy_monotone; }
};

/// Applies downset_transform to every set and checks the down-set property, the growth bound
/// |A'| <= |A| + lambda(dP), and E_k(A) <= E_k(A').
DownsetReport downset_report(const std::vector<LatticeSet>& sets, const BoxShape& box,
                             const EngineConfig& cfg = {});

struct ShiftStabilityReport {
  BigInt energy;          ///< E_k(A_1, ..., A_k)
  BigInt shifted_count;   ///< S_k(A_1, ..., A_k; s)
  BigInt deficit;         ///< energy - shifted_count, may be negative
  Rational scale;         ///< |A_1| ... |A_{k-2}| * lambda(dP)
  double ratio = 0.0;     ///< deficit / scale; 0 when scale is 0
};

/// Requires the last set to be a down-set and every set to lie in the box.
ShiftStabilityReport downset_shift_stability(const std::vector<LatticeSet>& sets,
                                             const BoxShape& box, const Point& shift,
                                             const EngineConfig& cfg = {});

}  // namespace adnrg
