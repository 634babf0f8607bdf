#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "adnrg/lattice.hpp"

namespace adnrg {

/// Seed for trial `index` of a run with master seed `master` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform subset of the box of exactly `size` points, drawn without replacement.
LatticeSet random_subset(const BoxShape& box, std::size_t size, std::mt19937_64& rng);

/// Uniform point of the box.
Point random_point(const BoxShape& box, std::mt19937_64& rng);

/// Uniform integer in [lo, hi].
std::size_t uniform_size(std::size_t lo, std::size_t hi, std::mt19937_64& rng);

}  // namespace adnrg
