#include "adnrg/sampling.hpp"

#include <unordered_set>

#include "adnrg/error.hpp"

namespace adnrg {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::size_t uniform_size(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty size range");
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Point random_point(const BoxShape& box, std::mt19937_64& rng) {
  Point p = Point::zero(box.dim());
  for (std::size_t j = 0; j < box.dim(); ++j) {
    const Coord n = box.half_widths()[j];
    p[j] = std::uniform_int_distribution<Coord>(-n, n)(rng);
  }
  return p;
}

LatticeSet random_subset(const BoxShape& box, std::size_t size, std::mt19937_64& rng) {
  const BigInt total = box.size();
  if (BigInt(size) > total) {
    throw Error(ErrorCode::InvalidArgument, "subset larger than the box");
  }
  if (total > BigInt(std::uint64_t{1} << 40)) {
    throw Error(ErrorCode::BudgetExceeded, "box too large to sample from");
  }
  const auto n = static_cast<std::uint64_t>(total);
  // Floyd's algorithm over linear indices
  std::unordered_set<std::uint64_t> chosen;
  for (std::uint64_t j = n - size; j < n; ++j) {
    const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Point> pts;
  pts.reserve(size);
  for (std::uint64_t index : chosen) {
    Point p = Point::zero(box.dim());
    for (std::size_t j = box.dim(); j-- > 0;) {
      const auto side = static_cast<std::uint64_t>(box.side(j));
      p[j] = static_cast<Coord>(index % side) - box.half_widths()[j];
      index /= side;
    }
    pts.push_back(std::move(p));
  }
  return LatticeSet(box.dim(), std::move(pts));
}

}  // namespace adnrg
