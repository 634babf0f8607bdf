#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "adnrg/numeric.hpp"

namespace adnrg {

using Coord = std::int64_t;

/// A point of Z^d. Dimension is the number of coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Point(std::span<const Coord> coords) : coords_(coords.begin(), coords.end()) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Coord>(dim, 0)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  Point operator-() const;
  Point& operator+=(const Point& other);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(const Point& a, const Point& b) { return a + (-b); }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

/// Finite subset of Z^d, deduplicated and stored in lexicographic order.
///
/// Points live in one flat row-major buffer; `operator[]` hands out spans into it.
class LatticeSet {
 public:
  explicit LatticeSet(std::size_t dim = 1);
  LatticeSet(std::size_t dim, const std::vector<Point>& points);
  LatticeSet(std::size_t dim, std::initializer_list<Point> points)
      : LatticeSet(dim, std::vector<Point>(points)) {}

  /// 1-d convenience: {0, 1, 2} etc.
  static LatticeSet line(std::initializer_list<Coord> values);
  /// Takes `flat.size() / dim` rows; sorts and removes duplicates.
  static LatticeSet from_flat(std::size_t dim, std::vector<Coord> flat);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const Coord> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  Point point(std::size_t i) const { return Point((*this)[i]); }
  std::vector<Point> points() const;
  std::span<const Coord> flat() const noexcept { return coords_; }

  bool contains(std::span<const Coord> p) const;
  bool contains(const Point& p) const { return contains(p.coords()); }

  /// Coordinate-wise minimum and maximum. Requires a nonempty set.
  Point lower() const;
  Point upper() const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Coord> coords_;
};

/// The symmetric box P = prod [-N_i, N_i] ∩ Z^d.
class BoxShape {
 public:
  explicit BoxShape(std::vector<Coord> half_widths);

  std::size_t dim() const noexcept { return half_widths_.size(); }
  const std::vector<Coord>& half_widths() const noexcept { return half_widths_; }
  Coord side(std::size_t i) const { return 2 * half_widths_[i] + 1; }

  /// |P| = prod (2N_i + 1).
  BigInt size() const;
  /// |P| / (2N_i + 1): the number of lines parallel to axis i.
  BigInt fiber_count(std::size_t axis) const;
  bool contains(std::span<const Coord> p) const;
  bool contains(const LatticeSet& set) const;

 private:
  std::vector<Coord> half_widths_;
};

/// Generalized arithmetic progression {x_0 + sum n_i x_i : 0 <= n_i < N_i}.
struct ProgressionSpec {
  Point base;
  std::vector<Point> generators;
  std::vector<Coord> lengths;

  std::size_t rank() const noexcept { return generators.size(); }
  /// prod N_i, the size when the progression is proper.
  BigInt nominal_size() const;
  LatticeSet enumerate() const;
  bool is_proper() const;
};

LatticeSet sumset(const LatticeSet& a, const LatticeSet& b);
/// |A + A| / |A|.
Rational doubling(const LatticeSet& a);
LatticeSet negate(const LatticeSet& a);
LatticeSet translate(const LatticeSet& a, const Point& t);

/// |P| * sum (2N_i + 1)^{-1}.
Rational boundary_measure(const BoxShape& box);

/// All integer points with |x|^2 <= R^2, R given as an exact non-negative rational.
LatticeSet lattice_ball(std::size_t dim, const Rational& radius);

/// Folds the trailing axes of a set lying in the box `half_widths` (rank r) into one axis.
///
/// Axes [0, keep_dims) pass through; axes keep_dims..r-1 are packed as balanced digits with
/// radix 2*k*N_j + 1, so k-fold sums never carry between digits and the map is a Freiman
/// k-isomorphism onto its image in Z^{keep_dims + 1}.
LatticeSet fold_isomorphism(const LatticeSet& a, const std::vector<Coord>& half_widths,
                            std::size_t keep_dims, std::size_t k);

}  // namespace adnrg
