#include "adnrg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "adnrg/error.hpp"
#include "checked.hpp"

namespace adnrg {

namespace {

void require_same_dim(const LatticeSet& a, const LatticeSet& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": dimensions " +
                                                  std::to_string(a.dim()) + " and " +
                                                  std::to_string(b.dim()));
  }
}

bool row_less(std::span<const Coord> a, std::span<const Coord> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Point Point::operator-() const {
  Point out(*this);
  for (auto& c : out.coords_) c = detail::checked_mul(c, -1, "negation");
  return out;
}

Point& Point::operator+=(const Point& other) {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point addition");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = detail::checked_add(coords_[i], other.coords_[i], "point addition");
  }
  return *this;
}

LatticeSet::LatticeSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "lattice dimension must be >= 1");
}

LatticeSet::LatticeSet(std::size_t dim, const std::vector<Point>& points) : LatticeSet(dim) {
  std::vector<Coord> flat;
  flat.reserve(points.size() * dim);
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "point of dimension " + std::to_string(p.dim()) +
                                                    " in a set of dimension " +
                                                    std::to_string(dim));
    }
    flat.insert(flat.end(), p.coords().begin(), p.coords().end());
  }
  *this = from_flat(dim, std::move(flat));
}

LatticeSet LatticeSet::line(std::initializer_list<Coord> values) {
  return from_flat(1, std::vector<Coord>(values));
}

LatticeSet LatticeSet::from_flat(std::size_t dim, std::vector<Coord> flat) {
  LatticeSet out(dim);
  if (flat.size() % dim != 0) {
    throw Error(ErrorCode::InvalidArgument, "flat coordinate buffer not a multiple of dim");
  }
  const std::size_t n = flat.size() / dim;
  auto row = [&](std::size_t i) { return std::span<const Coord>(flat.data() + i * dim, dim); };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row_less(row(a), row(b)); });

  out.coords_.reserve(flat.size());
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto r = row(order[idx]);
    if (idx > 0 && std::equal(r.begin(), r.end(), row(order[idx - 1]).begin())) continue;
    out.coords_.insert(out.coords_.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<Point> LatticeSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

bool LatticeSet::contains(std::span<const Coord> p) const {
  if (p.size() != dim_) return false;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (row_less((*this)[mid], p)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == size()) return false;
  const auto r = (*this)[lo];
  return std::equal(r.begin(), r.end(), p.begin());
}

Point LatticeSet::lower() const {
  if (empty()) throw Error(ErrorCode::EmptyInput, "bounding box of an empty set");
  Point out = point(0);
  for (std::size_t i = 1; i < size(); ++i) {
    const auto r = (*this)[i];
    for (std::size_t j = 0; j < dim_; ++j) out[j] = std::min(out[j], r[j]);
  }
  return out;
}

Point LatticeSet::upper() const {
  if (empty()) throw Error(ErrorCode::EmptyInput, "bounding box of an empty set");
  Point out = point(0);
  for (std::size_t i = 1; i < size(); ++i) {
    const auto r = (*this)[i];
    for (std::size_t j = 0; j < dim_; ++j) out[j] = std::max(out[j], r[j]);
  }
  return out;
}

BoxShape::BoxShape(std::vector<Coord> half_widths) : half_widths_(std::move(half_widths)) {
  if (half_widths_.empty()) throw Error(ErrorCode::InvalidArgument, "box of dimension 0");
  for (Coord n : half_widths_) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative box half-width");
  }
}

BigInt BoxShape::size() const {
  BigInt out = 1;
  for (std::size_t i = 0; i < dim(); ++i) out *= BigInt(half_widths_[i]) * 2 + 1;
  return out;
}

BigInt BoxShape::fiber_count(std::size_t axis) const {
  if (axis >= dim()) throw Error(ErrorCode::InvalidArgument, "axis out of range");
  BigInt out = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i != axis) out *= BigInt(half_widths_[i]) * 2 + 1;
  }
  return out;
}

bool BoxShape::contains(std::span<const Coord> p) const {
  if (p.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < -half_widths_[i] || p[i] > half_widths_[i]) return false;
  }
  return true;
}

bool BoxShape::contains(const LatticeSet& set) const {
  if (set.dim() != dim()) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!contains(set[i])) return false;
  }
  return true;
}

BigInt ProgressionSpec::nominal_size() const {
  BigInt out = 1;
  for (Coord n : lengths) out *= n;
  return out;
}

LatticeSet ProgressionSpec::enumerate() const {
  const std::size_t d = base.dim();
  if (generators.size() != lengths.size()) {
    throw Error(ErrorCode::InvalidArgument, "progression needs one length per generator");
  }
  for (const auto& g : generators) {
    if (g.dim() != d) throw Error(ErrorCode::DimensionMismatch, "progression generator");
  }
  for (Coord n : lengths) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "progression lengths must be positive");
  }
  std::vector<Coord> flat;
  std::vector<Coord> digits(rank(), 0);
  while (true) {
    Point p = base;
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        p[j] = detail::checked_add(
            p[j], detail::checked_mul(generators[i][j], digits[i], "progression"), "progression");
      }
    }
    flat.insert(flat.end(), p.coords().begin(), p.coords().end());
    std::size_t i = 0;
    while (i < rank() && ++digits[i] == lengths[i]) digits[i++] = 0;
    if (i == rank()) break;
  }
  return LatticeSet::from_flat(d, std::move(flat));
}

bool ProgressionSpec::is_proper() const { return BigInt(enumerate().size()) == nominal_size(); }

LatticeSet sumset(const LatticeSet& a, const LatticeSet& b) {
  require_same_dim(a, b, "sumset");
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "sumset of an empty set");
  const std::size_t d = a.dim();
  std::vector<Coord> flat;
  flat.reserve(a.size() * b.size() * d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto y = b[j];
      for (std::size_t c = 0; c < d; ++c) flat.push_back(detail::checked_add(x[c], y[c], "sumset"));
    }
  }
  return LatticeSet::from_flat(d, std::move(flat));
}

Rational doubling(const LatticeSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptyInput, "doubling of an empty set");
  return Rational(BigInt(sumset(a, a).size()), BigInt(a.size()));
}

LatticeSet negate(const LatticeSet& a) {
  std::vector<Coord> flat(a.flat().begin(), a.flat().end());
  for (auto& c : flat) c = detail::checked_mul(c, -1, "negate");
  return LatticeSet::from_flat(a.dim(), std::move(flat));
}

LatticeSet translate(const LatticeSet& a, const Point& t) {
  if (t.dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "translate");
  std::vector<Coord> flat(a.flat().begin(), a.flat().end());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    flat[i] = detail::checked_add(flat[i], t[i % a.dim()], "translate");
  }
  return LatticeSet::from_flat(a.dim(), std::move(flat));
}

Rational boundary_measure(const BoxShape& box) {
  Rational sum = 0;
  for (std::size_t i = 0; i < box.dim(); ++i) sum += Rational(1, box.side(i));
  return Rational(box.size()) * sum;
}

namespace {

using i128 = __int128;

i128 isqrt(i128 n) {
  if (n <= 0) return 0;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void enumerate_ball(std::size_t dim, std::size_t axis, i128 budget, i128 q2, Coord* cur,
                    std::vector<Coord>& out) {
  if (axis == dim) {
    out.insert(out.end(), cur, cur + dim);
    return;
  }
  const auto m = static_cast<Coord>(isqrt(budget / q2));
  for (Coord x = -m; x <= m; ++x) {
    cur[axis] = x;
    enumerate_ball(dim, axis + 1, budget - q2 * x * x, q2, cur, out);
  }
}

}  // namespace

LatticeSet lattice_ball(std::size_t dim, const Rational& radius) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "lattice_ball dimension must be >= 1");
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  const BigInt p = boost::multiprecision::numerator(radius);
  const BigInt q = boost::multiprecision::denominator(radius);
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  if (p > kLimit || q > kLimit) {
    throw Error(ErrorCode::InvalidArgument, "radius numerator/denominator too large");
  }
  const i128 pp = p.convert_to<std::int64_t>();
  const i128 qq = q.convert_to<std::int64_t>();
  std::vector<Coord> out;
  std::vector<Coord> cur(dim, 0);
  enumerate_ball(dim, 0, pp * pp, qq * qq, cur.data(), out);
  return LatticeSet::from_flat(dim, std::move(out));
}

LatticeSet fold_isomorphism(const LatticeSet& a, const std::vector<Coord>& half_widths,
                            std::size_t keep_dims, std::size_t k) {
  const std::size_t r = half_widths.size();
  if (a.dim() != r) {
    throw Error(ErrorCode::DimensionMismatch, "fold: set dimension differs from box rank");
  }
  if (keep_dims + 1 > r) {
    throw Error(ErrorCode::InvalidArgument, "fold needs rank >= keep_dims + 1");
  }
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "fold arity must be >= 2");
  const BoxShape box(half_widths);
  if (!box.contains(a)) {
    throw Error(ErrorCode::OutOfBox, "fold: point outside the declared box");
  }

  // place value of each folded axis
  std::vector<Coord> weight(r, 1);
  for (std::size_t j = keep_dims + 1; j < r; ++j) {
    const Coord radix = detail::checked_add(
        detail::checked_mul(detail::checked_mul(2, static_cast<Coord>(k), "fold radix"),
                            half_widths[j - 1], "fold radix"),
        1, "fold radix");
    weight[j] = detail::checked_mul(weight[j - 1], radix, "fold radix");
  }
  // the packed coordinate of a k-fold sum must also stay representable
  detail::checked_mul(detail::checked_mul(weight[r - 1], 2 * half_widths[r - 1] + 1, "fold"),
                      static_cast<Coord>(k), "fold");

  std::vector<Coord> flat;
  flat.reserve(a.size() * (keep_dims + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = a[i];
    flat.insert(flat.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(keep_dims));
    Coord packed = 0;
    for (std::size_t j = keep_dims; j < r; ++j) packed += p[j] * weight[j];
    flat.push_back(packed);
  }
  return LatticeSet::from_flat(keep_dims + 1, std::move(flat));
}

}  // namespace adnrg
