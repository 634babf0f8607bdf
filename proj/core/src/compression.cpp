#include "adnrg/compression.hpp"

#include <map>
#include <string>

#include "adnrg/error.hpp"

namespace adnrg {

namespace {

void require_axis(const LatticeSet& a, std::size_t axis) {
  if (axis >= a.dim()) {
    throw Error(ErrorCode::InvalidArgument, "axis " + std::to_string(axis) +
                                                " out of range for dimension " +
                                                std::to_string(a.dim()));
  }
}

void require_inside(const std::vector<LatticeSet>& sets, const BoxShape& box) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!box.contains(sets[i])) {
      throw Error(ErrorCode::OutOfBox, "set " + std::to_string(i) + " is not inside the box");
    }
  }
}

Coord half_length(Coord length) { return length / 2; }

}  // namespace

LatticeSet centered_interval(Coord length) {
  if (length <= 0) throw Error(ErrorCode::InvalidArgument, "interval length must be >= 1");
  const Coord m = half_length(length);
  std::vector<Coord> flat;
  flat.reserve(static_cast<std::size_t>(2 * m + 1));
  for (Coord x = -m; x <= m; ++x) flat.push_back(x);
  return LatticeSet::from_flat(1, std::move(flat));
}

LatticeSet compress(const LatticeSet& a, std::size_t axis) {
  require_axis(a, axis);
  const std::size_t d = a.dim();
  std::map<std::vector<Coord>, Coord> column_length;
  std::vector<Coord> key(d - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = a[i];
    for (std::size_t j = 0, t = 0; j < d; ++j) {
      if (j != axis) key[t++] = p[j];
    }
    ++column_length[key];
  }

  std::vector<Coord> flat;
  std::vector<Coord> row(d);
  for (const auto& [fiber, length] : column_length) {
    // odd lengths keep their size, even lengths gain one point
    const Coord m = half_length(length);
    for (Coord x = -m; x <= m; ++x) {
      for (std::size_t j = 0, t = 0; j < d; ++j) row[j] = j == axis ? x : fiber[t++];
      flat.insert(flat.end(), row.begin(), row.end());
    }
  }
  return LatticeSet::from_flat(d, std::move(flat));
}

bool is_compressed(const LatticeSet& a, std::size_t axis) {
  require_axis(a, axis);
  return compress(a, axis) == a;
}

bool is_downset(const LatticeSet& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!is_compressed(a, i)) return false;
  }
  return true;
}

LatticeSet downset_transform(const LatticeSet& a) {
  LatticeSet out = a;
  for (std::size_t axis = a.dim(); axis-- > 0;) out = compress(out, axis);
  return out;
}

CompressionReport compression_report(const std::vector<LatticeSet>& sets, const BoxShape& box,
                                     std::size_t axis, const EngineConfig& cfg) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "compression_report: no sets");
  require_inside(sets, box);
  require_axis(sets.front(), axis);

  CompressionReport r;
  r.axis = axis;
  r.bound = box.fiber_count(axis);
  std::vector<LatticeSet> compressed;
  compressed.reserve(sets.size());
  r.size_bound_holds = true;
  for (const auto& s : sets) {
    compressed.push_back(compress(s, axis));
    r.size_before.push_back(s.size());
    r.size_after.push_back(compressed.back().size());
    if (BigInt(compressed.back().size()) > BigInt(s.size()) + r.bound) r.size_bound_holds = false;
  }
  r.before = energy_fast(sets, cfg);
  r.after = energy_fast(compressed, cfg);
  r.energy_monotone = r.after.value >= r.before.value;
  return r;
}

DownsetReport downset_report(const std::vector<LatticeSet>& sets, const BoxShape& box,
                             const EngineConfig& cfg) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "downset_report: no sets");
  require_inside(sets, box);
  DownsetReport r;
  r.bound = boundary_measure(box);
  r.all_downsets = true;
  r.size_bound_holds = true;
  for (const auto& s : sets) {
    r.transformed.push_back(downset_transform(s));
    const auto& t = r.transformed.back();
    if (!is_downset(t)) r.all_downsets = false;
    if (Rational(t.size()) > Rational(s.size()) + r.bound) r.size_bound_holds = false;
  }
  r.before = energy_fast(sets, cfg);
  r.after = energy_fast(r.transformed, cfg);
  r.energy_monotone = r.after.value >= r.before.value;
  return r;
}

ShiftStabilityReport downset_shift_stability(const std::vector<LatticeSet>& sets,
                                             const BoxShape& box, const Point& shift,
                                             const EngineConfig& cfg) {
  if (sets.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "downset_shift_stability needs k >= 3 sets");
  }
  require_inside(sets, box);
  if (!is_downset(sets.back())) {
    throw Error(ErrorCode::NotDownset, "the last set must be a down-set");
  }
  ShiftStabilityReport r;
  r.energy = energy_fast(sets, cfg).value;
  r.shifted_count = representation_count(sets, shift, cfg);
  r.deficit = r.energy - r.shifted_count;
  BigInt prefix = 1;
  for (std::size_t i = 0; i + 2 < sets.size(); ++i) prefix *= sets[i].size();
  r.scale = Rational(prefix) * boundary_measure(box);
  r.ratio = r.scale == 0 ? 0.0 : to_double(Rational(r.deficit) / r.scale);
  return r;
}

}  // namespace adnrg
