#include <gtest/gtest.h>

#include <map>
#include <random>

#include "adnrg/compression.hpp"
#include "adnrg/error.hpp"
#include "adnrg/sampling.hpp"
#include "oracle.hpp"

using namespace adnrg;

namespace {

LatticeSet pts2(std::initializer_list<Point> p) { return LatticeSet(2, p); }

/// Column-by-column reference for C_axis: count each fiber, emit [-floor(l/2), floor(l/2)].
LatticeSet naive_compress(const LatticeSet& a, std::size_t axis) {
  std::map<std::vector<Coord>, Coord> length;
  for (const auto& p : oracle::rows(a)) {
    auto key = p;
    key[axis] = 0;
    ++length[key];
  }
  std::vector<Point> out;
  for (auto [fiber, l] : length) {
    auto key = fiber;
    for (Coord x = -(l / 2); x <= l / 2; ++x) {
      key[axis] = x;
      out.emplace_back(key);
    }
  }
  return LatticeSet(a.dim(), out);
}

}  // namespace

TEST(CenteredInterval, Examples) {
  EXPECT_EQ(centered_interval(3), LatticeSet::line({-1, 0, 1}));
  EXPECT_EQ(centered_interval(4), LatticeSet::line({-2, -1, 0, 1, 2}));
  EXPECT_EQ(centered_interval(1), LatticeSet::line({0}));
  EXPECT_THROW(centered_interval(0), Error);
}

TEST(Compress, Examples) {
  EXPECT_EQ(compress(LatticeSet::line({0, 2, 5}), 0), LatticeSet::line({-1, 0, 1}));
  EXPECT_EQ(compress(pts2({{0, 3}, {0, 7}, {1, 1}}), 1),
            pts2({{0, -1}, {0, 0}, {0, 1}, {1, 0}}));
  const LatticeSet fixed = pts2({{-1, 0}, {0, 0}, {1, 0}});
  EXPECT_EQ(compress(fixed, 0), fixed);
  EXPECT_THROW(compress(fixed, 2), Error);
}

TEST(Compress, MatchesColumnReference) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = oracle::random_set(d, 1 + rng() % 20, -4, 4, rng);
    for (std::size_t axis = 0; axis < d; ++axis) {
      EXPECT_EQ(compress(a, axis), naive_compress(a, axis));
      EXPECT_TRUE(is_compressed(compress(a, axis), axis));
    }
  }
}

TEST(IsCompressed, Examples) {
  EXPECT_TRUE(is_compressed(LatticeSet::line({-1, 0, 1}), 0));
  EXPECT_FALSE(is_compressed(LatticeSet::line({0, 2}), 0));
  for (Coord r : {1, 3, 7, 12}) EXPECT_TRUE(is_downset(lattice_ball(2, r)));
}

TEST(DownsetTransform, OddLineBecomesCenteredInterval) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 3u, 5u, 9u}) {
    const auto a = oracle::random_set(1, n, -30, 30, rng);
    EXPECT_EQ(downset_transform(a), centered_interval(static_cast<Coord>(n)));
  }
}

TEST(DownsetTransform, RandomSetsInSmallBox) {
  std::mt19937_64 rng(500);
  const BoxShape box({2, 2});
  for (int t = 0; t < 500; ++t) {
    const LatticeSet a = random_subset(box, 1 + rng() % 25, rng);
    const LatticeSet b = downset_transform(a);
    EXPECT_TRUE(is_downset(b));
    EXPECT_LE(Rational(b.size()), Rational(a.size()) + boundary_measure(box));
  }
}

TEST(CompressionReport, GrowsEnergyOnExample) {
  const LatticeSet a = LatticeSet::line({0, 2});
  const std::vector<LatticeSet> sets{a, a, a};
  const CompressionReport r = compression_report(sets, BoxShape({2}), 0);
  EXPECT_EQ(r.before.value, oracle::energy(sets));
  const LatticeSet c = compress(a, 0);
  EXPECT_EQ(r.after.value, oracle::energy({c, c, c}));
  EXPECT_GE(r.after.value, r.before.value);
  EXPECT_TRUE(r.holds());
}

TEST(CompressionReport, IdentityOnCompressedInput) {
  const LatticeSet a = pts2({{-1, 0}, {0, 0}, {1, 0}, {0, 1}});
  const CompressionReport r = compression_report({a, a, negate(a)}, BoxShape({2, 2}), 0);
  EXPECT_EQ(r.after.value, r.before.value);
}

TEST(CompressionReport, RandomTrials) {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 2;
    const BoxShape box(std::vector<Coord>(d, 2));
    std::vector<LatticeSet> sets;
    for (std::size_t i = 0; i < 3 + t % 2; ++i) sets.push_back(random_subset(box, 1 + rng() % 15, rng));
    for (std::size_t axis = 0; axis < d; ++axis) {
      const CompressionReport r = compression_report(sets, box, axis);
      EXPECT_TRUE(r.holds()) << "trial " << t << " axis " << axis;
    }
  }
}

TEST(CompressionReport, RejectsSetsOutsideTheBox) {
  try {
    compression_report({LatticeSet::line({5}), LatticeSet::line({0}), LatticeSet::line({0})},
                       BoxShape({2}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfBox);
  }
}

TEST(ShiftStability, ZeroShiftHasNoDeficit) {
  const LatticeSet a = centered_interval(5);
  const ShiftStabilityReport r = downset_shift_stability({a, a, a}, BoxShape({3}), Point{0});
  EXPECT_EQ(r.deficit, 0);
  EXPECT_EQ(r.shifted_count, r.energy);
}

TEST(ShiftStability, IntervalDeficitIsLinearInShift) {
  const BoxShape box({10});
  for (Coord n : {3, 5, 7}) {
    const LatticeSet a = centered_interval(n);
    for (std::size_t k : {3u, 4u}) {
      const std::vector<LatticeSet> sets(k, a);
      for (Coord s = -3; s <= 3; ++s) {
        const ShiftStabilityReport r = downset_shift_stability(sets, box, Point{s});
        BigInt prefix = 1;
        for (std::size_t i = 0; i + 2 < k; ++i) prefix *= a.size();
        EXPECT_LE(r.deficit, BigInt(k) * (s < 0 ? -s : s) * prefix);
        std::vector<LatticeSet> shifted = sets;
        shifted.back() = translate(sets.back(), Point{-s});
        EXPECT_EQ(r.shifted_count, oracle::energy(shifted));
      }
    }
  }
}

TEST(ShiftStability, RequiresDownset) {
  const LatticeSet a = LatticeSet::line({0, 2});
  try {
    downset_shift_stability({a, a, a}, BoxShape({3}), Point{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDownset);
  }
}
