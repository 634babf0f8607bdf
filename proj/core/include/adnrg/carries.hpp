#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adnrg/lattice.hpp"
#include "adnrg/numeric.hpp"

namespace adnrg {

/// Candidate lifts for each residue class of (Z/bZ)^d, indexed like RepSystem classes.
using RepWindow = std::vector<std::vector<Point>>;

/// A complete set of coset representatives for (bZ)^d in Z^d.
///
/// Class index is the mixed-radix value of the residue vector in [0, b)^d, last coordinate
/// least significant.
class RepSystem {
 public:
  RepSystem(Coord base, std::size_t dim, std::vector<Point> reps);

  Coord base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t class_count() const noexcept { return reps_.size(); }
  const std::vector<Point>& reps() const noexcept { return reps_; }
  LatticeSet as_set() const;

  static std::size_t class_count(Coord base, std::size_t dim);
  /// Residue vector of class `index`.
  static Point residue(Coord base, std::size_t dim, std::size_t index);
  static std::size_t class_of(Coord base, const Point& p);

 private:
  Coord base_;
  std::size_t dim_;
  std::vector<Point> reps_;
};

/// Each class gets 2^d lifts: the canonical one in [0, b)^d with any subset of coordinates
/// shifted by -b.
RepWindow default_window(Coord base, std::size_t dim);

/// The box [-(b-1)/2, (b-1)/2]^d, b odd.
RepSystem centered_box_system(Coord base, std::size_t dim);

/// c(A) = E_3(A, A, -A) / |A|^2.
Rational carry_probability(const RepSystem& sys);

enum class Objective { Max, Min };
enum class SearchMode { Exhaustive, Local, Centered };
std::string to_string(Objective o);
std::string to_string(SearchMode m);

struct SearchResult {
  RepSystem best_system;
  Rational best_c;
  std::vector<std::pair<std::size_t, Rational>> trajectory;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t steps = 0;  ///< systems visited (exhaustive) or moves taken (local)
};

/// Number of ordered triples (a_1, a_2, a_3) in A^3 with a_1 + a_2 = a_3, kept up to date
/// under single-point insertions and removals in O(|A|) each.
class TripleCounter {
 public:
  explicit TripleCounter(std::size_t dim);

  void insert(const Point& p);
  void erase(const Point& p);
  std::uint64_t triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  /// Triples of the current set that use p at least once (p must be a member).
  std::uint64_t touching(const Point& p) const;
  bool member(const Point& p) const;

  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<Point> sorted_;
  std::uint64_t triples_ = 0;
};

struct SearchConfig {
  Objective objective = Objective::Max;
  std::uint64_t seed = 1;
  std::size_t restarts = 16;
  /// Largest number of systems exhaustive_search will visit.
  std::uint64_t budget = std::uint64_t{1} << 24;
};

/// True optimum over every system whose lifts come from the window.
SearchResult exhaustive_search(Coord base, std::size_t dim, const RepWindow& window,
                               const SearchConfig& cfg = {});

/// Steepest-ascent hill climbing over single-class swaps with seeded random restarts.
/// For the max objective with odd b, restart 0 starts from the centered box whenever it is
/// in the window.
SearchResult local_search(Coord base, std::size_t dim, const RepWindow& window,
                          const SearchConfig& cfg = {});

struct CorollaryRow {
  Coord base = 0;
  bool centered_available = false;
  Rational centered_c;
  Rational best_c;
  SearchMode best_mode = SearchMode::Exhaustive;
  double ball_constant = 0.0;   ///< c_d
  double conjectured = 0.0;     ///< (3/4)^d, reported as a conjecture only
};

struct CorollaryScan {
  std::size_t dim = 0;
  std::vector<CorollaryRow> rows;
  bool within_trivial_bound = false;     ///< every best_c <= 1
  bool centered_decreasing = false;      ///< centered-box values decrease along odd b
};

CorollaryScan corollary_scan(std::size_t dim, const std::vector<Coord>& bases,
                             const SearchConfig& cfg = {});

}  // namespace adnrg
