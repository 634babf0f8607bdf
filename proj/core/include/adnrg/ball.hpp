#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "adnrg/energy.hpp"

namespace adnrg {

/// Volume of the unit ball in R^d.
double unit_ball_volume(std::size_t dim);

/// Closed origin-centred ball in R^d, specified by its Lebesgue measure.
class BallSpec {
 public:
  BallSpec(std::size_t dim, double volume);
  static BallSpec from_radius(std::size_t dim, double radius);

  std::size_t dim() const noexcept { return dim_; }
  double volume() const noexcept { return volume_; }
  double radius() const noexcept { return radius_; }

 private:
  std::size_t dim_;
  double volume_;
  double radius_;
};

enum class IntegrationMethod { RadialQuadrature, MonteCarlo };
std::string to_string(IntegrationMethod m);

struct QuadratureEstimate {
  double value = 0.0;
  double abs_error_bound = 0.0;
  IntegrationMethod method = IntegrationMethod::RadialQuadrature;
  std::uint64_t samples_or_nodes = 0;
  std::uint64_t seed = 0;  ///< Monte Carlo only
};

/// Volume of the cap {x in B(r) : x_1 >= r - h}, 0 <= h <= 2r.
double cap_volume(std::size_t dim, double radius, double height);

/// lambda(B(r1) ∩ (B(r2) + t e_1)).
double lens_volume(std::size_t dim, double r1, double r2, double t);

/// Default absolute tolerance: 1e-9 for d <= 3, 1e-7 above.
double default_tolerance(std::size_t dim);

/// E_3(B_1, B_2, B_3) = ∫_{B_1} lens(r_2, r_3, |x|) dx as a one-dimensional radial integral.
QuadratureEstimate ball_E3(const BallSpec& b1, const BallSpec& b2, const BallSpec& b3,
                           double tol = 0.0);

/// E_4(B_1, B_2, B_3, B_4) = ∫ lens(r_1, r_2, |x|) lens(r_3, r_4, |x|) dx.
QuadratureEstimate ball_E4(const BallSpec& b1, const BallSpec& b2, const BallSpec& b3,
                           const BallSpec& b4, double tol = 0.0);

/// E_4(B, B, -B, -B), the square norm of the ball autocorrelation.
QuadratureEstimate ball_E4_symmetric(const BallSpec& b, double tol = 0.0);

/// Dispatches to ball_E3 / ball_E4 (k = 3 or 4 only).
QuadratureEstimate ball_Ek_quadrature(const std::vector<BallSpec>& specs, double tol = 0.0);

/// Uniform sampling of B_1 x ... x B_{k-1}; counts hits of -(a_1 + ... + a_{k-1}) in B_k.
/// Samples are split into fixed chunks with per-chunk seeds, so the estimate does not
/// depend on the worker count.
QuadratureEstimate ball_Ek_montecarlo(const std::vector<BallSpec>& specs, std::uint64_t samples,
                                      std::uint64_t seed);

/// e_d = E_4(B)/lambda(B)^3 and c_d = E_3(B, B, -B)/lambda(B)^2 on the unit-volume ball.
QuadratureEstimate energy_constant_e(std::size_t dim, double tol = 0.0);
QuadratureEstimate energy_constant_c(std::size_t dim, double tol = 0.0);

/// (4 sqrt 3 / 9)^d, the sharp Hausdorff-Young constant for q = 4.
double hausdorff_young_constant(std::size_t dim);

struct HyReport {
  std::size_t dim = 0;
  QuadratureEstimate e_d;
  double bound = 0.0;
  bool holds = false;
};

/// e_d <= (4 sqrt 3 / 9)^d, with e_d by quadrature or Monte Carlo. Requires d <= 6.
HyReport hy_bound_check(std::size_t dim, IntegrationMethod method = IntegrationMethod::RadialQuadrature,
                        std::uint64_t samples = 10'000'000, std::uint64_t seed = 1);

struct SuperadditivityReport {
  std::vector<double> combined_volumes;
  QuadratureEstimate e_combined;
  QuadratureEstimate e_c;
  QuadratureEstimate e_d;
  double margin = 0.0;  ///< E(B) - E(C) - E(D)
  double tolerance = 0.0;
  bool holds = false;
};

/// E_k(B) >= E_k(C) + E_k(D) for balls in R^dim with lambda(B_i) = lambda(C_i) + lambda(D_i).
/// Volumes may be zero (that family then has energy 0). Quadrature for k = 3, 4 and
/// Monte Carlo otherwise; the tolerance is the sum of the three error bounds.
SuperadditivityReport superadditivity_check(std::size_t dim, const std::vector<double>& c_volumes,
                                            const std::vector<double>& d_volumes,
                                            std::uint64_t samples = 2'000'000,
                                            std::uint64_t seed = 1);

struct ConvergenceRow {
  Rational radius;
  std::size_t size = 0;
  EnergyResult lattice;
  double lattice_value = 0.0;
  double continuum = 0.0;
  double difference = 0.0;
};

struct ConvergenceReport {
  std::size_t dim = 0;
  std::vector<ConvergenceRow> rows;
  bool monotone = false;  ///< |difference| strictly decreasing along rows
};

/// Exact e(lattice_ball(d, R)) for each R against the continuous e_d.
ConvergenceReport discretization_convergence(std::size_t dim, const std::vector<Rational>& radii,
                                             const EngineConfig& cfg = {});

}  // namespace adnrg
