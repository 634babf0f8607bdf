#include "adnrg/ball.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "adnrg/error.hpp"
#include "adnrg/lattice.hpp"
#include "adnrg/parallel.hpp"
#include "adnrg/quadrature.hpp"

namespace adnrg {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

void require_dim(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "ball dimension must be >= 1");
}

void require_same_dims(const std::vector<BallSpec>& specs) {
  for (const auto& s : specs) {
    if (s.dim() != specs.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch, "balls of different dimensions");
    }
  }
}

/// d * omega_d, the surface area of the unit sphere S^{d-1}.
double sphere_area(std::size_t dim) { return static_cast<double>(dim) * unit_ball_volume(dim); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double resolve_tol(double tol, std::size_t dim) { return tol > 0.0 ? tol : default_tolerance(dim); }

QuadratureEstimate radial_estimate(std::size_t dim, const QuadratureResult& q) {
  QuadratureEstimate e;
  const double area = sphere_area(dim);
  e.value = area * q.value;
  e.abs_error_bound = area * q.abs_error;
  e.method = IntegrationMethod::RadialQuadrature;
  e.samples_or_nodes = q.nodes;
  return e;
}

}  // namespace

double unit_ball_volume(std::size_t dim) {
  require_dim(dim);
  const double half = 0.5 * static_cast<double>(dim);
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

BallSpec::BallSpec(std::size_t dim, double volume) : dim_(dim), volume_(volume) {
  require_dim(dim);
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw Error(ErrorCode::InvalidArgument, "ball volume must be positive and finite");
  }
  radius_ = std::pow(volume / unit_ball_volume(dim), 1.0 / static_cast<double>(dim));
}

BallSpec BallSpec::from_radius(std::size_t dim, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "ball radius must be positive");
  return BallSpec(dim, unit_ball_volume(dim) * std::pow(radius, static_cast<double>(dim)));
}

std::string to_string(IntegrationMethod m) {
  return m == IntegrationMethod::MonteCarlo ? "monte-carlo" : "radial-quadrature";
}

double cap_volume(std::size_t dim, double radius, double height) {
  require_dim(dim);
  const double h = std::clamp(height, 0.0, 2.0 * radius);
  const double full = unit_ball_volume(dim) * std::pow(radius, static_cast<double>(dim));
  if (h > radius) return full - cap_volume(dim, radius, 2.0 * radius - h);
  if (h <= 0.0) return 0.0;
  const double x = std::min(1.0, (2.0 * radius * h - h * h) / (radius * radius));
  return 0.5 * full * boost::math::ibeta(0.5 * (static_cast<double>(dim) + 1.0), 0.5, x);
}

double lens_volume(std::size_t dim, double r1, double r2, double t) {
  require_dim(dim);
  if (!(r1 > 0.0) || !(r2 > 0.0) || !(t >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lens_volume needs r1, r2 > 0 and t >= 0");
  }
  if (t >= r1 + r2) return 0.0;
  if (t <= std::abs(r1 - r2)) {
    return unit_ball_volume(dim) * std::pow(std::min(r1, r2), static_cast<double>(dim));
  }
  // the radical hyperplane sits at distance x from the first centre
  const double x = (t * t + r1 * r1 - r2 * r2) / (2.0 * t);
  return cap_volume(dim, r1, r1 - x) + cap_volume(dim, r2, r2 - (t - x));
}

double default_tolerance(std::size_t dim) { return dim <= 3 ? 1e-9 : 1e-7; }

QuadratureEstimate ball_E3(const BallSpec& b1, const BallSpec& b2, const BallSpec& b3,
                           double tol) {
  require_same_dims({b1, b2, b3});
  const std::size_t d = b1.dim();
  const double r2 = b2.radius();
  const double r3 = b3.radius();
  const double dd = static_cast<double>(d);
  auto integrand = [&](double rho) {
    return std::pow(rho, dd - 1.0) * lens_volume(d, r2, r3, rho);
  };
  const auto q = integrate_adaptive(integrand, 0.0, b1.radius(), {std::abs(r2 - r3), r2 + r3},
                                    resolve_tol(tol, d) / sphere_area(d));
  return radial_estimate(d, q);
}

QuadratureEstimate ball_E4(const BallSpec& b1, const BallSpec& b2, const BallSpec& b3,
                           const BallSpec& b4, double tol) {
  require_same_dims({b1, b2, b3, b4});
  const std::size_t d = b1.dim();
  const double r1 = b1.radius(), r2 = b2.radius(), r3 = b3.radius(), r4 = b4.radius();
  const double dd = static_cast<double>(d);
  auto integrand = [&](double rho) {
    return std::pow(rho, dd - 1.0) * lens_volume(d, r1, r2, rho) * lens_volume(d, r3, r4, rho);
  };
  const double upper = std::min(r1 + r2, r3 + r4);
  const auto q = integrate_adaptive(integrand, 0.0, upper,
                                    {std::abs(r1 - r2), std::abs(r3 - r4), r1 + r2, r3 + r4},
                                    resolve_tol(tol, d) / sphere_area(d));
  return radial_estimate(d, q);
}

QuadratureEstimate ball_E4_symmetric(const BallSpec& b, double tol) {
  return ball_E4(b, b, b, b, tol);
}

QuadratureEstimate ball_Ek_quadrature(const std::vector<BallSpec>& specs, double tol) {
  if (specs.size() == 3) return ball_E3(specs[0], specs[1], specs[2], tol);
  if (specs.size() == 4) return ball_E4(specs[0], specs[1], specs[2], specs[3], tol);
  throw Error(ErrorCode::InvalidArgument,
              "radial quadrature covers k = 3 and k = 4; use monte carlo for k = " +
                  std::to_string(specs.size()));
}

QuadratureEstimate ball_Ek_montecarlo(const std::vector<BallSpec>& specs, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (specs.size() < 3) throw Error(ErrorCode::InvalidArgument, "E_k needs k >= 3 balls");
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  require_same_dims(specs);
  const std::size_t d = specs.front().dim();
  const std::size_t k = specs.size();
  const double dd = static_cast<double>(d);
  const double target_r2 = specs.back().radius() * specs.back().radius();

  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(c + 1)));
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform;
    const std::uint64_t n = std::min(kChunk, samples - c * kChunk);
    std::vector<double> dir(d), sum(d);
    std::uint64_t local = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
      std::fill(sum.begin(), sum.end(), 0.0);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        double norm2 = 0.0;
        for (auto& x : dir) {
          x = normal(rng);
          norm2 += x * x;
        }
        const double radius = specs[i].radius() * std::pow(uniform(rng), 1.0 / dd);
        const double scale = radius / std::sqrt(norm2);
        for (std::size_t j = 0; j < d; ++j) sum[j] += scale * dir[j];
      }
      double s2 = 0.0;
      for (double x : sum) s2 += x * x;
      if (s2 <= target_r2) ++local;
    }
    hits[c] = local;
  });

  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  double product = 1.0;
  for (std::size_t i = 0; i + 1 < k; ++i) product *= specs[i].volume();
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(total) / n;
  QuadratureEstimate e;
  e.value = p * product;
  e.abs_error_bound = 3.0 * std::sqrt(p * (1.0 - p) / n) * product;
  e.method = IntegrationMethod::MonteCarlo;
  e.samples_or_nodes = samples;
  e.seed = seed;
  return e;
}

QuadratureEstimate energy_constant_e(std::size_t dim, double tol) {
  return ball_E4_symmetric(BallSpec(dim, 1.0), tol);
}

QuadratureEstimate energy_constant_c(std::size_t dim, double tol) {
  const BallSpec b(dim, 1.0);
  return ball_E3(b, b, b, tol);
}

double hausdorff_young_constant(std::size_t dim) {
  return std::pow(4.0 * std::sqrt(3.0) / 9.0, static_cast<double>(dim));
}

HyReport hy_bound_check(std::size_t dim, IntegrationMethod method, std::uint64_t samples,
                        std::uint64_t seed) {
  require_dim(dim);
  if (dim > 6) throw Error(ErrorCode::InvalidArgument, "hy_bound_check supports d <= 6");
  HyReport r;
  r.dim = dim;
  if (method == IntegrationMethod::MonteCarlo) {
    const BallSpec b(dim, 1.0);
    r.e_d = ball_Ek_montecarlo({b, b, b, b}, samples, seed);
  } else {
    r.e_d = energy_constant_e(dim);
  }
  r.bound = hausdorff_young_constant(dim);
  r.holds = r.e_d.value <= r.bound + r.e_d.abs_error_bound;
  return r;
}

SuperadditivityReport superadditivity_check(std::size_t dim, const std::vector<double>& c_volumes,
                                            const std::vector<double>& d_volumes,
                                            std::uint64_t samples, std::uint64_t seed) {
  require_dim(dim);
  if (c_volumes.size() != d_volumes.size() || c_volumes.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "superadditivity needs two families of k >= 3 balls");
  }
  const std::size_t k = c_volumes.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (c_volumes[i] < 0.0 || d_volumes[i] < 0.0 || c_volumes[i] + d_volumes[i] <= 0.0) {
      throw Error(ErrorCode::InvalidArgument, "volumes must be non-negative, combined positive");
    }
  }
  auto energy = [&](const std::vector<double>& vols, std::uint64_t family_seed) {
    if (std::any_of(vols.begin(), vols.end(), [](double v) { return v == 0.0; })) {
      return QuadratureEstimate{};
    }
    std::vector<BallSpec> specs;
    for (double v : vols) specs.emplace_back(dim, v);
    if (k <= 4) return ball_Ek_quadrature(specs);
    return ball_Ek_montecarlo(specs, samples, family_seed);
  };

  SuperadditivityReport r;
  for (std::size_t i = 0; i < k; ++i) r.combined_volumes.push_back(c_volumes[i] + d_volumes[i]);
  r.e_combined = energy(r.combined_volumes, seed);
  r.e_c = energy(c_volumes, seed + 1);
  r.e_d = energy(d_volumes, seed + 2);
  r.margin = r.e_combined.value - r.e_c.value - r.e_d.value;
  r.tolerance = r.e_combined.abs_error_bound + r.e_c.abs_error_bound + r.e_d.abs_error_bound;
  r.holds = r.margin >= -r.tolerance;
  return r;
}

ConvergenceReport discretization_convergence(std::size_t dim, const std::vector<Rational>& radii,
                                             const EngineConfig& cfg) {
  ConvergenceReport r;
  r.dim = dim;
  const double continuum = energy_constant_e(dim).value;
  for (const auto& radius : radii) {
    ConvergenceRow row;
    row.radius = radius;
    const LatticeSet ball = lattice_ball(dim, radius);
    row.size = ball.size();
    row.lattice = additive_energy(ball, cfg);
    row.lattice_value = to_double(row.lattice.normalized);
    row.continuum = continuum;
    row.difference = row.lattice_value - continuum;
    r.rows.push_back(std::move(row));
  }
  r.monotone = true;
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    if (!(std::abs(r.rows[i].difference) < std::abs(r.rows[i - 1].difference))) {
      r.monotone = false;
    }
  }
  return r;
}

}  // namespace adnrg
