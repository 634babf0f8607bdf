#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace adnrg {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t nodes = 0;  ///< integrand evaluations
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// `breakpoints` inside (a, b) start as panel edges so kinks of the integrand never sit
/// inside a panel. Throws ToleranceUnachievable when `max_panels` bisections are not enough.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    std::vector<double> breakpoints, double abs_tol,
                                    std::size_t max_panels = 20000);

}  // namespace adnrg
