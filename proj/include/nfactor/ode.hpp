#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace nfactor {

// Adaptive Dormand-Prince 5(4) integrator for small fixed-size systems.
// Advances y from s to s_target (either direction), keeping the estimated
// local truncation error of component i below atol + rtol * |y_i| on every
// accepted step. The step size h is carried across calls so repeated short
// advances (e.g. landing on successive grid points) stay cheap.
template <int N, class F>
void integrate_rk45(F&& f, double& s, Eigen::Matrix<double, N, 1>& y,
                    double s_target, double atol, double rtol, double& h) {
  using Vec = Eigen::Matrix<double, N, 1>;
  if (!(atol > 0.0) && !(rtol > 0.0))
    throw std::invalid_argument("integrate_rk45: tolerance must be positive");
  const double dir = (s_target >= s) ? 1.0 : -1.0;
  if (h == 0.0 || h * dir < 0.0) h = dir * 1e-3;

  int rejected_in_a_row = 0;
  while (dir * (s_target - s) > 1e-14 * (1.0 + std::abs(s))) {
    if (std::abs(h) > std::abs(s_target - s)) h = s_target - s;

    const Vec k1 = f(s, y);
    const Vec k2 = f(s + h * (1.0 / 5.0), Vec(y + h * (1.0 / 5.0) * k1));
    const Vec k3 = f(s + h * (3.0 / 10.0), Vec(y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2)));
    const Vec k4 = f(s + h * (4.0 / 5.0),
                     Vec(y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3)));
    const Vec k5 = f(s + h * (8.0 / 9.0),
                     Vec(y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                                  64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4)));
    const Vec k6 = f(s + h,
                     Vec(y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                                  46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                                  5103.0 / 18656.0 * k5)));
    const Vec y5 = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                            2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
    const Vec k7 = f(s + h, y5);

    const Vec err = h * (71.0 / 57600.0 * k1 - 71.0 / 16695.0 * k3 + 71.0 / 1920.0 * k4 -
                         17253.0 / 339200.0 * k5 + 22.0 / 525.0 * k6 - 1.0 / 40.0 * k7);

    double ratio = 0.0;
    for (int i = 0; i < N; ++i) {
      const double scale =
          std::max(atol + rtol * std::max(std::abs(y(i)), std::abs(y5(i))), 1e-300);
      ratio = std::max(ratio, std::abs(err(i)) / scale);
    }

    if (!std::isfinite(ratio) || !y5.allFinite()) {
      h *= 0.25;
      if (std::abs(h) < 1e-14) throw std::runtime_error("integrate_rk45: step size underflow");
      continue;
    }

    if (ratio <= 1.0) {
      s += h;
      y = y5;
      rejected_in_a_row = 0;
    } else if (++rejected_in_a_row > 60) {
      throw std::runtime_error("integrate_rk45: repeated step rejection; tolerance infeasible");
    }

    const double grow = (ratio > 0.0) ? 0.9 * std::pow(ratio, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, grow));
    if (std::abs(h) < 1e-14) throw std::runtime_error("integrate_rk45: step size underflow");
  }
  s = s_target;
}

template <int N, class F>
void integrate_rk45(F&& f, double& s, Eigen::Matrix<double, N, 1>& y,
                    double s_target, double atol, double rtol = 0.0) {
  double h = 0.0;
  integrate_rk45<N>(std::forward<F>(f), s, y, s_target, atol, rtol, h);
}

}  // namespace nfactor
