#include "nfactor/special.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "nfactor/ode.hpp"

namespace nfactor {

namespace {

// Lower-tail series for P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double f = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return f * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_q: require a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi2_sf(double x, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("chi2_sf: require df > 0");
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * x);
}

namespace {

// Poincare expansion of Ai and Ai' for large positive x (DLMF 9.7).
AiryValue airy_asymptotic(double x) {
  const double zeta = (2.0 / 3.0) * std::pow(x, 1.5);
  const double pref = std::exp(-zeta) / (2.0 * std::sqrt(M_PI));

  double u = 1.0, sum_ai = 1.0, sum_aip = 1.0, sign = 1.0;
  double prev = 1.0;
  for (int k = 1; k <= 40; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
    const double term = u / std::pow(zeta, k);
    if (term > prev) break;  // divergent tail reached
    prev = term;
    sign = -sign;
    sum_ai += sign * term;
    const double v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
    sum_aip += sign * v / std::pow(zeta, k);
    if (term < 1e-18) break;
  }
  AiryValue r;
  r.ai = pref * std::pow(x, -0.25) * sum_ai;
  r.aip = -pref * std::pow(x, 0.25) * sum_aip;
  return r;
}

}  // namespace

AiryValue airy_ai(double x) {
  if (x >= 10.0) return airy_asymptotic(x);
  if (x < 4.0) throw std::invalid_argument("airy_ai: supported for x >= 4");
  // Backward integration of the Airy equation from the asymptotic regime.
  // The unwanted Bi component decays going down in x, so this is stable.
  const double x0 = 12.0;
  AiryValue boundary = airy_asymptotic(x0);
  Eigen::Matrix<double, 2, 1> y;
  y << boundary.ai, boundary.aip;
  double s = x0;
  integrate_rk45<2>(
      [](double t, const Eigen::Matrix<double, 2, 1>& v) {
        Eigen::Matrix<double, 2, 1> d;
        d << v(1), t * v(0);
        return d;
      },
      s, y, x, 1e-300, 5e-14);
  return AiryValue{y(0), y(1)};
}

}  // namespace nfactor
