#pragma once

#include <Eigen/Core>

namespace nfactor {

// Hastings-McLeod solution of Painleve II, q'' = s q + 2 q^3 with
// q(s) ~ Ai(s) as s -> +inf, tabulated on a uniform grid together with the
// tail integrals needed to assemble the Tracy-Widom distribution functions.
struct PainleveSolution {
  Eigen::VectorXd s;         // ascending grid, s[k] = s_min + k * step
  Eigen::VectorXd q;         // q(s)
  Eigen::VectorXd dq;        // q'(s)
  Eigen::VectorXd int_q;     // int_s^inf q(x) dx
  Eigen::VectorXd int_q2;    // int_s^inf q(x)^2 dx
  Eigen::VectorXd int_xsq2;  // int_s^inf (x - s) q(x)^2 dx
  double step = 0.0;
  double tol = 0.0;
  double start = 0.0;  // integration start (Airy boundary location)
};

// Integrates downward from s_max to s_min with adaptive per-step error tol.
// Boundary values come from the Airy function; requires s_max >= 5 and
// step <= 0.01. Throws on blow-up (q exceeding 10 * sqrt(-s/2)).
PainleveSolution solve_painleve_ii(double s_min, double s_max, double step,
                                   double tol = 1e-13);

}  // namespace nfactor
