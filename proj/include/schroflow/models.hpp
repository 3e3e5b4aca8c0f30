#pragma once

#include <functional>
#include <string>

#include "schroflow/rational.hpp"

namespace schroflow {

// Lambert W on the real branches 0 and -1, Halley-iterated to 1e-13 residual.
double lambert_w(int branch, double z);

// Nontrivial fixed point of x -> k(1 - e^{-x}); positive for k > 1, negative
// for 0 < k < 1. Uses W_0 for k > 1 and W_{-1} for k < 1 (the other branch
// reproduces the trivial fixed point). Throws DegenerateK at k = 1.
double skellam_fixed_point(double k);

// x(t) for the Beverton-Holt map, closed form. t = 0 returns x exactly.
double bh_trajectory(double x, double t);

// Exact rational Beverton-Holt interpolation at integer time n >= 0.
Rat bh_trajectory_exact(const Rat& x, long n);
// n-fold composition of (2x+1)/(x+2).
Rat bh_iterate_exact(const Rat& x, long n);

// Closed-form catalog entry: Psi, its inverse, the interpolated trajectory,
// and the underlying potential, with the x-interval where they are valid.
struct ClosedFormModel {
  std::string id;
  double lo, hi;
  std::function<double(double)> psi;
  std::function<double(double)> psi_inv;
  std::function<double(double, double)> trajectory;  // (x, t)
  std::function<double(double)> potential;
};

ClosedFormModel bh_closed_model();
ClosedFormModel quartic_model();
ClosedFormModel logistic_closed_model(int s);  // s = 2 or 4

// Closed-form Schroeder pair for the logistic map, s = 2 or 4 only.
double logistic_closed_psi(int s, double x);
double logistic_closed_psi_inv(int s, double x);

// One application of the quartic map (1+x)/(1-x) in homogeneous coordinates,
// treating x = +-inf as a single projective point.
std::pair<double, double> quartic_step_homogeneous(double num, double den);
double quartic_step(double x);

// Time for the zero-energy quartic particle to circle through infinity and
// return to x0, by quadrature of dx / (1 + x^2) over the three legs.
double quartic_circumnavigation_time(double x0);

// Distance between projective points under the chordal metric.
double chordal_distance(double a, double b);

}  // namespace schroflow
