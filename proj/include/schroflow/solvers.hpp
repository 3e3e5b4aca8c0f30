#pragma once

#include <functional>

#include "schroflow/map_model.hpp"
#include "schroflow/power_series.hpp"

namespace schroflow {

// Solves s*Psi(x) = Psi(f1(x)) about the fixed point x*, normalized to
// Psi(x*) = 0, Psi'(x*) = 1. Coefficients are in y = x - x* for powers
// 0..order. The eigenvalue s is the multiplier f1'(x*).
PowerSeries solve_schroeder(const MapModel& map, const Coefficient& xstar,
                            int order);

// Solves Poincare's equation PsiInv(s*z) = f1(PsiInv(z)) directly (not by
// reverting solve_schroeder). Returned series is in z about 0 with constant
// term x* and unit slope.
PowerSeries solve_poincare(const MapModel& map, const Coefficient& xstar,
                           int order);

// Solves V(f1(x)) = f1'(x)^2 V(x) about x* in the normalized bracket form
// U = y^2 (1 + ...); V = -log_s_squared * U. The bracket is returned exactly.
PowerSeries solve_potential_bracket(const MapModel& map,
                                    const Coefficient& xstar, int order);

// V = -log_s_squared * U, so that V''(x*) = -2*log_s_squared.
PowerSeries solve_potential(const MapModel& map, const Coefficient& xstar,
                            int order, const Coefficient& log_s_squared);

// f_t(x) = psi_inv(s^t * psi(x)).
double interpolate(double x, double t, double s,
                   const std::function<double(double)>& psi,
                   const std::function<double(double)>& psi_inv);

// v(x) = ln(s) * psi(x) / psi'(x).
double velocity_from_psi(const std::function<double(double)>& psi,
                         const std::function<double(double)>& dpsi, double s,
                         double x);

enum class FunctionalKind { Schroeder, Poincare, Potential };

// Evaluates a truncated series outside its trusted disk by contracting the
// argument with the map (or its inverse branch) and unwinding through the
// functional equation. At most `max_descents` contractions are applied; if
// the point is already inside the disk, this is a plain series evaluation.
double refine_by_functional_equation(const MapModel& map, FunctionalKind kind,
                                     const PowerSeries& series, double x,
                                     int max_descents, double trust_radius);

struct RadiusEstimate {
  double radius;        // 1 / max of |a_n|^(1/n) over the tail window
  bool tail_growing;    // |a_n|^(1/n) still rising at truncation
};

RadiusEstimate estimate_radius(const PowerSeries& series, int tail_window);

// Numeric Psi / PsiInv pair built from series plus functional continuation,
// good enough to interpolate maps with no closed form.
class SeriesConjugacy {
 public:
  SeriesConjugacy(MapModel map, const Coefficient& xstar, int order);

  double psi(double x) const;
  double psi_inv(double z) const;
  double interpolate(double x, double t) const;
  double multiplier() const noexcept { return s_; }

 private:
  MapModel map_;
  PowerSeries psi_series_, psi_inv_series_;
  double s_;
  double trust_psi_, trust_inv_;
  int max_descents_ = 64;
};

}  // namespace schroflow
