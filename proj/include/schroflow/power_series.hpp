#pragma once

#include <cstddef>
#include <vector>

#include "schroflow/coefficient.hpp"

namespace schroflow {

// Truncated formal power series around an expansion point. coeffs[i] is the
// coefficient of (x - center)^i; the stored length is the truncation order.
// Arithmetic never extends the stored order: missing high-order terms are
// truncation, not zeros.
class PowerSeries {
 public:
  PowerSeries(Coefficient center, std::vector<Rat> coeffs);
  PowerSeries(Coefficient center, std::vector<double> coeffs);

  Mode mode() const noexcept { return mode_; }
  std::size_t order() const noexcept {
    return mode_ == Mode::Rational ? rc_.size() : fc_.size();
  }
  const Coefficient& center() const noexcept { return center_; }
  Coefficient coeff(std::size_t i) const;

  const std::vector<Rat>& rat_coeffs() const;
  const std::vector<double>& float_coeffs() const;

  PowerSeries to_float() const;

  // Horner evaluation at an absolute point x (i.e. in the variable x-center).
  double eval(double x) const { return eval_rel(x - center_.as_double()); }
  double eval_rel(double y) const;

 private:
  Coefficient center_;
  Mode mode_;
  std::vector<Rat> rc_;
  std::vector<double> fc_;
};

// Truncated product; result order is the smaller of the two inputs.
PowerSeries ps_multiply(const PowerSeries& a, const PowerSeries& b);

// Formal composition outer(inner(y)); inner must have zero constant term.
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner);

// Compositional inverse T with series(T(y)) = y through the stored order.
// Requires zero constant term and nonzero linear coefficient.
PowerSeries ps_reversion(const PowerSeries& s);

PowerSeries ps_derivative(const PowerSeries& s);

// exp of a series with zero constant term.
PowerSeries ps_exp(const PowerSeries& s);

// Multiplicative inverse 1/s; requires nonzero constant term.
PowerSeries ps_inverse(const PowerSeries& s);

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);

}  // namespace schroflow
