#pragma once

#include <string>
#include <variant>

#include "schroflow/errors.hpp"
#include "schroflow/rational.hpp"

namespace schroflow {

enum class Mode { Rational, Float };

// A number that is either an exact rational or a double. Rationals are kept
// in lowest terms with positive denominator. A series keeps one mode across
// all of its coefficients.
class Coefficient {
 public:
  Coefficient() : v_(Rat(0)) {}
  Coefficient(Rat q) : v_(std::move(q)) { std::get<Rat>(v_).canonicalize(); }
  Coefficient(double d) : v_(d) {}
  Coefficient(int n) : v_(Rat(n)) {}
  Coefficient(long n) : v_(Rat(static_cast<long>(n))) {}

  Mode mode() const noexcept {
    return std::holds_alternative<Rat>(v_) ? Mode::Rational : Mode::Float;
  }
  bool is_rational() const noexcept { return mode() == Mode::Rational; }

  const Rat& rat() const {
    if (!is_rational()) throw ModeMismatch("coefficient holds a float");
    return std::get<Rat>(v_);
  }
  double dbl() const {
    if (is_rational()) throw ModeMismatch("coefficient holds a rational");
    return std::get<double>(v_);
  }
  double as_double() const {
    return is_rational() ? std::get<Rat>(v_).get_d() : std::get<double>(v_);
  }
  std::string str() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.mode() != b.mode()) return false;
    return a.is_rational() ? a.rat() == b.rat() : a.dbl() == b.dbl();
  }

 private:
  std::variant<Rat, double> v_;
};

}  // namespace schroflow
