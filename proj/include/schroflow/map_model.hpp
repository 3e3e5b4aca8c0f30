#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "schroflow/power_series.hpp"

namespace schroflow {

// A named one-dimensional discrete map x -> f1(x) with enough structure for
// the functional-equation solvers: pointwise evaluation, derivative, fixed
// points, a local series expansion about a chosen center, and (where one
// exists) the inverse branch used for functional continuation.
struct MapModel {
  std::string name;
  std::vector<std::pair<std::string, Coefficient>> params;

  std::function<double(double)> f1;
  std::function<double(double)> df1;
  std::vector<Coefficient> fixed_points;

  // Series of f1(center + y) - center in y, coefficients for powers 0..order.
  // The constant term vanishes exactly when center is a fixed point.
  std::function<PowerSeries(const Coefficient& center, int order)> local_series;

  // Preimage of z under f1 on the branch closest to `toward`; empty when the
  // map has no usable real inverse.
  std::function<double(double z, double toward)> inv_branch;

  // f1'(x*) — the eigenvalue s of Schroeder's equation at that fixed point.
  Coefficient multiplier(const Coefficient& xstar) const;
};

MapModel bh_map();
MapModel logistic_map(const Coefficient& s);
MapModel skellam_map(const Coefficient& k);

}  // namespace schroflow
