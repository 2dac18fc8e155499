#pragma once

#include <functional>
#include <string>

#include "snlu/tensor.hpp"

namespace snlu {

struct GradCheckReport {
  double max_relative_error = 0.0;
  std::string worst_parameter;
  std::size_t worst_index = 0;
  std::size_t checked = 0;
};

/// Compares analytic gradients with central finite differences over every
/// parameter in `store`.
///
/// `loss` evaluates the scalar objective at the current parameter values.
/// `compute_gradients` must leave dL/dθ in Param::grad (the checker zeroes
/// the gradients first). Relative error is |a − n| / max(|a|, |n|, floor),
/// so gradients whose magnitude is below `floor` are compared absolutely.
GradCheckReport gradient_check(ParamStore& store, const std::function<double()>& loss,
                               const std::function<void()>& compute_gradients, double step = 1e-5,
                               double floor = 1e-5);

}  // namespace snlu
