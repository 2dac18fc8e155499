#include "snlu/grad_check.hpp"

#include <algorithm>
#include <cmath>

namespace snlu {

GradCheckReport gradient_check(ParamStore& store, const std::function<double()>& loss,
                               const std::function<void()>& compute_gradients, double step, double floor) {
  store.zero_grad();
  compute_gradients();

  GradCheckReport report;
  for (auto& [name, p] : store.params()) {
    for (std::size_t i = 0; i < p.value.size(); ++i) {
      const double saved = p.value[i];
      p.value[i] = saved + step;
      const double up = loss();
      p.value[i] = saved - step;
      const double down = loss();
      p.value[i] = saved;

      const double numeric = (up - down) / (2.0 * step);
      const double analytic = p.grad[i];
      const double denom = std::max({std::abs(analytic), std::abs(numeric), floor});
      const double rel = std::abs(analytic - numeric) / denom;
      ++report.checked;
      if (rel > report.max_relative_error || !std::isfinite(rel)) {
        report.max_relative_error = std::isfinite(rel) ? rel : INFINITY;
        report.worst_parameter = name;
        report.worst_index = i;
      }
    }
  }
  return report;
}

}  // namespace snlu
