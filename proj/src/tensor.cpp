#include "snlu/tensor.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "snlu/errors.hpp"

namespace snlu {

Tensor::Tensor(std::vector<std::size_t> shape, double fill) : shape_(std::move(shape)) {
  const std::size_t n = std::accumulate(shape_.begin(), shape_.end(), std::size_t{1}, std::multiplies<>());
  data_.assign(n, fill);
}

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

bool Tensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Param& ParamStore::add(const std::string& name, std::vector<std::size_t> shape) {
  if (params_.contains(name)) throw Error("duplicate parameter " + name);
  Param p{Tensor(shape), Tensor(shape), Tensor(shape), Tensor(shape)};
  return params_.emplace(name, std::move(p)).first->second;
}

Param& ParamStore::at(const std::string& name) {
  auto it = params_.find(name);
  if (it == params_.end()) throw Error("unknown parameter " + name);
  return it->second;
}

const Param& ParamStore::at(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw Error("unknown parameter " + name);
  return it->second;
}

void ParamStore::zero_grad() {
  for (auto& [_, p] : params_) p.grad.fill(0.0);
}

void ParamStore::scale_grad(double factor) {
  for (auto& [_, p] : params_) p.grad.vector() *= factor;
}

std::size_t ParamStore::parameter_count() const {
  std::size_t n = 0;
  for (const auto& [_, p] : params_) n += p.value.size();
  return n;
}

void nadam_step(ParamStore& store, const NadamConfig& c) {
  const long t = store.step() + 1;
  const double b1t = std::pow(c.beta1, static_cast<double>(t));
  const double b1t_next = b1t * c.beta1;
  const double b2t = std::pow(c.beta2, static_cast<double>(t));
  const double momentum_corr = c.beta1 / (1.0 - b1t_next);
  const double grad_corr = (1.0 - c.beta1) / (1.0 - b1t);
  const double second_corr = 1.0 / (1.0 - b2t);

  for (auto& [_, p] : store.params()) {
    double* theta = p.value.data();
    const double* g = p.grad.data();
    double* m = p.first_moment.data();
    double* v = p.second_moment.data();
    for (std::size_t i = 0; i < p.value.size(); ++i) {
      m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g[i];
      v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g[i] * g[i];
      const double m_hat = momentum_corr * m[i] + grad_corr * g[i];
      const double v_hat = second_corr * v[i];
      theta[i] -= c.learning_rate * m_hat / (std::sqrt(v_hat) + c.epsilon);
    }
  }
  store.set_step(t);
}

}  // namespace snlu
