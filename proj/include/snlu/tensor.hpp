#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace snlu {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using VectorMap = Eigen::Map<Vector>;
using ConstVectorMap = Eigen::Map<const Vector>;

/// Dense row-major array of doubles. Rank 1 tensors view as column vectors,
/// higher ranks as (shape[0] × rest) matrices.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return data_.size(); }
  std::size_t rows() const { return shape_.empty() ? 0 : shape_[0]; }
  std::size_t cols() const { return shape_.empty() ? 0 : data_.size() / shape_[0]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  MatrixMap matrix() { return {data_.data(), static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols())}; }
  ConstMatrixMap matrix() const {
    return {data_.data(), static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols())};
  }
  VectorMap vector() { return {data_.data(), static_cast<Eigen::Index>(data_.size())}; }
  ConstVectorMap vector() const { return {data_.data(), static_cast<Eigen::Index>(data_.size())}; }

  void fill(double v);
  bool all_finite() const;
  bool operator==(const Tensor&) const = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Trainable array with its gradient accumulator and Nadam moments.
struct Param {
  Tensor value;
  Tensor grad;
  Tensor first_moment;
  Tensor second_moment;
};

class ParamStore {
 public:
  Param& add(const std::string& name, std::vector<std::size_t> shape);
  Param& at(const std::string& name);
  const Param& at(const std::string& name) const;
  bool contains(const std::string& name) const { return params_.contains(name); }

  std::map<std::string, Param>& params() { return params_; }
  const std::map<std::string, Param>& params() const { return params_; }

  void zero_grad();
  void scale_grad(double factor);
  std::size_t parameter_count() const;

  long step() const { return step_; }
  void set_step(long s) { step_ = s; }

 private:
  std::map<std::string, Param> params_;
  long step_ = 0;
};

struct NadamConfig {
  double learning_rate = 7e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// One Nadam update over every parameter, using the accumulated gradients:
///   m ← β1 m + (1−β1) g,  v ← β2 v + (1−β2) g²
///   m̂ = β1 m / (1−β1^{t+1}) + (1−β1) g / (1−β1^t),  v̂ = v / (1−β2^t)
///   θ ← θ − lr · m̂ / (√v̂ + ε)
void nadam_step(ParamStore& store, const NadamConfig& config);

}  // namespace snlu
