#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "snlu/rng.hpp"
#include "snlu/tensor.hpp"

// Forward/backward kernels for the classifier layers. Each forward fills a
// cache that its backward consumes; backward accumulates into Param::grad.
namespace snlu::nn {

inline constexpr double kSeluLambda = 1.0507009873554804934193349852946;
inline constexpr double kSeluAlpha = 1.6732632423543772848170429916717;

inline double selu(double x) { return x > 0.0 ? kSeluLambda * x : kSeluLambda * kSeluAlpha * (std::exp(x) - 1.0); }
inline double selu_grad(double x) { return x > 0.0 ? kSeluLambda : kSeluLambda * kSeluAlpha * std::exp(x); }
inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// ---- embedding -------------------------------------------------------------

/// Gathers table rows; throws IndexError on an out-of-range id.
RowMatrix embedding_forward(std::span<const int> ids, const Tensor& table);
/// Scatter-adds `dy` rows into `table_grad`.
void embedding_backward(std::span<const int> ids, const RowMatrix& dy, Tensor& table_grad);

// ---- bidirectional LSTM ----------------------------------------------------

/// Parameter names for one direction: `<prefix>.W` (4U×E), `<prefix>.U`
/// (4U×U), `<prefix>.b` (4U). Gate order: input, forget, candidate, output.
void add_lstm_params(ParamStore& store, const std::string& prefix, std::size_t input_dim, std::size_t units);

struct LstmCache {
  RowMatrix x;       // T×E
  RowMatrix gates;   // T×4U, post-activation
  RowMatrix cell;    // T×U
  RowMatrix h;       // T×U
};

/// Unidirectional pass from zero state. The cell output is SELU(c) instead
/// of tanh(c); gates stay sigmoid and the candidate stays tanh.
RowMatrix lstm_forward(const ParamStore& store, const std::string& prefix, const RowMatrix& x, LstmCache* cache);
/// Returns dL/dx.
RowMatrix lstm_backward(ParamStore& store, const std::string& prefix, const LstmCache& cache, const RowMatrix& dh);

struct BiLstmCache {
  LstmCache forward;
  LstmCache backward;
};

/// `<prefix>.fw.*` and `<prefix>.bw.*`; output T×2U with forward states in the
/// first U columns.
RowMatrix bilstm_forward(const ParamStore& store, const std::string& prefix, const RowMatrix& x, BiLstmCache* cache);
RowMatrix bilstm_backward(ParamStore& store, const std::string& prefix, const BiLstmCache& cache, const RowMatrix& dh);

// ---- additive attention ----------------------------------------------------

/// `<prefix>.W` (A×H), `<prefix>.b` (A), `<prefix>.v` (A).
void add_attention_params(ParamStore& store, const std::string& prefix, std::size_t hidden, std::size_t attention_dim);

struct AttentionCache {
  RowMatrix h;       // T×H
  RowMatrix u;       // T×A, tanh(h Wᵀ + b)
  Vector weights;    // T
  std::vector<bool> mask;
};

/// score_t = vᵀ tanh(W h_t + b); weights = softmax over unmasked positions;
/// context = Σ weights_t h_t. An empty mask means every position is valid.
Vector attention_forward(const ParamStore& store, const std::string& prefix, const RowMatrix& h,
                         const std::vector<bool>& mask, AttentionCache* cache);
RowMatrix attention_backward(ParamStore& store, const std::string& prefix, const AttentionCache& cache,
                             const Vector& dcontext);

// ---- dense -----------------------------------------------------------------

enum class Activation { None, Selu, Softmax };

/// `<prefix>.W` (out×in), `<prefix>.b` (out).
void add_dense_params(ParamStore& store, const std::string& prefix, std::size_t in, std::size_t out);

struct DenseCache {
  Vector x;
  Vector pre;
  Vector out;
  Activation activation = Activation::None;
};

Vector dense_forward(const ParamStore& store, const std::string& prefix, const Vector& x, Activation act,
                     DenseCache* cache);
Vector dense_backward(ParamStore& store, const std::string& prefix, const DenseCache& cache, const Vector& dy);

// ---- dropout, softmax, loss ------------------------------------------------

/// Inverted dropout: kept units scale by 1/(1−rate). Identity when not
/// training or rate is zero (and then `scale` stays empty).
Vector dropout_forward(const Vector& x, double rate, Rng* rng, bool training, Vector* scale);
Vector dropout_backward(const Vector& scale, const Vector& dy);

Vector softmax(const Vector& logits);
/// Softmax with masked positions fixed at zero weight.
Vector masked_softmax(const Vector& logits, const std::vector<bool>& mask);

struct LossGrad {
  double loss = 0.0;
  Vector grad_logits;
};

double cross_entropy(const Vector& probs, int label);
/// −log softmax(logits)[label] and its gradient p − onehot(label).
LossGrad softmax_cross_entropy(const Vector& logits, int label);

// ---- initialization --------------------------------------------------------

void init_uniform(Tensor& t, double bound, Rng& rng);
/// Glorot-style bound sqrt(6 / (fan_in + fan_out)).
void init_glorot(Tensor& t, std::size_t fan_in, std::size_t fan_out, Rng& rng);

}  // namespace snlu::nn
