#include "snlu/layers.hpp"

#include <cmath>
#include <limits>

#include "snlu/errors.hpp"

namespace snlu::nn {

RowMatrix embedding_forward(std::span<const int> ids, const Tensor& table) {
  const auto table_m = table.matrix();
  RowMatrix out(static_cast<Eigen::Index>(ids.size()), table_m.cols());
  for (std::size_t t = 0; t < ids.size(); ++t) {
    if (ids[t] < 0 || static_cast<std::size_t>(ids[t]) >= table.rows()) {
      throw IndexError("embedding id " + std::to_string(ids[t]) + " out of range");
    }
    out.row(static_cast<Eigen::Index>(t)) = table_m.row(ids[t]);
  }
  return out;
}

void embedding_backward(std::span<const int> ids, const RowMatrix& dy, Tensor& table_grad) {
  auto g = table_grad.matrix();
  for (std::size_t t = 0; t < ids.size(); ++t) g.row(ids[t]) += dy.row(static_cast<Eigen::Index>(t));
}

void add_lstm_params(ParamStore& store, const std::string& prefix, std::size_t input_dim, std::size_t units) {
  store.add(prefix + ".W", {4 * units, input_dim});
  store.add(prefix + ".U", {4 * units, units});
  store.add(prefix + ".b", {4 * units});
}

RowMatrix lstm_forward(const ParamStore& store, const std::string& prefix, const RowMatrix& x, LstmCache* cache) {
  const auto W = store.at(prefix + ".W").value.matrix();
  const auto U = store.at(prefix + ".U").value.matrix();
  const auto b = store.at(prefix + ".b").value.vector();
  const Eigen::Index T = x.rows();
  const Eigen::Index u = U.cols();

  // input projections for every step at once
  RowMatrix z = x * W.transpose();
  z.rowwise() += b.transpose();

  RowMatrix gates(T, 4 * u), cell(T, u), h(T, u);
  Vector h_prev = Vector::Zero(u), c_prev = Vector::Zero(u);
  Vector pre(4 * u);
  for (Eigen::Index t = 0; t < T; ++t) {
    pre.noalias() = z.row(t).transpose() + U * h_prev;
    for (Eigen::Index k = 0; k < u; ++k) {
      const double i = sigmoid(pre[k]);
      const double f = sigmoid(pre[u + k]);
      const double g = std::tanh(pre[2 * u + k]);
      const double o = sigmoid(pre[3 * u + k]);
      const double c = f * c_prev[k] + i * g;
      gates(t, k) = i;
      gates(t, u + k) = f;
      gates(t, 2 * u + k) = g;
      gates(t, 3 * u + k) = o;
      cell(t, k) = c;
      h(t, k) = o * selu(c);
    }
    h_prev = h.row(t).transpose();
    c_prev = cell.row(t).transpose();
  }
  if (cache) {
    cache->x = x;
    cache->gates = std::move(gates);
    cache->cell = std::move(cell);
    cache->h = h;
  }
  return h;
}

RowMatrix lstm_backward(ParamStore& store, const std::string& prefix, const LstmCache& cache, const RowMatrix& dh) {
  Param& Wp = store.at(prefix + ".W");
  Param& Up = store.at(prefix + ".U");
  Param& bp = store.at(prefix + ".b");
  const auto W = Wp.value.matrix();
  const auto U = Up.value.matrix();
  const Eigen::Index T = cache.x.rows();
  const Eigen::Index u = U.cols();

  RowMatrix dz(T, 4 * u);
  Vector dh_next = Vector::Zero(u), dc_next = Vector::Zero(u);
  for (Eigen::Index t = T - 1; t >= 0; --t) {
    for (Eigen::Index k = 0; k < u; ++k) {
      const double i = cache.gates(t, k);
      const double f = cache.gates(t, u + k);
      const double g = cache.gates(t, 2 * u + k);
      const double o = cache.gates(t, 3 * u + k);
      const double c = cache.cell(t, k);
      const double c_prev = t > 0 ? cache.cell(t - 1, k) : 0.0;
      const double dht = dh(t, k) + dh_next[k];
      const double dc = dht * o * selu_grad(c) + dc_next[k];
      dz(t, k) = dc * g * i * (1.0 - i);
      dz(t, u + k) = dc * c_prev * f * (1.0 - f);
      dz(t, 2 * u + k) = dc * i * (1.0 - g * g);
      dz(t, 3 * u + k) = dht * selu(c) * o * (1.0 - o);
      dc_next[k] = dc * f;
    }
    dh_next.noalias() = U.transpose() * dz.row(t).transpose();
  }

  Wp.grad.matrix().noalias() += dz.transpose() * cache.x;
  if (T > 1) {
    Up.grad.matrix().noalias() += dz.bottomRows(T - 1).transpose() * cache.h.topRows(T - 1);
  }
  bp.grad.vector() += dz.colwise().sum().transpose();
  return dz * W;
}

namespace {
RowMatrix reversed_rows(const RowMatrix& m) { return m.colwise().reverse(); }
}  // namespace

RowMatrix bilstm_forward(const ParamStore& store, const std::string& prefix, const RowMatrix& x, BiLstmCache* cache) {
  const RowMatrix hf = lstm_forward(store, prefix + ".fw", x, cache ? &cache->forward : nullptr);
  const RowMatrix hb = lstm_forward(store, prefix + ".bw", reversed_rows(x), cache ? &cache->backward : nullptr);
  RowMatrix out(x.rows(), hf.cols() + hb.cols());
  out.leftCols(hf.cols()) = hf;
  out.rightCols(hb.cols()) = reversed_rows(hb);
  return out;
}

RowMatrix bilstm_backward(ParamStore& store, const std::string& prefix, const BiLstmCache& cache, const RowMatrix& dh) {
  const Eigen::Index u = cache.forward.h.cols();
  RowMatrix dx = lstm_backward(store, prefix + ".fw", cache.forward, dh.leftCols(u));
  dx += reversed_rows(lstm_backward(store, prefix + ".bw", cache.backward, reversed_rows(dh.rightCols(u))));
  return dx;
}

void add_attention_params(ParamStore& store, const std::string& prefix, std::size_t hidden, std::size_t attention_dim) {
  store.add(prefix + ".W", {attention_dim, hidden});
  store.add(prefix + ".b", {attention_dim});
  store.add(prefix + ".v", {attention_dim});
}

Vector softmax(const Vector& logits) {
  const double mx = logits.maxCoeff();
  Vector e = (logits.array() - mx).exp();
  return e / e.sum();
}

Vector masked_softmax(const Vector& logits, const std::vector<bool>& mask) {
  if (mask.empty()) return softmax(logits);
  double mx = -std::numeric_limits<double>::infinity();
  for (Eigen::Index t = 0; t < logits.size(); ++t) {
    if (mask[t]) mx = std::max(mx, logits[t]);
  }
  Vector e = Vector::Zero(logits.size());
  for (Eigen::Index t = 0; t < logits.size(); ++t) {
    if (mask[t]) e[t] = std::exp(logits[t] - mx);
  }
  return e / e.sum();
}

Vector attention_forward(const ParamStore& store, const std::string& prefix, const RowMatrix& h,
                         const std::vector<bool>& mask, AttentionCache* cache) {
  const auto W = store.at(prefix + ".W").value.matrix();
  const auto b = store.at(prefix + ".b").value.vector();
  const auto v = store.at(prefix + ".v").value.vector();
  if (!mask.empty() && mask.size() != static_cast<std::size_t>(h.rows())) {
    throw IndexError("attention mask length mismatch");
  }
  RowMatrix u = h * W.transpose();
  u.rowwise() += b.transpose();
  u = u.array().tanh();
  const Vector scores = u * v;
  Vector weights = masked_softmax(scores, mask);
  Vector context = h.transpose() * weights;
  if (cache) {
    cache->h = h;
    cache->u = std::move(u);
    cache->weights = std::move(weights);
    cache->mask = mask;
  }
  return context;
}

RowMatrix attention_backward(ParamStore& store, const std::string& prefix, const AttentionCache& cache,
                             const Vector& dcontext) {
  Param& Wp = store.at(prefix + ".W");
  Param& bp = store.at(prefix + ".b");
  Param& vp = store.at(prefix + ".v");
  const auto W = Wp.value.matrix();
  const auto v = vp.value.vector();
  const Vector& a = cache.weights;

  RowMatrix dh = a * dcontext.transpose();
  const Vector dweights = cache.h * dcontext;
  const Vector dscores = a.array() * (dweights.array() - a.dot(dweights));

  vp.grad.vector() += cache.u.transpose() * dscores;
  RowMatrix dpre = dscores * v.transpose();
  dpre.array() *= 1.0 - cache.u.array().square();
  Wp.grad.matrix().noalias() += dpre.transpose() * cache.h;
  bp.grad.vector() += dpre.colwise().sum().transpose();
  dh.noalias() += dpre * W;
  return dh;
}

void add_dense_params(ParamStore& store, const std::string& prefix, std::size_t in, std::size_t out) {
  store.add(prefix + ".W", {out, in});
  store.add(prefix + ".b", {out});
}

Vector dense_forward(const ParamStore& store, const std::string& prefix, const Vector& x, Activation act,
                     DenseCache* cache) {
  const auto W = store.at(prefix + ".W").value.matrix();
  const auto b = store.at(prefix + ".b").value.vector();
  Vector pre = W * x + b;
  Vector out;
  switch (act) {
    case Activation::None:
      out = pre;
      break;
    case Activation::Selu:
      out = pre.unaryExpr([](double z) { return selu(z); });
      break;
    case Activation::Softmax:
      out = softmax(pre);
      break;
  }
  if (cache) {
    cache->x = x;
    cache->pre = std::move(pre);
    cache->out = out;
    cache->activation = act;
  }
  return out;
}

Vector dense_backward(ParamStore& store, const std::string& prefix, const DenseCache& cache, const Vector& dy) {
  Param& Wp = store.at(prefix + ".W");
  Param& bp = store.at(prefix + ".b");
  Vector dpre;
  switch (cache.activation) {
    case Activation::None:
      dpre = dy;
      break;
    case Activation::Selu:
      dpre = dy.array() * cache.pre.unaryExpr([](double z) { return selu_grad(z); }).array();
      break;
    case Activation::Softmax:
      dpre = cache.out.array() * (dy.array() - cache.out.dot(dy));
      break;
  }
  Wp.grad.matrix().noalias() += dpre * cache.x.transpose();
  bp.grad.vector() += dpre;
  return Wp.value.matrix().transpose() * dpre;
}

Vector dropout_forward(const Vector& x, double rate, Rng* rng, bool training, Vector* scale) {
  if (!training || rate <= 0.0) {
    if (scale) scale->resize(0);
    return x;
  }
  const double keep = 1.0 - rate;
  Vector s(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) s[i] = rng->uniform() < keep ? 1.0 / keep : 0.0;
  Vector out = x.array() * s.array();
  if (scale) *scale = std::move(s);
  return out;
}

Vector dropout_backward(const Vector& scale, const Vector& dy) {
  if (scale.size() == 0) return dy;
  return dy.array() * scale.array();
}

double cross_entropy(const Vector& probs, int label) { return -std::log(probs[label]); }

LossGrad softmax_cross_entropy(const Vector& logits, int label) {
  const double mx = logits.maxCoeff();
  const Vector shifted = logits.array() - mx;
  const double log_z = std::log(shifted.array().exp().sum());
  LossGrad out;
  out.loss = log_z - shifted[label];
  out.grad_logits = (shifted.array() - log_z).exp();
  out.grad_logits[label] -= 1.0;
  return out;
}

void init_uniform(Tensor& t, double bound, Rng& rng) {
  for (double& x : t.values()) x = rng.uniform(-bound, bound);
}

void init_glorot(Tensor& t, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  init_uniform(t, std::sqrt(6.0 / static_cast<double>(fan_in + fan_out)), rng);
}

}  // namespace snlu::nn
