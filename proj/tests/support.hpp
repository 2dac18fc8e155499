#pragma once

// Independent reference implementations and generators shared by the unit
// tests and the acceptance runner.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "snlu/classifier.hpp"
#include "snlu/gazetteer.hpp"
#include "snlu/grad_check.hpp"
#include "snlu/layers.hpp"
#include "snlu/metrics.hpp"
#include "snlu/rng.hpp"

namespace snlu::testing {

// ---- edit distance ---------------------------------------------------------

/// Full (n+1)×(m+1) Wagner–Fischer table.
inline std::size_t oracle_edit_distance(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] != b[j - 1])});
    }
  }
  return d[a.size()][b.size()];
}

inline double oracle_similarity(const std::u32string& a, const std::u32string& b) {
  const std::size_t n = std::max(a.size(), b.size());
  return n == 0 ? 1.0 : 1.0 - static_cast<double>(oracle_edit_distance(a, b)) / static_cast<double>(n);
}

/// Edit distance that also counts an adjacent transposition as one edit.
inline std::size_t oracle_osa_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] != b[j - 1])});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[a.size()][b.size()];
}

inline std::string random_word(Rng& rng, std::string_view alphabet, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.below(alphabet.size())];
  return w;
}

inline std::u32string random_u32(Rng& rng, std::u32string_view alphabet, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::u32string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.below(alphabet.size())];
  return w;
}

// ---- intent metrics --------------------------------------------------------

struct OracleIntent {
  std::map<int, std::array<double, 3>> per_class;  // precision, recall, f1
  double precision = 0.0, recall = 0.0, f1 = 0.0, accuracy = 0.0;
};

/// Counts from an explicit confusion matrix.
inline OracleIntent oracle_intent(const std::vector<int>& pred, const std::vector<int>& gold) {
  std::map<std::pair<int, int>, int> confusion;  // (gold, pred)
  std::set<int> labels(gold.begin(), gold.end()), all(gold.begin(), gold.end());
  all.insert(pred.begin(), pred.end());
  for (std::size_t i = 0; i < gold.size(); ++i) ++confusion[{gold[i], pred[i]}];
  OracleIntent o;
  int diag = 0;
  for (int c : labels) {
    int tp = confusion[{c, c}], col = 0, row = 0;
    for (int k : all) {
      col += confusion[{k, c}];
      row += confusion[{c, k}];
    }
    const double p = col ? static_cast<double>(tp) / col : 0.0;
    const double r = row ? static_cast<double>(tp) / row : 0.0;
    o.per_class[c] = {p, r, p + r > 0 ? 2 * p * r / (p + r) : 0.0};
    o.precision += p / static_cast<double>(labels.size());
    o.recall += r / static_cast<double>(labels.size());
  }
  for (int c : all) diag += confusion[{c, c}];
  o.accuracy = static_cast<double>(diag) / static_cast<double>(gold.size());
  o.f1 = o.precision + o.recall > 0 ? 2 * o.precision * o.recall / (o.precision + o.recall) : 0.0;
  return o;
}

// ---- slot chunks -----------------------------------------------------------

/// Walks every (start, end, type) cell of each sentence and classifies it by
/// membership in the predicted and gold sets.
inline SlotMetrics oracle_slots(const std::vector<std::vector<SlotLabel>>& pred,
                                const std::vector<std::vector<SlotLabel>>& gold, std::size_t max_chars,
                                int types) {
  SlotMetrics m;
  for (std::size_t q = 0; q < gold.size(); ++q) {
    for (std::size_t s = 0; s < max_chars; ++s) {
      for (std::size_t e = s + 1; e <= max_chars; ++e) {
        for (int t = 0; t < types; ++t) {
          const SlotLabel cell{{s, e}, t};
          const bool in_pred = std::find(pred[q].begin(), pred[q].end(), cell) != pred[q].end();
          const bool in_gold = std::find(gold[q].begin(), gold[q].end(), cell) != gold[q].end();
          m.true_positives += in_pred && in_gold;
          m.false_positives += in_pred && !in_gold;
          m.false_negatives += !in_pred && in_gold;
        }
      }
    }
  }
  const auto tp = static_cast<double>(m.true_positives);
  const std::size_t npred = m.true_positives + m.false_positives, ngold = m.true_positives + m.false_negatives;
  m.precision = npred ? tp / static_cast<double>(npred) : (ngold ? 0.0 : 1.0);
  m.recall = ngold ? tp / static_cast<double>(ngold) : (npred ? 0.0 : 1.0);
  m.f1 = m.precision + m.recall > 0 ? 2 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
  return m;
}

// ---- gradient checks -------------------------------------------------------

/// Loss = Σ w ⊙ y for a fixed random w, which exercises every output entry.
inline RowMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
  RowMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(-scale, scale);
  return m;
}

inline Vector random_vector(Rng& rng, std::size_t n, double scale = 1.0) {
  Vector v(n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform(-scale, scale);
  return v;
}

inline void randomize(ParamStore& store, Rng& rng, double scale) {
  for (auto& [name, p] : store.params()) {
    for (auto& x : p.value.values()) x = rng.uniform(-scale, scale);
  }
}

inline GradCheckReport check_embedding(std::uint64_t seed) {
  Rng rng(seed);
  ParamStore store;
  store.add("table", {7, 5});
  randomize(store, rng, 1.0);
  const std::vector<int> ids = {2, 5, 2, 0, 6};
  const RowMatrix w = random_matrix(rng, ids.size(), 5);
  auto loss = [&] { return (nn::embedding_forward(ids, store.at("table").value).array() * w.array()).sum(); };
  auto grads = [&] { nn::embedding_backward(ids, w, store.at("table").grad); };
  return gradient_check(store, loss, grads);
}

inline GradCheckReport check_lstm(std::uint64_t seed, std::size_t steps = 3) {
  Rng rng(seed);
  ParamStore store;
  nn::add_lstm_params(store, "lstm", 4, 3);
  randomize(store, rng, 0.5);
  const RowMatrix x = random_matrix(rng, steps, 4);
  const RowMatrix w = random_matrix(rng, steps, 3);
  auto loss = [&] { return (nn::lstm_forward(store, "lstm", x, nullptr).array() * w.array()).sum(); };
  auto grads = [&] {
    nn::LstmCache cache;
    nn::lstm_forward(store, "lstm", x, &cache);
    nn::lstm_backward(store, "lstm", cache, w);
  };
  return gradient_check(store, loss, grads);
}

/// Also checks dL/dx by treating the input as a parameter.
inline GradCheckReport check_bilstm(std::uint64_t seed, std::size_t steps = 3) {
  Rng rng(seed);
  ParamStore store;
  nn::add_lstm_params(store, "bi.fw", 4, 3);
  nn::add_lstm_params(store, "bi.bw", 4, 3);
  store.add("x", {steps, 4});
  randomize(store, rng, 0.5);
  const RowMatrix w = random_matrix(rng, steps, 6);
  auto x = [&] { return RowMatrix(store.at("x").value.matrix()); };
  auto loss = [&] { return (nn::bilstm_forward(store, "bi", x(), nullptr).array() * w.array()).sum(); };
  auto grads = [&] {
    nn::BiLstmCache cache;
    nn::bilstm_forward(store, "bi", x(), &cache);
    const RowMatrix dx = nn::bilstm_backward(store, "bi", cache, w);
    store.at("x").grad.matrix() += dx;
  };
  return gradient_check(store, loss, grads);
}

inline GradCheckReport check_attention(std::uint64_t seed, std::vector<bool> mask = {}) {
  Rng rng(seed);
  ParamStore store;
  nn::add_attention_params(store, "att", 6, 4);
  store.add("h", {4, 6});
  randomize(store, rng, 0.8);
  const Vector w = random_vector(rng, 6);
  auto h = [&] { return RowMatrix(store.at("h").value.matrix()); };
  auto loss = [&] { return nn::attention_forward(store, "att", h(), mask, nullptr).dot(w); };
  auto grads = [&] {
    nn::AttentionCache cache;
    nn::attention_forward(store, "att", h(), mask, &cache);
    store.at("h").grad.matrix() += nn::attention_backward(store, "att", cache, w);
  };
  return gradient_check(store, loss, grads);
}

inline GradCheckReport check_dense(std::uint64_t seed, nn::Activation act) {
  Rng rng(seed);
  ParamStore store;
  nn::add_dense_params(store, "fc", 5, 4);
  store.add("x", {5});
  randomize(store, rng, 0.9);
  const Vector w = random_vector(rng, 4);
  auto x = [&] { return Vector(store.at("x").value.vector()); };
  auto loss = [&] { return nn::dense_forward(store, "fc", x(), act, nullptr).dot(w); };
  auto grads = [&] {
    nn::DenseCache cache;
    nn::dense_forward(store, "fc", x(), act, &cache);
    store.at("x").grad.vector() += nn::dense_backward(store, "fc", cache, w);
  };
  return gradient_check(store, loss, grads);
}

inline GradCheckReport check_softmax_cross_entropy(std::uint64_t seed) {
  Rng rng(seed);
  ParamStore store;
  store.add("z", {6});
  randomize(store, rng, 2.0);
  auto loss = [&] { return nn::softmax_cross_entropy(store.at("z").value.vector(), 3).loss; };
  auto grads = [&] { store.at("z").grad.vector() += nn::softmax_cross_entropy(store.at("z").value.vector(), 3).grad_logits; };
  return gradient_check(store, loss, grads);
}

inline Vocab small_vocab() {
  return Vocab::from_tokens({"which", "colleges", "in", "<city>", "for", "<degree>", "best", "<cat_0>"});
}

/// Whole classifier on a five-token input with dropout off. Parameters are
/// re-drawn from a wider range than the initializer so that every unit is
/// active.
inline GradCheckReport check_model(const ModelConfig& config, std::uint64_t seed) {
  SequenceClassifier model(config, small_vocab(), seed);
  Rng rng(derive_seed(seed, 9));
  randomize(model.mutable_params(), rng, 0.3);
  const std::vector<int> ids = {2, 3, 4, 5, 7};
  const int label = static_cast<int>(config.output_classes) - 2;
  auto loss = [&] { return model.loss(ids, label); };
  auto grads = [&] { model.accumulate_gradients(ids, label, nullptr); };
  return gradient_check(model.mutable_params(), loss, grads);
}

}  // namespace snlu::testing
