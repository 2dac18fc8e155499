#include "snlu/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "snlu/errors.hpp"
#include "snlu/log.hpp"

namespace snlu {

ModelConfig ModelConfig::category_model() { return {}; }

ModelConfig ModelConfig::subcategory_model() {
  ModelConfig c;
  c.lstm_units = 32;
  c.dropout_after_lstm = 0.01;
  c.dense_units = 128;
  c.dropout_after_dense = 0.01;
  c.output_classes = 19;
  return c;
}

std::size_t ModelConfig::parameter_count(std::size_t vocab_size) const {
  const std::size_t u = lstm_units, e = embedding_dim, h = 2 * lstm_units, a = effective_attention_dim();
  const std::size_t embedding = vocab_size * e;
  const std::size_t lstm = 2 * (4 * u * e + 4 * u * u + 4 * u);
  const std::size_t attention = a * h + a + a;
  const std::size_t hidden = dense_units * h + dense_units;
  const std::size_t output = output_classes * dense_units + output_classes;
  return embedding + lstm + attention + hidden + output;
}

void ModelConfig::validate() const {
  if (embedding_dim == 0 || lstm_units == 0 || dense_units == 0 || output_classes < 2) {
    throw ConfigError("model dimensions must be positive (and at least two classes)");
  }
  if (dropout_after_lstm < 0.0 || dropout_after_lstm >= 1.0 || dropout_after_dense < 0.0 ||
      dropout_after_dense >= 1.0) {
    throw ConfigError("dropout rates must lie in [0, 1)");
  }
  if (max_seq_len == 0 || batch_size == 0 || max_epochs == 0 || !(learning_rate > 0.0)) {
    throw ConfigError("sequence length, batch size, epochs and learning rate must be positive");
  }
}

nlohmann::json ModelConfig::to_json() const {
  return {{"embedding_dim", embedding_dim},   {"lstm_units", lstm_units},
          {"dropout_after_lstm", dropout_after_lstm}, {"dense_units", dense_units},
          {"dropout_after_dense", dropout_after_dense}, {"output_classes", output_classes},
          {"attention_dim", attention_dim},   {"max_seq_len", max_seq_len},
          {"batch_size", batch_size},         {"learning_rate", learning_rate},
          {"max_epochs", max_epochs},         {"patience", patience}};
}

ModelConfig ModelConfig::from_json(const nlohmann::json& j, const ModelConfig& d) {
  ModelConfig c;
  c.embedding_dim = j.value("embedding_dim", d.embedding_dim);
  c.lstm_units = j.value("lstm_units", d.lstm_units);
  c.dropout_after_lstm = j.value("dropout_after_lstm", d.dropout_after_lstm);
  c.dense_units = j.value("dense_units", d.dense_units);
  c.dropout_after_dense = j.value("dropout_after_dense", d.dropout_after_dense);
  c.output_classes = j.value("output_classes", d.output_classes);
  c.attention_dim = j.value("attention_dim", d.attention_dim);
  c.max_seq_len = j.value("max_seq_len", d.max_seq_len);
  c.batch_size = j.value("batch_size", d.batch_size);
  c.learning_rate = j.value("learning_rate", d.learning_rate);
  c.max_epochs = j.value("max_epochs", d.max_epochs);
  c.patience = j.value("patience", d.patience);
  c.validate();
  return c;
}

struct SequenceClassifier::Trace {
  std::vector<int> ids;
  nn::BiLstmCache lstm;
  nn::AttentionCache attention;
  Vector drop_context;
  nn::DenseCache hidden;
  Vector drop_hidden;
  nn::DenseCache output;
};

SequenceClassifier::SequenceClassifier(ModelConfig config, Vocab vocab, std::uint64_t init_seed)
    : config_(std::move(config)), vocab_(std::move(vocab)) {
  config_.validate();
  const std::size_t e = config_.embedding_dim, u = config_.lstm_units, h = 2 * u;
  const std::size_t a = config_.effective_attention_dim();
  params_.add("embedding", {vocab_.size(), e});
  nn::add_lstm_params(params_, "bilstm.fw", e, u);
  nn::add_lstm_params(params_, "bilstm.bw", e, u);
  nn::add_attention_params(params_, "attention", h, a);
  nn::add_dense_params(params_, "hidden", h, config_.dense_units);
  nn::add_dense_params(params_, "output", config_.dense_units, config_.output_classes);

  Rng rng(init_seed);
  for (auto& [name, p] : params_.params()) {
    if (name == "embedding") {
      nn::init_uniform(p.value, 0.05, rng);
    } else if (name.ends_with(".v")) {
      nn::init_glorot(p.value, p.value.size(), 1, rng);
    } else if (name.ends_with(".W") || name.ends_with(".U")) {
      nn::init_glorot(p.value, p.value.cols(), p.value.rows(), rng);
    }
    // biases stay zero; forget gates start open
    if (name.starts_with("bilstm") && name.ends_with(".b")) {
      for (std::size_t k = u; k < 2 * u; ++k) p.value[k] = 1.0;
    }
  }
}

SequenceClassifier::SequenceClassifier(ModelConfig config, Vocab vocab, ParamStore params)
    : config_(std::move(config)), vocab_(std::move(vocab)), params_(std::move(params)) {
  config_.validate();
  if (params_.parameter_count() != config_.parameter_count(vocab_.size())) {
    throw ConfigError("parameter shapes do not match the model configuration");
  }
}

std::vector<int> SequenceClassifier::encode(const TokenizedQuery& q) const {
  std::vector<int> ids;
  const std::size_t n = std::min(q.size(), config_.max_seq_len);
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(vocab_.lookup(q.tokens[i]));
  return ids;
}

Vector SequenceClassifier::logits(std::span<const int> ids, Rng* dropout_rng, Trace* trace) const {
  std::vector<int> kept;
  kept.reserve(ids.size());
  for (int id : ids) {
    if (id != Vocab::kPad) kept.push_back(id);
  }
  if (kept.empty()) throw InvalidQueryError("model input has no non-padding tokens");
  if (kept.size() > config_.max_seq_len) kept.resize(config_.max_seq_len);

  const bool training = dropout_rng != nullptr;
  const RowMatrix x = nn::embedding_forward(kept, params_.at("embedding").value);
  const RowMatrix h = nn::bilstm_forward(params_, "bilstm", x, trace ? &trace->lstm : nullptr);
  const Vector context = nn::attention_forward(params_, "attention", h, {}, trace ? &trace->attention : nullptr);
  const Vector c_drop = nn::dropout_forward(context, config_.dropout_after_lstm, dropout_rng, training,
                                            trace ? &trace->drop_context : nullptr);
  const Vector hidden = nn::dense_forward(params_, "hidden", c_drop, nn::Activation::Selu,
                                          trace ? &trace->hidden : nullptr);
  const Vector h_drop = nn::dropout_forward(hidden, config_.dropout_after_dense, dropout_rng, training,
                                            trace ? &trace->drop_hidden : nullptr);
  Vector out = nn::dense_forward(params_, "output", h_drop, nn::Activation::None,
                                 trace ? &trace->output : nullptr);
  if (trace) trace->ids = std::move(kept);
  return out;
}

Vector SequenceClassifier::forward(std::span<const int> ids) const {
  return nn::softmax(logits(ids, nullptr, nullptr));
}

double SequenceClassifier::loss(std::span<const int> ids, int label) const {
  return nn::softmax_cross_entropy(logits(ids, nullptr, nullptr), label).loss;
}

SequenceClassifier::StepResult SequenceClassifier::accumulate_gradients(std::span<const int> ids, int label,
                                                                        Rng* dropout_rng) {
  Trace trace;
  const Vector z = logits(ids, dropout_rng, &trace);
  const nn::LossGrad lg = nn::softmax_cross_entropy(z, label);

  Eigen::Index arg = 0;
  z.maxCoeff(&arg);

  Vector d = nn::dense_backward(params_, "output", trace.output, lg.grad_logits);
  d = nn::dropout_backward(trace.drop_hidden, d);
  d = nn::dense_backward(params_, "hidden", trace.hidden, d);
  d = nn::dropout_backward(trace.drop_context, d);
  const RowMatrix dh = nn::attention_backward(params_, "attention", trace.attention, d);
  const RowMatrix dx = nn::bilstm_backward(params_, "bilstm", trace.lstm, dh);
  nn::embedding_backward(trace.ids, dx, params_.at("embedding").grad);
  return {lg.loss, static_cast<int>(arg)};
}

std::vector<ClassScore> rank_classes(const Vector& probs) {
  std::vector<ClassScore> out;
  for (Eigen::Index i = 0; i < probs.size(); ++i) out.push_back({static_cast<int>(i), probs[i]});
  std::stable_sort(out.begin(), out.end(),
                   [](const ClassScore& a, const ClassScore& b) { return a.probability > b.probability; });
  return out;
}

std::vector<ClassScore> predict_topk(const SequenceClassifier& m, const TokenizedQuery& q, std::size_t k) {
  if (k < 1 || k > m.config().output_classes) throw Error("k must lie in [1, output_classes]");
  auto ranked = rank_classes(m.forward(q));
  ranked.resize(k);
  return ranked;
}

std::string EpochStats::csv() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.6f,%.6f", epoch, train_loss, train_acc, val_loss, val_acc);
  return buf;
}

TrainResult train(const ModelConfig& config, const std::vector<TrainingExample>& train_set,
                  const std::vector<TrainingExample>& validation_set, std::uint64_t seed,
                  const std::vector<std::string>& reserved_tokens,
                  const std::function<void(const EpochStats&)>& on_epoch) {
  config.validate();
  if (train_set.empty() || validation_set.empty()) {
    throw Error("training and validation sets must be non-empty");
  }
  for (const auto* set : {&train_set, &validation_set}) {
    for (const auto& ex : *set) {
      if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= config.output_classes) {
        throw Error("training label out of range");
      }
    }
  }

  std::vector<std::string> reserved = reserved_tokens;
  std::sort(reserved.begin(), reserved.end());
  Vocab vocab = Vocab::from_tokens(reserved);
  for (const auto& ex : train_set) {
    for (const auto& t : ex.query.tokens) vocab.add(t);
  }

  SequenceClassifier model(config, std::move(vocab), derive_seed(seed, 1));
  auto encode_all = [&](const std::vector<TrainingExample>& set) {
    std::vector<std::vector<int>> ids;
    ids.reserve(set.size());
    for (const auto& ex : set) ids.push_back(model.encode(ex.query));
    return ids;
  };
  const auto train_ids = encode_all(train_set);
  const auto val_ids = encode_all(validation_set);

  ParamStore best = model.params();
  double best_val = INFINITY;
  std::size_t best_epoch = 0, stale = 0;
  std::vector<EpochStats> history;
  const NadamConfig nadam{.learning_rate = config.learning_rate};

  std::vector<std::size_t> order(train_set.size());
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng shuffle_rng(derive_seed(seed, 1000 + epoch));
    shuffle_rng.shuffle(order);
    Rng dropout_rng(derive_seed(seed, 500000 + epoch));

    double loss_sum = 0.0;
    std::size_t correct = 0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
      const std::size_t end = std::min(order.size(), begin + config.batch_size);
      model.mutable_params().zero_grad();
      for (std::size_t b = begin; b < end; ++b) {
        const auto& ex = train_set[order[b]];
        const auto r = model.accumulate_gradients(train_ids[order[b]], ex.label, &dropout_rng);
        if (!std::isfinite(r.loss)) {
          throw DivergenceError("non-finite training loss at epoch " + std::to_string(epoch));
        }
        loss_sum += r.loss;
        correct += r.predicted == ex.label;
      }
      model.mutable_params().scale_grad(1.0 / static_cast<double>(end - begin));
      nadam_step(model.mutable_params(), nadam);
    }

    EpochStats stats{.epoch = epoch,
                     .train_loss = loss_sum / static_cast<double>(train_set.size()),
                     .train_acc = static_cast<double>(correct) / static_cast<double>(train_set.size())};
    double val_loss = 0.0;
    std::size_t val_correct = 0;
    for (std::size_t i = 0; i < validation_set.size(); ++i) {
      const Vector p = model.forward(val_ids[i]);
      val_loss += nn::cross_entropy(p, validation_set[i].label);
      Eigen::Index arg = 0;
      p.maxCoeff(&arg);
      val_correct += arg == validation_set[i].label;
    }
    stats.val_loss = val_loss / static_cast<double>(validation_set.size());
    stats.val_acc = static_cast<double>(val_correct) / static_cast<double>(validation_set.size());
    if (!std::isfinite(stats.val_loss)) {
      throw DivergenceError("non-finite validation loss at epoch " + std::to_string(epoch));
    }
    history.push_back(stats);
    log::debug(stats.csv());
    if (on_epoch) on_epoch(stats);

    if (stats.val_loss < best_val) {
      best_val = stats.val_loss;
      best = model.params();
      best_epoch = epoch;
      stale = 0;
    } else if (++stale >= config.patience) {
      break;
    }
  }

  model.mutable_params() = std::move(best);
  return {std::move(model), std::move(history), best_epoch};
}

std::string category_token(int category) { return make_tag("cat_" + std::to_string(category)); }

TokenizedQuery with_category_token(const TokenizedQuery& q, int category) {
  TokenizedQuery out;
  out.tokens.reserve(q.size() + 1);
  out.offsets.reserve(q.size() + 1);
  out.tokens.push_back(category_token(category));
  out.offsets.push_back({0, 0});
  out.tokens.insert(out.tokens.end(), q.tokens.begin(), q.tokens.end());
  out.offsets.insert(out.offsets.end(), q.offsets.begin(), q.offsets.end());
  return out;
}

BiasInjection inject_bias(const SequenceClassifier& category_model,
                          std::span<const TokenizedQuery> category_inputs,
                          std::span<const int> gold_categories, double bias_pct, std::uint64_t seed) {
  if (category_inputs.size() != gold_categories.size()) {
    throw LengthMismatchError("inputs and gold categories differ in length");
  }
  if (!(bias_pct >= 0.0 && bias_pct < 1.0)) throw ConfigError("bias_pct must lie in [0, 1)");

  const std::size_t n = category_inputs.size();
  BiasInjection out;
  out.indicator.assign(gold_categories.begin(), gold_categories.end());
  out.altered.assign(n, false);
  out.altered_count = static_cast<std::size_t>(std::floor(bias_pct * static_cast<double>(n) + 1e-9));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(seed, 0xb1a5));
  rng.shuffle(order);
  for (std::size_t k = 0; k < out.altered_count; ++k) {
    const std::size_t i = order[k];
    out.altered[i] = true;
    out.indicator[i] = predict_topk(category_model, category_inputs[i], 2)[1].id;
  }
  return out;
}

}  // namespace snlu
