#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snlu/dataset.hpp"
#include "snlu/layers.hpp"
#include "snlu/tensor.hpp"
#include "snlu/text.hpp"

namespace snlu {

/// Shape and training hyperparameters of one intent model.
struct ModelConfig {
  std::size_t embedding_dim = 38;
  std::size_t lstm_units = 64;
  double dropout_after_lstm = 0.02;
  std::size_t dense_units = 256;
  double dropout_after_dense = 0.01;
  std::size_t output_classes = 9;
  std::size_t attention_dim = 0;  // 0 means lstm_units
  std::size_t max_seq_len = 30;
  std::size_t batch_size = 300;
  double learning_rate = 7e-4;
  std::size_t max_epochs = 100;
  std::size_t patience = 5;

  static ModelConfig category_model();
  static ModelConfig subcategory_model();

  std::size_t effective_attention_dim() const { return attention_dim ? attention_dim : lstm_units; }
  /// Exact trainable parameter count for a vocabulary of `vocab_size`.
  std::size_t parameter_count(std::size_t vocab_size) const;
  void validate() const;

  nlohmann::json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j, const ModelConfig& defaults);
  bool operator==(const ModelConfig&) const = default;
};

struct ClassScore {
  int id = 0;
  double probability = 0.0;
};

/// embedding → Bi-LSTM → attention → dropout → dense(SELU) → dropout →
/// dense(softmax). Immutable after training; forward is thread-safe.
class SequenceClassifier {
 public:
  /// Fresh model with seeded initialization.
  SequenceClassifier(ModelConfig config, Vocab vocab, std::uint64_t init_seed);
  /// Model around existing parameters (deserialization).
  SequenceClassifier(ModelConfig config, Vocab vocab, ParamStore params);

  const ModelConfig& config() const { return config_; }
  const Vocab& vocab() const { return vocab_; }
  const ParamStore& params() const { return params_; }
  ParamStore& mutable_params() { return params_; }

  /// Token ids, unknown tokens as UNK, truncated to max_seq_len.
  std::vector<int> encode(const TokenizedQuery& q) const;

  /// Class probabilities with dropout off. PAD ids are ignored; throws
  /// InvalidQueryError when nothing else remains.
  Vector forward(std::span<const int> ids) const;
  Vector forward(const TokenizedQuery& q) const { return forward(encode(q)); }

  /// Cross-entropy at the given input with dropout off.
  double loss(std::span<const int> ids, int label) const;

  struct StepResult {
    double loss = 0.0;
    int predicted = 0;
  };
  /// Forward (dropout active when `dropout_rng` is set) plus backward;
  /// gradients are added into the parameter store.
  StepResult accumulate_gradients(std::span<const int> ids, int label, Rng* dropout_rng);

 private:
  struct Trace;
  Vector logits(std::span<const int> ids, Rng* dropout_rng, Trace* trace) const;

  ModelConfig config_;
  Vocab vocab_;
  ParamStore params_;
};

/// Classes by descending probability; ties go to the lower id.
std::vector<ClassScore> rank_classes(const Vector& probs);
std::vector<ClassScore> predict_topk(const SequenceClassifier& m, const TokenizedQuery& q, std::size_t k);

struct TrainingExample {
  TokenizedQuery query;
  int label = 0;
};

struct EpochStats {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double train_acc = 0.0;
  double val_loss = 0.0;
  double val_acc = 0.0;

  /// `epoch,train_loss,train_acc,val_loss,val_acc`
  std::string csv() const;
};

struct TrainResult {
  SequenceClassifier model;
  std::vector<EpochStats> history;
  std::size_t best_epoch = 0;
};

/// Mini-batch Nadam training with early stopping on validation loss; returns
/// the best-validation snapshot. The vocabulary is built from the training
/// queries plus `reserved_tokens`. Throws DivergenceError on a non-finite loss.
TrainResult train(const ModelConfig& config, const std::vector<TrainingExample>& train_set,
                  const std::vector<TrainingExample>& validation_set, std::uint64_t seed,
                  const std::vector<std::string>& reserved_tokens = {},
                  const std::function<void(const EpochStats&)>& on_epoch = {});

std::string category_token(int category);
/// Prepends `<cat_i>` to a query.
TokenizedQuery with_category_token(const TokenizedQuery& q, int category);

struct BiasInjection {
  std::vector<int> indicator;  // category fed to the subcategory model
  std::vector<bool> altered;   // drawn into the second-ranked subset
  std::size_t altered_count = 0;
};

/// Chooses a seeded uniform subset of floor(bias_pct · N) examples whose
/// category indicator becomes the category model's second-ranked class; the
/// rest keep their gold category. Subcategory labels are untouched.
BiasInjection inject_bias(const SequenceClassifier& category_model,
                          std::span<const TokenizedQuery> category_inputs,
                          std::span<const int> gold_categories, double bias_pct, std::uint64_t seed);

}  // namespace snlu
