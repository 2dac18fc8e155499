#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snlu/classifier.hpp"
#include "snlu/dataset.hpp"
#include "snlu/gazetteer.hpp"
#include "snlu/metrics.hpp"
#include "snlu/rules.hpp"

namespace snlu {

/// Engine configuration. Relative paths resolve against the config file's
/// directory.
struct PipelineConfig {
  std::filesystem::path dataset;
  std::filesystem::path gazetteer;
  std::filesystem::path taxonomy;
  std::filesystem::path rules;  // optional
  TierThresholds tiers;
  nlohmann::json groups;  // null: one group with every type
  ModelConfig category_model = ModelConfig::category_model();
  ModelConfig subcategory_model = ModelConfig::subcategory_model();
  double bias_pct = 0.10;
  std::uint64_t seed = 7;
  bool use_tiered_ner = true;
  bool use_tag_substitution = true;
  std::size_t limit = 0;  // cap on training examples; 0 keeps all

  void validate() const;
  /// Tier used by stage 1, 2 or 3 after the ablation switch.
  Tier stage_tier(int level) const;

  nlohmann::json to_json() const;
  static PipelineConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
};

PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Static inputs shared by training and inference.
struct Resources {
  Taxonomy taxonomy;
  Gazetteer gazetteer;
  EntityGroups groups;
  std::vector<Rule> rules;
};

Resources load_resources(const PipelineConfig& cfg);

struct Slot {
  CharSpan span;
  int type = 0;
  std::string surface;
  int tier = 1;
  double score = 0.0;
};

enum class SubcategorySource { Rule, Model };

struct PipelineOutput {
  int category = 0;
  std::vector<double> category_probs;
  int subcategory = 0;
  SubcategorySource subcategory_source = SubcategorySource::Model;
  std::vector<Slot> slots;  // sorted by span start
};

/// Result of one tagging stage over a (possibly already substituted) query.
struct StageResult {
  TokenizedQuery query;
  std::vector<EntityMatch> matches;  // positions refer to the input query
  std::vector<bool> blocked;         // tokens claimed so far, when tags are not substituted
};

/// Matches at `tier` over `types`, then substitutes tags or, with
/// substitution off, marks the matched positions as claimed.
StageResult run_stage(const TokenizedQuery& q, const std::vector<bool>& blocked, const Resources& res,
                      const Tier& tier, std::span<const int> types, bool substitute);

std::vector<std::string> entity_tags(const Taxonomy& taxonomy);
std::vector<int> all_types(const Taxonomy& taxonomy);

/// Trained engine: configuration, resources and both models.
class Pipeline {
 public:
  Pipeline(PipelineConfig config, Resources resources, SequenceClassifier category_model,
           SequenceClassifier subcategory_model);

  const PipelineConfig& config() const { return config_; }
  const Resources& resources() const { return resources_; }
  const SequenceClassifier& category_model() const { return category_model_; }
  const SequenceClassifier& subcategory_model() const { return subcategory_model_; }

  /// Stages A–F. Throws EmptyQueryError for queries with no tokens.
  PipelineOutput run(const RawQuery& raw) const;

  /// Number of subcategory model calls made by run().
  std::size_t subcategory_invocations() const { return invocations_->load(); }

 private:
  PipelineConfig config_;
  Resources resources_;
  SequenceClassifier category_model_;
  SequenceClassifier subcategory_model_;
  std::shared_ptr<std::atomic<std::size_t>> invocations_;
};

nlohmann::json output_to_json(const PipelineOutput& out, const Taxonomy& taxonomy);

/// Training data prepared for the category stage.
struct CategoryStage {
  std::optional<SequenceClassifier> model;
  std::vector<TokenizedQuery> train_inputs;  // after stage A
  std::vector<TokenizedQuery> validation_inputs;
  std::vector<EpochStats> history;
};

struct SubcategoryStage {
  std::optional<SequenceClassifier> model;
  BiasInjection bias;
  std::vector<EpochStats> history;
};

/// Applies the configured limit to the training part.
DatasetSplit prepare_split(const PipelineConfig& cfg, const Dataset& dataset);

CategoryStage train_category_stage(const PipelineConfig& cfg, const Resources& res, const DatasetSplit& split);
SubcategoryStage train_subcategory_stage(const PipelineConfig& cfg, const Resources& res, const DatasetSplit& split,
                                         const CategoryStage& category, double bias_pct);

struct TrainedPipeline {
  Pipeline pipeline;
  DatasetSplit split;
  CategoryStage category;
  SubcategoryStage subcategory;
};

/// Splits, trains both models and assembles the engine.
TrainedPipeline train_pipeline(const PipelineConfig& cfg, const Resources& res, const Dataset& dataset);

struct EvalResult {
  IntentMetrics intent;
  SlotMetrics slots;
  double category_accuracy = 0.0;
};

EvalResult evaluate(const Pipeline& p, std::span<const LabeledExample> examples);

/// Bundle file: "SNLU", u32 version, u64 header length, JSON header, one
/// (u64 count, f64 values) block per parameter, CRC-32 trailer.
inline constexpr std::uint32_t kBundleVersion = 1;

std::string serialize_bundle(const Pipeline& p);
Pipeline deserialize_bundle(std::string_view bytes);
void save_bundle(const Pipeline& p, const std::filesystem::path& path);
Pipeline load_bundle(const std::filesystem::path& path);

}  // namespace snlu
