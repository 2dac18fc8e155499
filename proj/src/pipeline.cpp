#include "snlu/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "snlu/errors.hpp"
#include "snlu/log.hpp"

namespace snlu {

void PipelineConfig::validate() const {
  tiers.validate();
  category_model.validate();
  subcategory_model.validate();
  if (!(bias_pct >= 0.0 && bias_pct < 1.0)) throw ConfigError("bias_pct must lie in [0, 1)");
}

Tier PipelineConfig::stage_tier(int level) const { return tiers.tier(use_tiered_ner ? level : 1); }

nlohmann::json PipelineConfig::to_json() const {
  return {{"dataset", dataset.string()},
          {"gazetteer", gazetteer.string()},
          {"taxonomy", taxonomy.string()},
          {"rules", rules.string()},
          {"tiers",
           {{"strict", tiers.strict},
            {"fuzzy", tiers.fuzzy},
            {"fringe", tiers.fringe},
            {"min_fuzzy_chars", tiers.min_fuzzy_chars}}},
          {"groups", groups},
          {"category_model", category_model.to_json()},
          {"subcategory_model", subcategory_model.to_json()},
          {"bias_pct", bias_pct},
          {"seed", seed},
          {"use_tiered_ner", use_tiered_ner},
          {"use_tag_substitution", use_tag_substitution},
          {"limit", limit}};
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  PipelineConfig c;
  auto path_field = [&](const char* key) -> std::filesystem::path {
    const std::string s = j.value(key, std::string());
    if (s.empty()) return {};
    std::filesystem::path p(s);
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  };
  try {
    c.dataset = path_field("dataset");
    c.gazetteer = path_field("gazetteer");
    c.taxonomy = path_field("taxonomy");
    c.rules = path_field("rules");
    if (j.contains("tiers")) {
      const auto& t = j.at("tiers");
      c.tiers.strict = t.value("strict", c.tiers.strict);
      c.tiers.fuzzy = t.value("fuzzy", c.tiers.fuzzy);
      c.tiers.fringe = t.value("fringe", c.tiers.fringe);
      c.tiers.min_fuzzy_chars = t.value("min_fuzzy_chars", c.tiers.min_fuzzy_chars);
    }
    if (j.contains("groups")) c.groups = j.at("groups");
    if (j.contains("category_model")) {
      c.category_model = ModelConfig::from_json(j.at("category_model"), ModelConfig::category_model());
    }
    if (j.contains("subcategory_model")) {
      c.subcategory_model = ModelConfig::from_json(j.at("subcategory_model"), ModelConfig::subcategory_model());
    }
    c.bias_pct = j.value("bias_pct", c.bias_pct);
    c.seed = j.value("seed", c.seed);
    c.use_tiered_ner = j.value("use_tiered_ner", c.use_tiered_ner);
    c.use_tag_substitution = j.value("use_tag_substitution", c.use_tag_substitution);
    c.limit = j.value("limit", c.limit);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad engine config: ") + e.what());
  }
  c.validate();
  return c;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return PipelineConfig::from_json(j, path.parent_path());
}

Resources load_resources(const PipelineConfig& cfg) {
  if (cfg.taxonomy.empty() || cfg.gazetteer.empty()) throw ConfigError("config needs taxonomy and gazetteer paths");
  Resources r{.taxonomy = load_taxonomy(cfg.taxonomy), .gazetteer = {}, .groups = {}, .rules = {}};
  r.gazetteer = load_gazetteer(cfg.gazetteer, r.taxonomy.entity_types());
  r.groups = cfg.groups.is_null() ? EntityGroups::single(r.taxonomy) : EntityGroups::from_json(cfg.groups, r.taxonomy);
  r.groups.validate(r.taxonomy);
  if (!cfg.rules.empty()) r.rules = load_rules(cfg.rules, r.taxonomy);
  return r;
}

std::vector<std::string> entity_tags(const Taxonomy& taxonomy) {
  std::vector<std::string> tags;
  for (const auto& t : taxonomy.entity_types()) tags.push_back(make_tag(t));
  return tags;
}

std::vector<int> all_types(const Taxonomy& taxonomy) {
  std::vector<int> types(taxonomy.entity_type_count());
  for (std::size_t i = 0; i < types.size(); ++i) types[i] = static_cast<int>(i);
  return types;
}

StageResult run_stage(const TokenizedQuery& q, const std::vector<bool>& blocked, const Resources& res,
                      const Tier& tier, std::span<const int> types, bool substitute) {
  StageResult r;
  r.matches = match_entities(q, res.gazetteer, tier, types, blocked);
  if (substitute) {
    r.query = substitute_tags(q, r.matches, res.gazetteer.entity_types()).query;
  } else {
    r.query = q;
    r.blocked = blocked.empty() ? std::vector<bool>(q.size(), false) : blocked;
    for (const auto& m : r.matches) {
      for (std::size_t i = m.start_tok; i < m.end_tok; ++i) r.blocked[i] = true;
    }
  }
  return r;
}

namespace {

// Running state of one query through the tagging stages.
struct Tagging {
  TokenizedQuery query;
  std::vector<bool> blocked;
  std::vector<Slot> slots;
};

void tag_stage(const PipelineConfig& cfg, const Resources& res, const RawQuery* raw, Tagging& t, int level,
               std::span<const int> types) {
  StageResult r = run_stage(t.query, t.blocked, res, cfg.stage_tier(level), types, cfg.use_tag_substitution);
  for (const auto& m : r.matches) {
    Slot s{.span = char_span(t.query, m.start_tok, m.end_tok), .type = m.type, .surface = {}, .tier = m.tier,
           .score = m.score};
    if (raw) s.surface = slice_chars(raw->text(), s.span);
    t.slots.push_back(std::move(s));
  }
  t.query = std::move(r.query);
  t.blocked = std::move(r.blocked);
}

Tagging first_stage(const PipelineConfig& cfg, const Resources& res, const RawQuery& raw, bool keep_surface) {
  Tagging t{.query = tokenize(raw), .blocked = {}, .slots = {}};
  const auto types = all_types(res.taxonomy);
  tag_stage(cfg, res, keep_surface ? &raw : nullptr, t, 1, types);
  return t;
}

int argmax(const Vector& v) {
  Eigen::Index i = 0;
  v.maxCoeff(&i);
  return static_cast<int>(i);
}

}  // namespace

Pipeline::Pipeline(PipelineConfig config, Resources resources, SequenceClassifier category_model,
                   SequenceClassifier subcategory_model)
    : config_(std::move(config)),
      resources_(std::move(resources)),
      category_model_(std::move(category_model)),
      subcategory_model_(std::move(subcategory_model)),
      invocations_(std::make_shared<std::atomic<std::size_t>>(0)) {
  if (category_model_.config().output_classes != resources_.taxonomy.category_count() ||
      subcategory_model_.config().output_classes != resources_.taxonomy.subcategory_count()) {
    throw ConfigError("model output sizes do not match the taxonomy");
  }
}

PipelineOutput Pipeline::run(const RawQuery& raw) const {
  const auto& res = resources_;
  Tagging t = first_stage(config_, res, raw, true);

  const Vector probs = category_model_.forward(t.query);
  PipelineOutput out;
  out.category = rank_classes(probs)[0].id;
  out.category_probs.assign(probs.data(), probs.data() + probs.size());

  const auto& types = res.groups.types_for(out.category);
  tag_stage(config_, res, &raw, t, 2, types);

  if (auto rule = apply_rules(t.query, out.category, res.rules)) {
    out.subcategory = *rule;
    out.subcategory_source = SubcategorySource::Rule;
  } else {
    invocations_->fetch_add(1);
    out.subcategory = rank_classes(subcategory_model_.forward(with_category_token(t.query, out.category)))[0].id;
    out.subcategory_source = SubcategorySource::Model;
  }

  tag_stage(config_, res, &raw, t, 3, types);

  // Later stages never see claimed tokens, so overlaps can only come from a
  // malformed gazetteer; keep the earliest claim regardless.
  std::vector<Slot> kept;
  for (auto& s : t.slots) {
    const bool clash = std::any_of(kept.begin(), kept.end(), [&](const Slot& k) { return k.span.overlaps(s.span); });
    if (!clash) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(), [](const Slot& a, const Slot& b) { return a.span < b.span; });
  out.slots = std::move(kept);
  return out;
}

nlohmann::json output_to_json(const PipelineOutput& out, const Taxonomy& taxonomy) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& s : out.slots) {
    slots.push_back({{"start", s.span.start},
                     {"end", s.span.end},
                     {"type", taxonomy.entity_type_name(s.type)},
                     {"text", s.surface},
                     {"tier", s.tier},
                     {"score", s.score}});
  }
  nlohmann::json probs = nlohmann::json::object();
  for (std::size_t c = 0; c < out.category_probs.size(); ++c) {
    probs[taxonomy.category_name(static_cast<int>(c))] = out.category_probs[c];
  }
  return {{"category", taxonomy.category_name(out.category)},
          {"category_probs", probs},
          {"subcategory", taxonomy.subcategory_name(out.subcategory)},
          {"subcategory_source", out.subcategory_source == SubcategorySource::Rule ? "rule" : "model"},
          {"slots", slots}};
}

DatasetSplit prepare_split(const PipelineConfig& cfg, const Dataset& dataset) {
  DatasetSplit split = split_dataset(dataset, cfg.seed);
  if (cfg.limit > 0 && split.train.examples.size() > cfg.limit) {
    split.train.examples.resize(cfg.limit);
    split.train.vocab = build_vocab(split.train.examples);
  }
  return split;
}

CategoryStage train_category_stage(const PipelineConfig& cfg, const Resources& res, const DatasetSplit& split) {
  CategoryStage stage;
  std::vector<TrainingExample> train_set, val_set;
  for (const auto& ex : split.train.examples) {
    stage.train_inputs.push_back(first_stage(cfg, res, ex.raw, false).query);
    train_set.push_back({stage.train_inputs.back(), ex.category});
  }
  for (const auto& ex : split.validation.examples) {
    stage.validation_inputs.push_back(first_stage(cfg, res, ex.raw, false).query);
    val_set.push_back({stage.validation_inputs.back(), ex.category});
  }
  std::vector<std::string> reserved;
  if (cfg.use_tag_substitution) reserved = entity_tags(res.taxonomy);
  log::info("training category model on " + std::to_string(train_set.size()) + " queries");
  auto result = train(cfg.category_model, train_set, val_set, derive_seed(cfg.seed, 2), reserved,
                      [](const EpochStats& s) { log::info("category " + s.csv()); });
  stage.model.emplace(std::move(result.model));
  stage.history = std::move(result.history);
  return stage;
}

SubcategoryStage train_subcategory_stage(const PipelineConfig& cfg, const Resources& res, const DatasetSplit& split,
                                         const CategoryStage& category, double bias_pct) {
  if (!category.model) throw Error("category stage has no model");
  const auto& train_ex = split.train.examples;
  std::vector<int> gold(train_ex.size());
  for (std::size_t i = 0; i < train_ex.size(); ++i) gold[i] = train_ex[i].category;

  SubcategoryStage stage;
  stage.bias = inject_bias(*category.model, category.train_inputs, gold, bias_pct, derive_seed(cfg.seed, 4));

  auto subcategory_input = [&](const RawQuery& raw, int indicator) {
    Tagging t = first_stage(cfg, res, raw, false);
    tag_stage(cfg, res, nullptr, t, 2, res.groups.types_for(indicator));
    return with_category_token(t.query, indicator);
  };
  std::vector<TrainingExample> train_set, val_set;
  for (std::size_t i = 0; i < train_ex.size(); ++i) {
    train_set.push_back({subcategory_input(train_ex[i].raw, stage.bias.indicator[i]), train_ex[i].subcategory});
  }
  const auto& val_ex = split.validation.examples;
  for (std::size_t i = 0; i < val_ex.size(); ++i) {
    const int predicted = argmax(category.model->forward(category.validation_inputs[i]));
    val_set.push_back({subcategory_input(val_ex[i].raw, predicted), val_ex[i].subcategory});
  }

  std::vector<std::string> reserved;
  if (cfg.use_tag_substitution) reserved = entity_tags(res.taxonomy);
  for (std::size_t c = 0; c < res.taxonomy.category_count(); ++c) reserved.push_back(category_token(static_cast<int>(c)));
  log::info("training subcategory model (bias " + std::to_string(bias_pct) + ", " +
            std::to_string(stage.bias.altered_count) + " altered indicators)");
  auto result = train(cfg.subcategory_model, train_set, val_set, derive_seed(cfg.seed, 3), reserved,
                      [](const EpochStats& s) { log::info("subcategory " + s.csv()); });
  stage.model.emplace(std::move(result.model));
  stage.history = std::move(result.history);
  return stage;
}

TrainedPipeline train_pipeline(const PipelineConfig& cfg, const Resources& res, const Dataset& dataset) {
  cfg.validate();
  DatasetSplit split = prepare_split(cfg, dataset);
  CategoryStage category = train_category_stage(cfg, res, split);
  SubcategoryStage subcategory = train_subcategory_stage(cfg, res, split, category, cfg.bias_pct);
  Pipeline p(cfg, res, *category.model, *subcategory.model);
  return {std::move(p), std::move(split), std::move(category), std::move(subcategory)};
}

EvalResult evaluate(const Pipeline& p, std::span<const LabeledExample> examples) {
  std::vector<int> pred, gold;
  std::vector<std::vector<SlotLabel>> pred_slots, gold_slots;
  std::size_t category_hits = 0;
  for (const auto& ex : examples) {
    const PipelineOutput out = p.run(ex.raw);
    pred.push_back(out.subcategory);
    gold.push_back(ex.subcategory);
    category_hits += out.category == ex.category;
    auto& ps = pred_slots.emplace_back();
    for (const auto& s : out.slots) ps.push_back({s.span, s.type});
    auto& gs = gold_slots.emplace_back();
    for (const auto& e : ex.entities) gs.push_back({e.span, e.type});
  }
  EvalResult r;
  r.intent = intent_metrics(pred, gold);
  r.slots = slot_chunk_f1(pred_slots, gold_slots);
  r.category_accuracy = static_cast<double>(category_hits) / static_cast<double>(examples.size());
  return r;
}

}  // namespace snlu
