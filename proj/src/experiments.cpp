#include "snlu/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "snlu/errors.hpp"
#include "snlu/log.hpp"

namespace snlu {
namespace {

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

double median(std::vector<double> v) {
  if (v.empty()) throw Error("median of an empty list");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> BiasSweep::accuracies(double bias) const {
  std::vector<double> out;
  for (const auto& c : cells) {
    if (c.bias == bias) out.push_back(c.accuracy);
  }
  return out;
}

BiasSweep bias_sweep(const PipelineConfig& cfg, const Resources& res, const Dataset& dataset,
                     const std::vector<double>& bias_values, const std::vector<std::uint64_t>& seeds) {
  for (double b : bias_values) {
    if (!(b >= 0.0 && b < 1.0)) throw ConfigError("bias values must lie in [0, 1)");
  }
  BiasSweep sweep;
  for (std::uint64_t seed : seeds) {
    PipelineConfig c = cfg;
    c.seed = seed;
    const DatasetSplit split = prepare_split(c, dataset);
    const CategoryStage category = train_category_stage(c, res, split);
    for (double b : bias_values) {
      c.bias_pct = b;
      SubcategoryStage sub = train_subcategory_stage(c, res, split, category, b);
      const Pipeline p(c, res, *category.model, *sub.model);
      const EvalResult r = evaluate(p, split.test.examples);
      sweep.cells.push_back({b, seed, r.intent.accuracy, sub.bias.altered_count});
      log::info("bias " + fmt(b) + " seed " + std::to_string(seed) + " accuracy " + fmt(r.intent.accuracy));
    }
  }
  for (double b : bias_values) {
    const auto acc = sweep.accuracies(b);
    sweep.summary.push_back({b, mean(acc), sample_sd(acc)});
  }
  return sweep;
}

void write_bias_csv(const BiasSweep& sweep, std::ostream& out) {
  out << "bias,seed,accuracy\n";
  for (const auto& c : sweep.cells) out << fmt(c.bias) << ',' << c.seed << ',' << fmt(c.accuracy) << '\n';
}

std::vector<double> Ablation::metric(const std::string& variant, double (*field)(const EvalResult&)) const {
  std::vector<double> out;
  for (const auto& r : rows) {
    if (r.variant == variant) out.push_back(field(r.result));
  }
  return out;
}

Ablation ablation_run(const PipelineConfig& cfg, const Resources& res, const Dataset& dataset,
                      const std::vector<std::uint64_t>& seeds) {
  Ablation ab;
  for (std::uint64_t seed : seeds) {
    PipelineConfig final_cfg = cfg;
    final_cfg.seed = seed;
    final_cfg.use_tiered_ner = true;
    final_cfg.use_tag_substitution = true;
    PipelineConfig single_tier = final_cfg;
    single_tier.use_tiered_ner = false;
    PipelineConfig no_subst = final_cfg;
    no_subst.use_tag_substitution = false;

    const DatasetSplit split = prepare_split(final_cfg, dataset);
    std::vector<std::size_t> test_ids;
    for (const auto& ex : split.test.examples) test_ids.push_back(ex.id);

    auto run_variant = [&](const char* name, const PipelineConfig& c, const CategoryStage& category) {
      SubcategoryStage sub = train_subcategory_stage(c, res, split, category, c.bias_pct);
      const Pipeline p(c, res, *category.model, *sub.model);
      VariantRow row{name, seed, evaluate(p, split.test.examples), test_ids};
      log::info(std::string(name) + " seed " + std::to_string(seed) + " intent acc " + fmt(row.result.intent.accuracy) +
                " slot f1 " + fmt(row.result.slots.f1));
      ab.rows.push_back(std::move(row));
    };

    // Stage A is tier 1 in both tiered and single-tier engines, so they share
    // the category model.
    const CategoryStage shared = train_category_stage(final_cfg, res, split);
    run_variant(kFinalVariant, final_cfg, shared);
    run_variant(kSingleTierVariant, single_tier, shared);
    const CategoryStage raw_tokens = train_category_stage(no_subst, res, split);
    run_variant(kNoSubstitutionVariant, no_subst, raw_tokens);
  }
  return ab;
}

void write_ablation_csv(const Ablation& ablation, std::ostream& out) {
  out << "variant,int_p,int_r,int_f1,int_acc,slot_p,slot_r,slot_f1\n";
  for (const char* v : {kSingleTierVariant, kNoSubstitutionVariant, kFinalVariant}) {
    out << v;
    const std::vector<double (*)(const EvalResult&)> fields = {
        [](const EvalResult& r) { return r.intent.precision; }, [](const EvalResult& r) { return r.intent.recall; },
        [](const EvalResult& r) { return r.intent.f1; },        [](const EvalResult& r) { return r.intent.accuracy; },
        [](const EvalResult& r) { return r.slots.precision; },  [](const EvalResult& r) { return r.slots.recall; },
        [](const EvalResult& r) { return r.slots.f1; },
    };
    for (auto f : fields) out << ',' << fmt(mean(ablation.metric(v, f)));
    out << '\n';
  }
}

}  // namespace snlu
