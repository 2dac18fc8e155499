#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "snlu/pipeline.hpp"

namespace snlu {

struct BiasCell {
  double bias = 0.0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
  std::size_t altered = 0;  // corrupted indicators in the training set
};

struct BiasSummary {
  double bias = 0.0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for one seed
};

struct BiasSweep {
  std::vector<BiasCell> cells;  // seed-major, bias order within a seed
  std::vector<BiasSummary> summary;

  std::vector<double> accuracies(double bias) const;
};

/// Per seed: one split and one category model, then one subcategory model per
/// bias value. Accuracy is the pipeline's subcategory accuracy on the test part.
BiasSweep bias_sweep(const PipelineConfig& cfg, const Resources& res, const Dataset& dataset,
                     const std::vector<double>& bias_values, const std::vector<std::uint64_t>& seeds);

/// `bias,seed,accuracy` rows.
void write_bias_csv(const BiasSweep& sweep, std::ostream& out);

struct VariantRow {
  std::string variant;
  std::uint64_t seed = 0;
  EvalResult result;
  std::vector<std::size_t> test_ids;
};

struct Ablation {
  std::vector<VariantRow> rows;  // seed-major

  std::vector<double> metric(const std::string& variant, double (*field)(const EvalResult&)) const;
};

inline constexpr const char* kFinalVariant = "final";
inline constexpr const char* kSingleTierVariant = "single_tier_ner";
inline constexpr const char* kNoSubstitutionVariant = "no_tag_substitution";

/// Final engine against its two ablations, sharing split and seeds.
Ablation ablation_run(const PipelineConfig& cfg, const Resources& res, const Dataset& dataset,
                      const std::vector<std::uint64_t>& seeds);

/// `variant,int_p,int_r,int_f1,int_acc,slot_p,slot_r,slot_f1`, one row per
/// variant with metrics averaged over seeds.
void write_ablation_csv(const Ablation& ablation, std::ostream& out);

double median(std::vector<double> v);

}  // namespace snlu
