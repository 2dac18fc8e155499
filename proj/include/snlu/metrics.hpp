#pragma once

#include <span>
#include <vector>

#include "snlu/text.hpp"

namespace snlu {

struct ClassScores {
  int id = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct IntentMetrics {
  std::vector<ClassScores> per_class;  // classes present in gold, ascending id
  double precision = 0.0;              // macro
  double recall = 0.0;                 // macro
  double f1 = 0.0;                     // harmonic mean of macro P and R
  double accuracy = 0.0;
};

/// Macro-averaged over the classes that occur in `gold`. A class with no
/// predicted positives gets precision 0. Throws LengthMismatchError, and
/// Error on empty input.
IntentMetrics intent_metrics(std::span<const int> pred, std::span<const int> gold);

struct SlotLabel {
  CharSpan span;
  int type = 0;
  auto operator<=>(const SlotLabel&) const = default;
};

struct SlotMetrics {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Chunk-level scores: a predicted slot is correct iff (span, type) equals a
/// gold slot of the same query. Micro-aggregated over all queries.
/// Precision is 1 when nothing is predicted and nothing is gold, 0 when
/// nothing is predicted but gold is non-empty; recall mirrors this.
SlotMetrics slot_chunk_f1(std::span<const std::vector<SlotLabel>> pred, std::span<const std::vector<SlotLabel>> gold);

/// One-sided Welch t-test of H1: mean(a) > mean(b). Throws
/// InsufficientSamplesError with fewer than 3 samples on either side.
double significance(std::span<const double> a, std::span<const double> b);

double harmonic_mean(double p, double r);

}  // namespace snlu
