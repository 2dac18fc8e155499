#include "snlu/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "snlu/errors.hpp"

namespace snlu {

double harmonic_mean(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

IntentMetrics intent_metrics(std::span<const int> pred, std::span<const int> gold) {
  if (pred.size() != gold.size()) throw LengthMismatchError("prediction and gold lengths differ");
  if (gold.empty()) throw Error("intent metrics need at least one example");

  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0, support = 0;
  };
  std::map<int, Counts> counts;
  for (int g : gold) counts[g].support++;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i] == gold[i]) {
      ++correct;
      counts[gold[i]].tp++;
    } else {
      counts[gold[i]].fn++;
      if (auto it = counts.find(pred[i]); it != counts.end()) it->second.fp++;
    }
  }

  IntentMetrics m;
  m.accuracy = static_cast<double>(correct) / static_cast<double>(gold.size());
  for (const auto& [id, c] : counts) {
    ClassScores s{.id = id, .support = c.support};
    s.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
    s.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    s.f1 = harmonic_mean(s.precision, s.recall);
    m.precision += s.precision;
    m.recall += s.recall;
    m.per_class.push_back(s);
  }
  m.precision /= static_cast<double>(m.per_class.size());
  m.recall /= static_cast<double>(m.per_class.size());
  m.f1 = harmonic_mean(m.precision, m.recall);
  return m;
}

SlotMetrics slot_chunk_f1(std::span<const std::vector<SlotLabel>> pred, std::span<const std::vector<SlotLabel>> gold) {
  if (pred.size() != gold.size()) throw LengthMismatchError("prediction and gold query counts differ");
  SlotMetrics m;
  std::size_t n_pred = 0, n_gold = 0;
  for (std::size_t q = 0; q < pred.size(); ++q) {
    std::vector<SlotLabel> p = pred[q], g = gold[q];
    std::sort(p.begin(), p.end());
    std::sort(g.begin(), g.end());
    std::vector<SlotLabel> common;
    std::set_intersection(p.begin(), p.end(), g.begin(), g.end(), std::back_inserter(common));
    m.true_positives += common.size();
    n_pred += p.size();
    n_gold += g.size();
  }
  m.false_positives = n_pred - m.true_positives;
  m.false_negatives = n_gold - m.true_positives;
  m.precision = n_pred > 0 ? static_cast<double>(m.true_positives) / static_cast<double>(n_pred) : (n_gold == 0 ? 1.0 : 0.0);
  m.recall = n_gold > 0 ? static_cast<double>(m.true_positives) / static_cast<double>(n_gold) : (n_pred == 0 ? 1.0 : 0.0);
  m.f1 = harmonic_mean(m.precision, m.recall);
  return m;
}

double significance(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 3 || b.size() < 3) {
    throw InsufficientSamplesError("the t-test needs at least 3 samples per side");
  }
  auto mean_var = [](std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::pair{mean, ss / (n - 1.0)};
  };
  const auto [ma, va] = mean_var(a);
  const auto [mb, vb] = mean_var(b);
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double sa = va / na, sb = vb / nb;
  const double diff = ma - mb;
  if (sa + sb == 0.0) {
    if (diff > 0.0) return 0.0;
    return diff < 0.0 ? 1.0 : 0.5;
  }
  const double t = diff / std::sqrt(sa + sb);
  const double df = (sa + sb) * (sa + sb) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  const boost::math::students_t dist(df);
  return boost::math::cdf(boost::math::complement(dist, t));
}

}  // namespace snlu
