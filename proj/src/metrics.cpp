#include "ctr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "ctr/loss.hpp"

namespace ctr {

std::string MetricsReport::to_json() const {
  nlohmann::json j;
  j["logloss"] = logloss;
  j["auc"] = auc;
  j["sample_count"] = sample_count;
  j["positive_count"] = positive_count;
  if (relaimp_vs_baseline) j["relaimp_vs_baseline"] = *relaimp_vs_baseline;
  return j.dump();
}

double logloss(std::span<const int> labels, std::span<const double> scores) {
  if (labels.empty()) throw DataError("logloss over an empty set");
  if (labels.size() != scores.size()) throw DataError("logloss: labels/scores length mismatch");
  double total = 0.0;
  for (size_t i = 0; i < labels.size(); ++i) total += bce(labels[i], scores[i]);
  return total / static_cast<double>(labels.size());
}

double auc(std::span<const int> labels, std::span<const double> scores) {
  if (labels.size() != scores.size()) throw DataError("auc: labels/scores length mismatch");
  size_t n = labels.size();
  size_t positives = 0;
  for (int y : labels) {
    if (y != 0 && y != 1) throw DataError("auc: label must be 0 or 1");
    positives += static_cast<size_t>(y);
  }
  size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    throw DataError("auc undefined: only one class present");
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] < scores[b]; });

  // rank sum of the positives, tied scores sharing their average rank
  double positive_rank_sum = 0.0;
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    // 1-based ranks i+1 .. j share the average (i+1 + j) / 2
    double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (size_t k = i; k < j; ++k) {
      if (labels[order[k]] == 1) positive_rank_sum += avg_rank;
    }
    i = j;
  }

  double p = static_cast<double>(positives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(negatives));
}

double rela_imp(double auc_baseline, double auc_new) {
  if (!(auc_baseline > 0.5)) {
    throw DataError("rela_imp undefined: baseline auc must exceed 0.5");
  }
  return ((auc_new - 0.5) / (auc_baseline - 0.5) - 1.0) * 100.0;
}

}  // namespace ctr
