#pragma once

#include <optional>
#include <span>
#include <string>

#include "ctr/common.hpp"

namespace ctr {

struct MetricsReport {
  double logloss = 0.0;
  double auc = 0.5;
  size_t sample_count = 0;
  size_t positive_count = 0;
  std::optional<double> relaimp_vs_baseline;  // percent

  std::string to_json() const;
};

// Mean BCE over the set; scores are clamped like the training loss.
double logloss(std::span<const int> labels, std::span<const double> scores);

// Mann-Whitney statistic: fraction of (positive, negative) pairs ranked
// correctly, ties counting 1/2. O(n log n) via rank sums. Throws DataError
// when only one class is present.
double auc(std::span<const int> labels, std::span<const double> scores);

// ((auc_new - 0.5) / (auc_baseline - 0.5) - 1) * 100. Requires baseline > 0.5.
double rela_imp(double auc_baseline, double auc_new);

}  // namespace ctr
