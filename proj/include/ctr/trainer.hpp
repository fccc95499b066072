#pragma once

#include <string>
#include <vector>

#include "ctr/data.hpp"
#include "ctr/loss.hpp"
#include "ctr/metrics.hpp"
#include "ctr/model.hpp"

namespace ctr {

enum class EvalMetric { auc, logloss };

EvalMetric eval_metric_from_string(const std::string& name);
const char* eval_metric_name(EvalMetric m);

struct TrainConfig {
  size_t batch_size = 256;
  int max_epochs = 20;
  double learning_rate = 1e-3;
  int early_stop_patience = 2;
  uint64_t seed = 1;
  LossSpec loss;
  ModelSpec model;
  EvalMetric eval_metric = EvalMetric::auc;

  void validate() const;
};

struct EpochStats {
  int epoch = 0;
  double train_loss = 0.0;  // mean weighted loss over the epoch
  double val_logloss = 0.0;
  double val_auc = 0.0;
};

struct RunRecord {
  std::vector<EpochStats> epochs;
  int stopping_epoch = 0;
  int best_epoch = 0;
  MetricsReport val;   // best checkpoint, validation partition
  MetricsReport test;  // best checkpoint, test partition
  double wall_time_sec = 0.0;
  std::string config_hash;

  std::string to_json() const;  // versioned; see README for the schema
};

struct TrainResult {
  Model model;
  RunRecord record;
};

// Mini-batch training with per-sample day weights, seeded epoch shuffling,
// Adam, and early stopping on the validation metric. The returned model is
// the best-validation checkpoint. Deterministic for a fixed (dataset,
// config): two runs produce bit-identical parameters and records (wall time
// aside).
TrainResult train(const DayIndexedDataset& dataset, const TrainConfig& config);

// Unweighted logloss and AUC over a partition. Read-only.
MetricsReport evaluate(const Model& model, std::span<const Sample> partition);

}  // namespace ctr
