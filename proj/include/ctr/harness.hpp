#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctr/data.hpp"
#include "ctr/trainer.hpp"

namespace ctr {

enum class DatasetSource { synthetic, csv, bundle };

struct DatasetConfig {
  DatasetSource source = DatasetSource::synthetic;
  DriftConfig drift;           // synthetic
  std::string path;            // csv file or bundle directory
  CsvOptions csv;              // csv
  SplitOptions split;          // csv + synthetic
};

struct NamedModelSpec {
  std::string name;
  ModelSpec spec;  // field_count filled from the dataset at run time
};

struct ExperimentConfig {
  DatasetConfig dataset;
  std::vector<NamedModelSpec> models;
  std::vector<LossVariant> losses;  // must contain plain (the RelaImp baseline)
  double alpha = 1.0;
  double global_scale = 1.0;
  bool normalize_by_weight_sum = false;
  TrainConfig train;  // loss/model/seed fields are per-cell, filled by the runner
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
  std::string output_dir = "runs";
  int jobs = 1;

  // Parses the versioned JSON schema documented in the README. Unknown keys
  // are errors. Throws ConfigError.
  static ExperimentConfig from_json_file(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);
};

struct TableRow {
  std::string model;
  std::string variant;
  size_t seed_count = 0;
  double logloss_median = 0.0, logloss_min = 0.0, logloss_max = 0.0;
  double auc_median = 0.0, auc_min = 0.0, auc_max = 0.0;
  std::optional<double> relaimp;  // percent vs the model's plain baseline
};

struct ComparisonTable {
  std::vector<TableRow> rows;  // sorted by (model, canonical variant order)

  std::string to_text() const;
  std::string to_csv() const;
};

struct ExperimentResult {
  ComparisonTable table;
  int cells_total = 0;
  int cells_run = 0;
  int cells_skipped = 0;
  int cells_failed = 0;
};

// Executes every (model, loss, seed) cell, writing run-record JSON files, a
// checkpoint per cell, a manifest, and the final table (text + CSV) under
// config.output_dir. Completed cells are skipped on re-runs via the
// config-hash manifest; failed cells are recorded and the remaining cells
// still run.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Rebuilds the table from the run records referenced by the manifest in
// out_dir. Pure: byte-identical output for the same records. Throws
// DataError when there are no run records.
ComparisonTable report_from_records(const std::string& out_dir);

// Loads the dataset described by the config (shared by the CLI commands).
DayIndexedDataset load_dataset(const DatasetConfig& config, DriftGroundTruth* truth_out = nullptr);

// Stable hex fingerprint of one cell's full configuration.
std::string cell_config_hash(const ExperimentConfig& config, const std::string& model_name,
                             LossVariant variant, uint64_t seed);

}  // namespace ctr
