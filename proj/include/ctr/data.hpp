#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctr/common.hpp"

namespace ctr {

// One parsed input row: a YYMMDDHH timestamp, the categorical values in
// schema order, and the binary label.
struct RawRecord {
  std::string timestamp;
  std::vector<std::string> values;
  int label = 0;

  bool operator==(const RawRecord&) const = default;
};

struct TimeFeatures {
  int hour = 0;      // 0..23
  int weekday = 0;   // 0 = Monday .. 6 = Sunday
  bool is_weekend = false;
};

// Parses YYMMDDHH (years 2000-2099) and resolves the weekday against the
// civil calendar. Throws DataError on a malformed or impossible timestamp.
TimeFeatures derive_time_features(const std::string& timestamp);

// Names of the three features derived from the timestamp. They are prepended
// to the categorical field list of every dataset.
std::vector<std::string> derived_field_names();

// (field, value) -> index map. Index 0 is the shared out-of-vocabulary slot;
// assigned indices start at 1 in first-occurrence order.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(size_t field_count) : maps_(field_count) {}

  uint32_t lookup(size_t field, const std::string& value) const;
  uint32_t insert(size_t field, const std::string& value);  // assigns next index
  size_t size() const { return next_index_; }               // includes OOV slot
  size_t field_count() const { return maps_.size(); }

  void save_tsv(const std::string& path, std::span<const std::string> field_names) const;
  static Vocabulary load_tsv(const std::string& path, std::span<const std::string> field_names);

 private:
  std::vector<std::unordered_map<std::string, uint32_t>> maps_;
  uint32_t next_index_ = 1;
};

struct Sample {
  std::vector<uint32_t> features;  // one vocabulary index per field
  int label = 0;
  int day = 0;  // calendar-day order; training samples carry 1..N

  bool operator==(const Sample&) const = default;
};

// Chronologically ordered samples with split boundaries, the training day
// count N, and the vocabulary built from the training partition.
struct DayIndexedDataset {
  std::vector<std::string> field_names;  // derived fields first, then categoricals
  Vocabulary vocab;
  std::vector<Sample> samples;
  size_t train_end = 0;  // samples[0, train_end) = train
  size_t val_end = 0;    // samples[train_end, val_end) = val, rest = test
  int train_days = 0;    // N

  std::span<const Sample> train() const { return {samples.data(), train_end}; }
  std::span<const Sample> val() const {
    return {samples.data() + train_end, val_end - train_end};
  }
  std::span<const Sample> test() const {
    return {samples.data() + val_end, samples.size() - val_end};
  }
  size_t field_count() const { return field_names.size(); }
};

struct SplitOptions {
  int ratio_train = 8;
  int ratio_val = 1;
  int ratio_test = 1;
  size_t min_frequency = 2;  // vocabulary threshold, counted on train records
  bool day_aligned = false;  // cut at calendar-day boundaries instead of sample counts
};

// Builds a vocabulary over the given expanded value rows: (field, value)
// pairs occurring >= min_frequency get unique indices in first-occurrence
// order, rarer values fall to the OOV index 0.
Vocabulary build_vocab(std::span<const std::vector<std::string>> rows, size_t field_count,
                       size_t min_frequency);

// Full pipeline: stable-sorts records by timestamp, derives the time
// features, splits train/val/test, numbers the training days 1..N, builds
// the vocabulary from the training partition and indexes every sample.
// `categorical_names` names record.values; the dataset's field list is the
// derived features followed by these.
DayIndexedDataset chronological_split(std::vector<RawRecord> records,
                                      std::vector<std::string> categorical_names,
                                      const SplitOptions& options = {});

// -- synthetic concept-drift generator ----------------------------------------

struct DriftConfig {
  int n_days = 10;
  int samples_per_day = 5000;
  int field_count = 8;
  int cardinality = 50;     // categories per field
  double drift_rate = 0.5;  // 0 = static latent model, 1 = half-turn over the horizon
  double base_ctr = 0.25;
  uint64_t seed = 7;

  void validate() const;
};

struct DriftGroundTruth {
  // coefficients[d] is the latent coefficient vector (field_count *
  // cardinality entries) that generated day d+1.
  std::vector<Vec> coefficients;

  void save_csv(const std::string& path, int field_count, int cardinality) const;
};

struct SyntheticData {
  std::vector<RawRecord> records;  // chronological
  std::vector<std::string> categorical_names;
  DriftGroundTruth truth;
};

// Per-day latent logistic model whose coefficient vector rotates in a fixed
// 2-plane by drift_rate per day; labels are Bernoulli draws from it.
// Deterministic for a fixed config.
SyntheticData generate_drift_records(const DriftConfig& config);

// generate_drift_records followed by the standard pipeline.
DayIndexedDataset generate_drift(const DriftConfig& config, const SplitOptions& options = {},
                                 DriftGroundTruth* truth_out = nullptr);

// -- CSV ----------------------------------------------------------------------

struct CsvOptions {
  std::string label_column = "click";
  std::string time_column = "hour";
  // Categorical columns to keep; empty = every column except label and time,
  // in header order.
  std::vector<std::string> categorical_columns;
  bool skip_bad_rows = false;  // false = abort with a parse error
};

struct CsvLoadResult {
  std::vector<RawRecord> records;
  std::vector<std::string> categorical_names;
  size_t rows_read = 0;
  size_t rows_skipped = 0;
  size_t positives = 0;
};

// Streamed header+rows parse. Malformed rows raise DataError naming the line
// number, or are counted and skipped when options.skip_bad_rows is set.
CsvLoadResult load_csv(const std::string& path, const CsvOptions& options = {});

// Inverse of load_csv for generated data: header is
// label_column,time_column,<categorical names...>.
void write_csv(const std::string& path, std::span<const RawRecord> records,
               std::span<const std::string> categorical_names, const CsvOptions& options = {});

// -- prepared-dataset bundle ---------------------------------------------------

// Writes records.csv + vocab.tsv + meta.json under dir; load_bundle restores
// the dataset without recomputing the vocabulary or split.
void save_bundle(const std::string& dir, const DayIndexedDataset& dataset,
                 std::span<const RawRecord> sorted_records, const SplitOptions& options);
DayIndexedDataset load_bundle(const std::string& dir);

}  // namespace ctr
