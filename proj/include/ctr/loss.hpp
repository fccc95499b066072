#pragma once

#include <string>

#include "ctr/common.hpp"

namespace ctr {

enum class LossVariant { plain, linear, anti, exponential, logarithmic };

// Config-string names: plain, tif_linear, tif_anti, tif_exp, tif_log.
LossVariant loss_variant_from_string(const std::string& name);
const char* loss_variant_name(LossVariant v);

struct LossSpec {
  LossVariant variant = LossVariant::plain;
  double alpha = 1.0;  // scales the linear variant only
  int n_days = 1;      // day count of the training partition

  // Training-loop knobs, both off by default. global_scale multiplies every
  // sample weight; normalize_by_weight_sum divides each batch loss by the
  // batch's weight sum instead of the batch size.
  double global_scale = 1.0;
  bool normalize_by_weight_sum = false;

  void validate() const;
};

// Clamp applied to predicted probabilities before taking logs.
inline constexpr double kProbEps = 1e-7;

// -(y log p + (1-y) log(1-p)) with p clamped to [kProbEps, 1-kProbEps].
double bce(int label, double yhat);

// Per-sample weight for day t (1 = oldest training day, n_days = newest).
//   plain        1
//   linear       alpha * t / N
//   anti         (N - t + 1) / N
//   exponential  (e^t - 1) / (e^N - 1), evaluated in overflow-safe form
//   logarithmic  (ln t + 1) / (ln N + 1)
// The exponential tail underflows double precision for N - t >> 700; it is
// floored at the smallest normal double so no weight is ever exactly zero.
double tif_weight(const LossSpec& spec, int t);

struct WeightedLossValue {
  double raw_bce = 0.0;
  double weight = 1.0;
  double weighted = 0.0;
};

// weighted = bce(label, yhat) * tif_weight(spec, t). The gradient of the
// weighted loss w.r.t. yhat is the plain BCE gradient scaled by the weight.
WeightedLossValue weighted_bce(const LossSpec& spec, int label, double yhat, int t);

}  // namespace ctr
