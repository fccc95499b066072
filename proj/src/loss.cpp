#include "ctr/loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctr {

LossVariant loss_variant_from_string(const std::string& name) {
  if (name == "plain") return LossVariant::plain;
  if (name == "tif_linear") return LossVariant::linear;
  if (name == "tif_anti") return LossVariant::anti;
  if (name == "tif_exp") return LossVariant::exponential;
  if (name == "tif_log") return LossVariant::logarithmic;
  throw ConfigError("unknown loss variant \"" + name +
                    "\" (expected plain, tif_linear, tif_anti, tif_exp or tif_log)");
}

const char* loss_variant_name(LossVariant v) {
  switch (v) {
    case LossVariant::plain: return "plain";
    case LossVariant::linear: return "tif_linear";
    case LossVariant::anti: return "tif_anti";
    case LossVariant::exponential: return "tif_exp";
    case LossVariant::logarithmic: return "tif_log";
  }
  throw InternalError("unreachable loss variant");
}

void LossSpec::validate() const {
  if (alpha <= 0.0) throw ConfigError("loss alpha must be > 0");
  if (n_days < 1) throw ConfigError("loss n_days must be >= 1");
  if (global_scale <= 0.0) throw ConfigError("loss global_scale must be > 0");
}

double bce(int label, double yhat) {
  if (label != 0 && label != 1) {
    throw DataError("label must be 0 or 1, got " + std::to_string(label));
  }
  double p = std::clamp(yhat, kProbEps, 1.0 - kProbEps);
  return label == 1 ? -std::log(p) : -std::log1p(-p);
}

double tif_weight(const LossSpec& spec, int t) {
  const int n = spec.n_days;
  if (t < 1 || t > n) {
    throw DataError("day index " + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
  }
  switch (spec.variant) {
    case LossVariant::plain:
      return 1.0;
    case LossVariant::linear:
      return spec.alpha * (static_cast<double>(t) / n);
    case LossVariant::anti:
      return static_cast<double>(n - t + 1) / n;
    case LossVariant::exponential: {
      // (e^t - 1) / (e^N - 1) rewritten as e^(t-N) * (1 - e^-t) / (1 - e^-N);
      // every factor is representable for any N. The tail still underflows
      // once t - N < ~-745, so floor at the smallest normal double to keep
      // old samples at a nonzero weight.
      double w = std::exp(static_cast<double>(t - n)) * (-std::expm1(-static_cast<double>(t))) /
                 (-std::expm1(-static_cast<double>(n)));
      return std::max(w, std::numeric_limits<double>::min());
    }
    case LossVariant::logarithmic:
      return (std::log(static_cast<double>(t)) + 1.0) / (std::log(static_cast<double>(n)) + 1.0);
  }
  throw InternalError("unreachable loss variant");
}

WeightedLossValue weighted_bce(const LossSpec& spec, int label, double yhat, int t) {
  WeightedLossValue v;
  v.raw_bce = bce(label, yhat);
  v.weight = tif_weight(spec, t);
  v.weighted = v.raw_bce * v.weight;
  return v;
}

}  // namespace ctr
