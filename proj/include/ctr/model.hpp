#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctr/common.hpp"
#include "ctr/kernel.hpp"

namespace ctr {

enum class Interaction { mlp_only, fm_plus_mlp, cross_plus_mlp };

Interaction interaction_from_string(const std::string& name);
const char* interaction_name(Interaction v);

struct ModelSpec {
  Interaction interaction = Interaction::mlp_only;
  size_t embedding_dim = 16;
  std::vector<size_t> hidden_widths = {64, 64};
  size_t cross_depth = 2;  // cross variant only
  size_t field_count = 0;  // filled from the dataset

  void validate() const;  // throws ConfigError
};

// Offsets into the flat parameter vector. Layout order: embedding table,
// cross layers (w then b per depth, cross variant only), MLP layers (W then
// b), output head (W then b).
struct ParamLayout {
  size_t embedding = 0;
  size_t embedding_len = 0;
  std::vector<size_t> cross_w, cross_b;
  std::vector<size_t> mlp_w, mlp_b;
  std::vector<std::pair<size_t, size_t>> mlp_shape;  // (rows, cols) per layer
  size_t head_w = 0, head_b = 0;
  size_t head_in = 0;
  size_t cross_dim = 0;
  size_t total = 0;

  static ParamLayout make(const ModelSpec& spec, size_t vocab_size);
};

// One CTR model: embedding layer, one of three interaction layers, and a
// sigmoid prediction head. All parameters live in a single flat vector so
// optimizer state, checkpoints and checksums are trivial.
class Model {
 public:
  // Deterministic initialization: same (spec, vocab_size, seed) gives
  // bit-identical parameters. Weights uniform in [-0.05, 0.05), biases zero.
  static Model build(const ModelSpec& spec, size_t vocab_size, uint64_t seed);

  // sigmoid(logit) for one sample; pure, no tape.
  double predict(std::span<const uint32_t> features) const;
  double logit(std::span<const uint32_t> features) const;

  // Computes loss = sample_weight * bce(label, prediction) and accumulates
  // the gradients of that weighted loss into grad (same length as params()).
  double forward_backward(std::span<const uint32_t> features, int label, double sample_weight,
                          std::span<double> grad) const;

  const ModelSpec& spec() const { return spec_; }
  size_t vocab_size() const { return vocab_size_; }
  uint64_t seed() const { return seed_; }
  const ParamLayout& layout() const { return layout_; }
  Vec& params() { return params_; }
  const Vec& params() const { return params_; }
  size_t param_count() const { return params_.size(); }

  uint64_t param_checksum() const;

  // Versioned binary checkpoint: spec, vocab size, seed, flat parameters.
  void save(const std::string& path) const;
  static Model load(const std::string& path);

 private:
  Model() = default;

  ModelSpec spec_;
  size_t vocab_size_ = 0;
  uint64_t seed_ = 0;
  ParamLayout layout_;
  Vec params_;
};

}  // namespace ctr
