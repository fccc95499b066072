#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctr/common.hpp"

namespace ctr {

// Row-major dense matrix of 64-bit floats.
struct DenseMatrix {
  size_t rows = 0;
  size_t cols = 0;
  Vec data;

  DenseMatrix() = default;
  DenseMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(size_t r, size_t c) { return data[r * cols + c]; }
  double at(size_t r, size_t c) const { return data[r * cols + c]; }
};

// Per-index embedding vectors. Index 0 is the shared out-of-vocabulary row.
struct EmbeddingTable {
  size_t vocab_size = 0;
  size_t dim = 0;
  Vec rows;  // vocab_size * dim, row-major

  EmbeddingTable() = default;
  EmbeddingTable(size_t vocab, size_t d) : vocab_size(vocab), dim(d), rows(vocab * d, 0.0) {}

  std::span<const double> row(size_t index) const {
    return {rows.data() + index * dim, dim};
  }
  std::span<double> row(size_t index) { return {rows.data() + index * dim, dim}; }
};

// Ordered record of forward activations. backward() calls pop records in the
// exact reverse order of the forward calls that pushed them.
class Tape {
 public:
  void push(Vec v) { records_.push_back(std::move(v)); }
  Vec pop() {
    if (records_.empty()) throw InternalError("tape underflow: backward out of sync with forward");
    Vec v = std::move(records_.back());
    records_.pop_back();
    return v;
  }
  bool empty() const { return records_.empty(); }
  void clear() { records_.clear(); }

 private:
  std::vector<Vec> records_;
};

// -- dense layer ------------------------------------------------------------

// y = W x + b. Records x on the tape when one is given.
Vec dense_forward(const DenseMatrix& W, const Vec& b, const Vec& x, Tape* tape = nullptr);

struct DenseGrads {
  DenseMatrix grad_w;
  Vec grad_b;
  Vec grad_x;
};

// gradW = upstream (outer) x, gradB = upstream, gradX = W^T upstream.
DenseGrads dense_backward(const DenseMatrix& W, Tape& tape, const Vec& upstream);

// -- activations ------------------------------------------------------------

Vec relu(const Vec& x, Tape* tape = nullptr);
// Masks upstream where the recorded input was <= 0 (gradient at 0 is 0).
Vec relu_backward(Tape& tape, const Vec& upstream);

// Numerically stable logistic; saturates instead of overflowing.
double sigmoid(double z);

// -- embedding lookup --------------------------------------------------------

// Concatenation of the selected rows, field order preserved. Records the
// indices on the tape (as doubles) when one is given.
Vec embedding_forward(const EmbeddingTable& table, std::span<const uint32_t> indices,
                      Tape* tape = nullptr);

// Scatters upstream back to the selected rows of grad_rows (accumulating;
// duplicate indices add). grad_rows has the same shape as table.rows.
void embedding_backward(Tape& tape, const Vec& upstream, size_t dim, std::span<double> grad_rows);

// -- factorization-machine pairwise term -------------------------------------

// sum_{i<j} <e_i, e_j> over the field embeddings laid out contiguously in
// `concat` (field_count blocks of `dim`), via the 0.5*((sum e)^2 - sum e^2)
// identity per dimension.
double fm_interaction(const Vec& concat, size_t field_count, size_t dim);

// d(fm)/d(e_{f,d}) = (sum_g e_{g,d}) - e_{f,d}, scaled by upstream.
void fm_backward(const Vec& concat, size_t field_count, size_t dim, double upstream,
                 std::span<double> grad_concat);

// -- cross layer (x0 * (xl . w) + b + xl) -------------------------------------

Vec cross_layer(const Vec& x0, const Vec& xl, const Vec& w, const Vec& b, Tape* tape = nullptr);

struct CrossGrads {
  Vec grad_w;
  Vec grad_b;
  Vec grad_x0;
  Vec grad_xl;
};

CrossGrads cross_layer_backward(const Vec& x0, const Vec& w, Tape& tape, const Vec& upstream);

// -- Adam -------------------------------------------------------------------

struct AdamState {
  Vec first_moment;
  Vec second_moment;
  uint64_t step_count = 0;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  AdamState() = default;
  AdamState(size_t n, double learning_rate)
      : first_moment(n, 0.0), second_moment(n, 0.0), lr(learning_rate) {}
};

// Standard Adam with bias correction. Throws TrainError on a non-finite
// gradient entry (message names the parameter index; callers add batch
// context).
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

}  // namespace ctr
