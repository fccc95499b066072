#include "ctr/kernel.hpp"

#include <cmath>
#include <cstdio>

namespace ctr {

Vec dense_forward(const DenseMatrix& W, const Vec& b, const Vec& x, Tape* tape) {
  if (x.size() != W.cols || b.size() != W.rows) {
    throw ConfigError("dense layer dimension mismatch: W is " + std::to_string(W.rows) + "x" +
                      std::to_string(W.cols) + ", x has " + std::to_string(x.size()) +
                      ", b has " + std::to_string(b.size()));
  }
  Vec y(W.rows);
  for (size_t r = 0; r < W.rows; ++r) {
    const double* wr = W.data.data() + r * W.cols;
    double acc = b[r];
    for (size_t c = 0; c < W.cols; ++c) acc += wr[c] * x[c];
    y[r] = acc;
  }
  if (tape) tape->push(x);
  return y;
}

DenseGrads dense_backward(const DenseMatrix& W, Tape& tape, const Vec& upstream) {
  Vec x = tape.pop();
  if (upstream.size() != W.rows || x.size() != W.cols) {
    throw InternalError("dense_backward shape mismatch");
  }
  DenseGrads g;
  g.grad_w = DenseMatrix(W.rows, W.cols);
  g.grad_b = upstream;
  g.grad_x.assign(W.cols, 0.0);
  for (size_t r = 0; r < W.rows; ++r) {
    double u = upstream[r];
    double* gw = g.grad_w.data.data() + r * W.cols;
    const double* wr = W.data.data() + r * W.cols;
    for (size_t c = 0; c < W.cols; ++c) {
      gw[c] = u * x[c];
      g.grad_x[c] += wr[c] * u;
    }
  }
  return g;
}

Vec relu(const Vec& x, Tape* tape) {
  Vec y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
  if (tape) tape->push(x);
  return y;
}

Vec relu_backward(Tape& tape, const Vec& upstream) {
  Vec x = tape.pop();
  if (x.size() != upstream.size()) throw InternalError("relu_backward shape mismatch");
  Vec g(x.size());
  for (size_t i = 0; i < x.size(); ++i) g[i] = x[i] > 0.0 ? upstream[i] : 0.0;
  return g;
}

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  double e = std::exp(z);
  return e / (1.0 + e);
}

Vec embedding_forward(const EmbeddingTable& table, std::span<const uint32_t> indices, Tape* tape) {
  Vec out(indices.size() * table.dim);
  for (size_t f = 0; f < indices.size(); ++f) {
    if (indices[f] >= table.vocab_size) {
      throw DataError("embedding index " + std::to_string(indices[f]) +
                      " out of range (vocab size " + std::to_string(table.vocab_size) + ")");
    }
    auto row = table.row(indices[f]);
    std::copy(row.begin(), row.end(), out.begin() + f * table.dim);
  }
  if (tape) {
    Vec idx(indices.size());
    for (size_t f = 0; f < indices.size(); ++f) idx[f] = static_cast<double>(indices[f]);
    tape->push(std::move(idx));
  }
  return out;
}

void embedding_backward(Tape& tape, const Vec& upstream, size_t dim, std::span<double> grad_rows) {
  Vec idx = tape.pop();
  if (upstream.size() != idx.size() * dim) throw InternalError("embedding_backward shape mismatch");
  for (size_t f = 0; f < idx.size(); ++f) {
    size_t row = static_cast<size_t>(idx[f]);
    for (size_t d = 0; d < dim; ++d) grad_rows[row * dim + d] += upstream[f * dim + d];
  }
}

double fm_interaction(const Vec& concat, size_t field_count, size_t dim) {
  if (field_count < 2) {
    throw ConfigError("fm_interaction needs at least 2 fields, got " +
                      std::to_string(field_count));
  }
  if (concat.size() != field_count * dim) throw ConfigError("fm_interaction shape mismatch");
  double total = 0.0;
  for (size_t d = 0; d < dim; ++d) {
    double sum = 0.0, sum_sq = 0.0;
    for (size_t f = 0; f < field_count; ++f) {
      double e = concat[f * dim + d];
      sum += e;
      sum_sq += e * e;
    }
    total += 0.5 * (sum * sum - sum_sq);
  }
  return total;
}

void fm_backward(const Vec& concat, size_t field_count, size_t dim, double upstream,
                 std::span<double> grad_concat) {
  for (size_t d = 0; d < dim; ++d) {
    double sum = 0.0;
    for (size_t f = 0; f < field_count; ++f) sum += concat[f * dim + d];
    for (size_t f = 0; f < field_count; ++f) {
      grad_concat[f * dim + d] += upstream * (sum - concat[f * dim + d]);
    }
  }
}

Vec cross_layer(const Vec& x0, const Vec& xl, const Vec& w, const Vec& b, Tape* tape) {
  size_t n = x0.size();
  if (xl.size() != n || w.size() != n || b.size() != n) {
    throw ConfigError("cross_layer requires four vectors of equal length");
  }
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += xl[i] * w[i];
  Vec y(n);
  for (size_t i = 0; i < n; ++i) y[i] = x0[i] * s + b[i] + xl[i];
  if (tape) tape->push(xl);
  return y;
}

CrossGrads cross_layer_backward(const Vec& x0, const Vec& w, Tape& tape, const Vec& upstream) {
  Vec xl = tape.pop();
  size_t n = x0.size();
  if (xl.size() != n || w.size() != n || upstream.size() != n) {
    throw InternalError("cross_layer_backward shape mismatch");
  }
  double s = 0.0, ux0 = 0.0;
  for (size_t i = 0; i < n; ++i) {
    s += xl[i] * w[i];
    ux0 += upstream[i] * x0[i];
  }
  CrossGrads g;
  g.grad_w.resize(n);
  g.grad_b = upstream;
  g.grad_x0.resize(n);
  g.grad_xl.resize(n);
  for (size_t i = 0; i < n; ++i) {
    g.grad_w[i] = ux0 * xl[i];
    g.grad_x0[i] = upstream[i] * s;
    g.grad_xl[i] = ux0 * w[i] + upstream[i];
  }
  return g;
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.first_moment.size()) {
    throw ConfigError("adam_step shape mismatch");
  }
  for (size_t i = 0; i < grads.size(); ++i) {
    if (!std::isfinite(grads[i])) {
      throw TrainError("non-finite gradient at parameter index " + std::to_string(i));
    }
  }
  state.step_count += 1;
  double bias1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step_count));
  double bias2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step_count));
  for (size_t i = 0; i < params.size(); ++i) {
    double g = grads[i];
    double m = state.first_moment[i] = state.beta1 * state.first_moment[i] + (1.0 - state.beta1) * g;
    double v = state.second_moment[i] =
        state.beta2 * state.second_moment[i] + (1.0 - state.beta2) * g * g;
    double m_hat = m / bias1;
    double v_hat = v / bias2;
    params[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
  }
}

}  // namespace ctr
