#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "gcnsi/matrix.hpp"

namespace gcnsi {

// A trainable weight matrix with its gradient and Adam moment estimates.
struct Parameter {
  DenseMatrix value;
  DenseMatrix grad;
  DenseMatrix adam_m;
  DenseMatrix adam_v;
  std::int64_t step_count = 0;

  Parameter() = default;
  explicit Parameter(DenseMatrix init);

  void zero_grad() { grad.fill(0.0); }
};

struct AdamConfig {
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Uniform on [-s, s] with s = sqrt(6 / (rows + cols)).
DenseMatrix glorot_init(std::size_t rows, std::size_t cols, std::uint64_t seed);

DenseMatrix relu(const DenseMatrix& x);

// Row-wise softmax with max subtraction.
DenseMatrix softmax_rows(const DenseMatrix& x);

struct LossAndGrad {
  double loss = 0.0;
  DenseMatrix grad;
};

// Mean cross-entropy over the rows in `rows` against integer targets. The
// gradient is taken with respect to the logits that produced `probs` through
// softmax, i.e. (probs - onehot) / |rows| on selected rows and zero elsewhere.
LossAndGrad masked_cross_entropy(const DenseMatrix& probs, std::span<const Label> targets,
                                 std::span<const std::size_t> rows);

// factor * 0.5 * ||w||_F^2 and its gradient factor * w.
LossAndGrad l2_penalty(const DenseMatrix& w, double factor);

// Bias-corrected Adam update of p.value from p.grad. The gradient is left as is.
void adam_step(Parameter& p, const AdamConfig& cfg);

// Central-difference check of `analytic` against f at x. Returns the largest
// |fd - analytic| / max(1, |fd|, |analytic|) over all coordinates.
double finite_difference_check(const std::function<double(const DenseMatrix&)>& f,
                               const DenseMatrix& x, const DenseMatrix& analytic,
                               double h = 1e-5);

}  // namespace gcnsi
