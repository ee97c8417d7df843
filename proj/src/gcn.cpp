#include "gcnsi/gcn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gcnsi/synth.hpp"

namespace gcnsi {

Features Features::identity(std::size_t n) {
  Features f;
  f.rows_ = n;
  f.identity_ = true;
  return f;
}

const DenseMatrix& Features::dense() const {
  if (identity_) throw std::logic_error("Features: identity features have no dense table");
  return x_;
}

DenseMatrix Features::to_dense() const { return identity_ ? DenseMatrix::identity(rows_) : x_; }

std::size_t GcnInput::feature_dim() const {
  switch (layout) {
    case Layout::kIdentity: return a_hat.n;
    case Layout::kDense: return ax.cols();
    case Layout::kSparse: return x_sparse.cols;
  }
  return 0;
}

GcnInput make_gcn_input(NormalizedAdjacency a_hat, const Features& x) {
  if (x.rows() != a_hat.n) {
    throw std::invalid_argument("make_gcn_input: " + std::to_string(x.rows()) +
                                " feature rows for " + std::to_string(a_hat.n) + " nodes");
  }
  GcnInput in;
  if (x.is_identity()) {
    in.layout = GcnInput::Layout::kIdentity;
  } else if (density(x.dense()) <= kSparseFeatureDensity) {
    in.layout = GcnInput::Layout::kSparse;
    in.x_sparse = CsrMatrix::from_dense(x.dense());
  } else {
    in.layout = GcnInput::Layout::kDense;
    in.ax = spmm(a_hat, x.dense());
  }
  in.a_hat = std::move(a_hat);
  return in;
}

GcnModel GcnModel::create(std::size_t in_dim, std::size_t hidden_size, std::size_t classes,
                          std::uint64_t seed) {
  GcnModel m;
  m.w0 = Parameter(glorot_init(in_dim, hidden_size, derive_seed(seed, 0)));
  m.w1 = Parameter(glorot_init(hidden_size, classes, derive_seed(seed, 1)));
  return m;
}

GcnOutput gcn_forward(GcnModel& model, const GcnInput& input) {
  if (model.w0.value.rows() != input.feature_dim()) {
    throw std::invalid_argument("gcn_forward: W0 has " + std::to_string(model.w0.value.rows()) +
                                " rows but features have " + std::to_string(input.feature_dim()) +
                                " columns");
  }
  switch (input.layout) {
    case GcnInput::Layout::kIdentity:
      model.pre_activation = spmm(input.a_hat, model.w0.value);
      break;
    case GcnInput::Layout::kDense:
      model.pre_activation = matmul(input.ax, model.w0.value);
      break;
    case GcnInput::Layout::kSparse:
      model.pre_activation = spmm(input.a_hat, spmm(input.x_sparse, model.w0.value));
      break;
  }
  model.hidden = relu(model.pre_activation);
  // A_hat (H W1) equals (A_hat H) W1 and is cheaper since k <= hidden.
  const DenseMatrix logits = spmm(input.a_hat, matmul(model.hidden, model.w1.value));
  model.cache_valid = true;

  GcnOutput out;
  out.z = softmax_rows(logits);
  out.y_hat = argmax_rows(out.z);
  return out;
}

GcnOutput gcn_forward(GcnModel& model, const NormalizedAdjacency& a_hat, const Features& x) {
  return gcn_forward(model, make_gcn_input(a_hat, x));
}

void gcn_backward(GcnModel& model, const GcnInput& input, const DenseMatrix& grad_wrt_logits,
                  double l2) {
  if (!model.cache_valid) throw std::logic_error("gcn_backward: forward cache is stale");
  if (grad_wrt_logits.rows() != input.num_nodes() ||
      grad_wrt_logits.cols() != model.num_classes()) {
    throw std::invalid_argument("gcn_backward: logit gradient has the wrong shape");
  }
  // A_hat is symmetric, so A_hat^T G = A_hat G.
  const DenseMatrix d_hw = spmm(input.a_hat, grad_wrt_logits);
  model.w1.grad = matmul_tn(model.hidden, d_hw);

  DenseMatrix d_pre = matmul_nt(d_hw, model.w1.value);
  const auto pre = model.pre_activation.values();
  auto dp = d_pre.values();
  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (pre[i] <= 0.0) dp[i] = 0.0;
  }
  // dW0 = (A_hat X)^T d_pre = X^T (A_hat d_pre)
  switch (input.layout) {
    case GcnInput::Layout::kIdentity:
      model.w0.grad = spmm(input.a_hat, d_pre);
      break;
    case GcnInput::Layout::kDense:
      model.w0.grad = matmul_tn(input.ax, d_pre);
      break;
    case GcnInput::Layout::kSparse:
      model.w0.grad = spmm_tn(input.x_sparse, spmm(input.a_hat, d_pre));
      break;
  }
  if (l2 != 0.0) {
    auto g = model.w0.grad.values();
    const auto w = model.w0.value.values();
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += l2 * w[i];
  }
}

double gcn_step(GcnModel& model, const GcnInput& input, const GcnOutput& out,
                std::span<const Label> targets, std::span<const std::size_t> s,
                const AdamConfig& adam, double l2) {
  LossAndGrad ce = masked_cross_entropy(out.z, targets, s);
  const double loss = ce.loss + l2_penalty(model.w0.value, l2).loss;
  gcn_backward(model, input, ce.grad, l2);
  adam_step(model.w0, adam);
  adam_step(model.w1, adam);
  model.cache_valid = false;
  return loss;
}

double gcn_train_epoch(GcnModel& model, const GcnInput& input, std::span<const Label> targets,
                       std::span<const std::size_t> s, const AdamConfig& adam, double l2) {
  const GcnOutput out = gcn_forward(model, input);
  return gcn_step(model, input, out, targets, s, adam, l2);
}

}  // namespace gcnsi
