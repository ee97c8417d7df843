#pragma once

#include <cstdint>
#include <span>

#include "gcnsi/graph.hpp"
#include "gcnsi/matrix.hpp"
#include "gcnsi/nn.hpp"

namespace gcnsi {

// Node feature table. The identity case (no observed features) is kept
// implicit so that A_hat * X never materializes an n x n matrix.
class Features {
 public:
  Features() = default;
  explicit Features(DenseMatrix x) : x_(std::move(x)), rows_(x_.rows()), identity_(false) {}
  static Features identity(std::size_t n);

  bool is_identity() const { return identity_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return identity_ ? rows_ : x_.cols(); }
  const DenseMatrix& dense() const;
  DenseMatrix to_dense() const;

  friend bool operator==(const Features&, const Features&) = default;

 private:
  DenseMatrix x_;
  std::size_t rows_ = 0;
  bool identity_ = true;
};

// Normalized adjacency plus whatever form of the features makes the first
// propagation A_hat * X * W0 cheapest, prepared once and reused every epoch.
struct GcnInput {
  enum class Layout {
    kIdentity,  // A_hat X = A_hat
    kDense,     // ax = A_hat X, precomputed
    kSparse,    // A_hat (X W0) with X kept in compressed rows
  };

  NormalizedAdjacency a_hat;
  Layout layout = Layout::kIdentity;
  DenseMatrix ax;
  CsrMatrix x_sparse;

  std::size_t num_nodes() const { return a_hat.n; }
  std::size_t feature_dim() const;
};

// Features at or below this fill ratio take the sparse layout.
inline constexpr double kSparseFeatureDensity = 0.25;

GcnInput make_gcn_input(NormalizedAdjacency a_hat, const Features& x);

// softmax(A_hat relu(A_hat X W0) W1)
struct GcnModel {
  Parameter w0;  // feature_dim x hidden
  Parameter w1;  // hidden x classes

  // Forward intermediates kept for the backward pass.
  DenseMatrix pre_activation;
  DenseMatrix hidden;
  bool cache_valid = false;

  static GcnModel create(std::size_t in_dim, std::size_t hidden_size, std::size_t classes,
                         std::uint64_t seed);

  std::size_t hidden_size() const { return w0.value.cols(); }
  std::size_t num_classes() const { return w1.value.cols(); }
};

struct GcnOutput {
  DenseMatrix z;      // n x k class probabilities
  LabelVector y_hat;  // row-wise argmax of z
};

GcnOutput gcn_forward(GcnModel& model, const GcnInput& input);
GcnOutput gcn_forward(GcnModel& model, const NormalizedAdjacency& a_hat, const Features& x);

// Fills w0.grad and w1.grad from dLoss/dLogits. The L2 term l2 * w0 is added
// to w0.grad; w1 is not regularized.
void gcn_backward(GcnModel& model, const GcnInput& input, const DenseMatrix& grad_wrt_logits,
                  double l2);

// Loss on the rows in `s` for an already computed forward output, then one
// backward pass and one Adam step on both weights. Returns CE + L2.
double gcn_step(GcnModel& model, const GcnInput& input, const GcnOutput& out,
                std::span<const Label> targets, std::span<const std::size_t> s,
                const AdamConfig& adam, double l2);

// One full-batch epoch: forward then gcn_step.
double gcn_train_epoch(GcnModel& model, const GcnInput& input, std::span<const Label> targets,
                       std::span<const std::size_t> s, const AdamConfig& adam, double l2);

}  // namespace gcnsi
