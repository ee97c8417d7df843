#pragma once
// Randomized property checks shared by the unit tests and the acceptance run.
// Each returns the measured quantity; callers apply the tolerance.

#include <algorithm>
#include <numeric>

#include "gcnsi/decision.hpp"
#include "gcnsi/gcn.hpp"
#include "gcnsi/nn.hpp"
#include "oracles.hpp"

namespace checks {

using namespace gcnsi;

enum class FeatureKind { kIdentity, kDense, kSparse };

struct GradientError {
  double w0 = 0.0;
  double w1 = 0.0;
  double max() const { return std::max(w0, w1); }
};

// Library backward pass against central differences of the dense oracle loss.
inline GradientError gcn_gradient_error(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                        std::size_t h, std::size_t k, FeatureKind kind,
                                        double l2 = 5e-4) {
  const Graph g = oracle::random_graph(n, 0.4, rng);
  Features x = Features::identity(n);
  if (kind == FeatureKind::kDense) x = Features(oracle::random_matrix(n, m, rng));
  if (kind == FeatureKind::kSparse) {
    // one nonzero per row over 4m columns stays under the sparse cutoff
    DenseMatrix d(n, 4 * m);
    for (std::size_t i = 0; i < n; ++i) d(i, rng() % d.cols()) = 0.5 + static_cast<double>(rng() % 4);
    x = Features(std::move(d));
  }
  const DenseMatrix a_dense = oracle::normalized_adjacency(g);
  const DenseMatrix x_dense = x.to_dense();

  GcnModel model = GcnModel::create(x.cols(), h, k, rng());
  const GcnInput input = make_gcn_input(sym_normalize(g), x);
  std::vector<int> targets(n);
  for (auto& t : targets) t = static_cast<int>(rng() % k);
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::shuffle(s.begin(), s.end(), rng);
  s.resize(1 + rng() % n);
  std::sort(s.begin(), s.end());

  const GcnOutput out = gcn_forward(model, input);
  const LossAndGrad ce = masked_cross_entropy(out.z, targets, s);
  gcn_backward(model, input, ce.grad, l2);

  const DenseMatrix w0 = model.w0.value, w1 = model.w1.value;
  auto f0 = [&](const DenseMatrix& w) { return oracle::gcn_loss(a_dense, x_dense, w, w1, targets, s, l2); };
  auto f1 = [&](const DenseMatrix& w) { return oracle::gcn_loss(a_dense, x_dense, w0, w, targets, s, l2); };
  return {finite_difference_check(f0, w0, model.w0.grad), finite_difference_check(f1, w1, model.w1.grad)};
}

struct SoftmaxError {
  double row_sum = 0.0;
  double shift = 0.0;
};

inline SoftmaxError softmax_error(std::mt19937_64& rng) {
  SoftmaxError e;
  DenseMatrix x = oracle::random_matrix(8, 4, rng, -30, 30);
  const DenseMatrix p = softmax_rows(x);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    e.row_sum = std::max(e.row_sum, std::abs(std::accumulate(p.row(i).begin(), p.row(i).end(), 0.0) - 1.0));
    const double c = oracle::random_matrix(1, 1, rng, -50, 50)(0, 0);
    for (double& v : x.row(i)) v += c;
  }
  e.shift = max_abs_diff(softmax_rows(x), p);
  return e;
}

// max |Z(P G, P X)[pi(i)] - Z(G, X)[i]| for a random relabeling pi.
inline double permutation_error(std::mt19937_64& rng, std::size_t n = 8) {
  const Graph g = oracle::random_graph(n, 0.4, rng);
  const DenseMatrix x = oracle::random_matrix(n, 3, rng);
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);

  std::vector<Edge> edges;
  for (const auto& [i, j] : g.edge_list()) edges.emplace_back(pi[i], pi[j]);
  const Graph pg(n, edges);
  DenseMatrix px(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(x.row(i).begin(), x.row(i).end(), px.row(pi[i]).begin());

  GcnModel model = GcnModel::create(3, 4, 3, rng());
  const DenseMatrix z = gcn_forward(model, sym_normalize(g), Features(x)).z;
  const DenseMatrix pz = gcn_forward(model, sym_normalize(pg), Features(px)).z;
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < 3; ++c) err = std::max(err, std::abs(pz(pi[i], c) - z(i, c)));
  return err;
}

struct DecisionTrial {
  bool matches_oracle = true;  // on every recomputed phase-2 branch
  bool fixed_in_s = true;      // every branch
  bool monotone = true;        // S1 never grows as p_th rises
  bool recomputed = false;     // whether the F >= F_th branch ran
};

// One random (z, y_s) instance driven through every branch of decide.
inline DecisionTrial decision_trial(std::mt19937_64& rng, std::size_t max_n = 100) {
  DecisionTrial t;
  const std::size_t n = 2 + rng() % (max_n - 1);
  const int k = 2 + static_cast<int>(rng() % 4);
  GcnOutput out;
  out.z = softmax_rows(oracle::random_matrix(n, k, rng, -3, 3));
  out.y_hat = argmax_rows(out.z);
  SideInfo si;
  si.y_s.resize(n);
  for (auto& v : si.y_s) v = static_cast<Label>(rng() % k);

  std::vector<std::size_t> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(1 + rng() % std::min<std::size_t>(n, 10));
  LabelVector truth(n);
  for (std::size_t i = 0; i < n; ++i) {
    // mostly agree with the prediction so both F branches occur
    truth[i] = rng() % 3 ? out.y_hat[i] : static_cast<Label>(rng() % k);
  }
  const TrainLabels fixed = TrainLabels::from(truth, nodes);

  DecisionConfig cfg;
  cfg.p_th = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
  cfg.f_th = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
  cfg.e_u = 3;
  const DenseMatrix z_before = out.z;
  const LabelVector ys_before = si.y_s;

  DecisionState state;
  if (rng() % 2) state.saved_s = fixed.nodes;
  for (int epoch = 0; epoch < 6; ++epoch) {
    const DecisionOutput d = decide(out, si, fixed, epoch, cfg, state);
    t.fixed_in_s &= std::includes(d.s.begin(), d.s.end(), fixed.nodes.begin(), fixed.nodes.end());
    for (std::size_t p = 0; p < fixed.size(); ++p) t.fixed_in_s &= d.y_s_hat[fixed.nodes[p]] == fixed.labels[p];
    if (epoch < cfg.e_u) {
      t.matches_oracle &= d.s == fixed.nodes;
    } else if (d.train_accuracy >= cfg.f_th) {
      t.recomputed = true;
      const std::vector<int> ysh(d.y_s_hat.begin(), d.y_s_hat.end());
      t.matches_oracle &= d.s == oracle::brute_force_s_oracle(out.z, ysh, fixed.nodes, cfg.p_th);
      t.matches_oracle &= state.saved_s && *state.saved_s == d.s;
    }
  }
  t.matches_oracle &= out.z == z_before && si.y_s == ys_before;

  // S at a higher p_th is a subset of S at a lower one
  DecisionConfig lo = cfg, hi = cfg;
  lo.e_u = hi.e_u = 0;
  lo.f_th = hi.f_th = 1e-9;
  lo.p_th = cfg.p_th * 0.5;
  DecisionState s_lo, s_hi;
  const auto a = decide(out, si, fixed, 0, lo, s_lo).s;
  const auto b = decide(out, si, fixed, 0, hi, s_hi).s;
  t.monotone &= std::includes(a.begin(), a.end(), b.begin(), b.end());
  return t;
}

}  // namespace checks
