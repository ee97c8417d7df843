#pragma once
// Independent reference implementations used only by tests. They work from the
// definitions with plain loops and share no code with the library kernels.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "gcnsi/gcn.hpp"
#include "gcnsi/graph.hpp"
#include "gcnsi/matrix.hpp"

namespace oracle {

using gcnsi::DenseMatrix;
using gcnsi::Edge;
using gcnsi::Graph;

inline DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t p = 0; p < a.cols(); ++p) s += a(i, p) * b(p, j);
      out(i, j) = s;
    }
  return out;
}

inline DenseMatrix dense_adjacency(const Graph& g) {
  DenseMatrix a(g.num_nodes(), g.num_nodes());
  for (const auto& [i, j] : g.edge_list()) a(i, j) = a(j, i) = 1.0;
  return a;
}

// D^-1/2 (A + I) D^-1/2 straight from the definition.
inline DenseMatrix normalized_adjacency(const Graph& g) {
  const std::size_t n = g.num_nodes();
  DenseMatrix a = dense_adjacency(g);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i] += a(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) /= std::sqrt(d[i] * d[j]);
  return a;
}

// All-pairs hop distances, unreachable = max.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.num_nodes();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [i, j] : g.edge_list()) d[i][j] = d[j][i] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

inline std::set<std::size_t> ball(const std::vector<std::vector<std::size_t>>& dist, std::size_t i,
                                  int r) {
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < dist.size(); ++j)
    if (dist[i][j] <= static_cast<std::size_t>(r)) out.insert(j);
  return out;
}

// Jaccard of radius-r balls by explicit set intersection and union.
inline DenseMatrix jaccard_matrix(const Graph& g, int r) {
  const auto dist = floyd_warshall(g);
  const std::size_t n = g.num_nodes();
  std::vector<std::set<std::size_t>> balls;
  for (std::size_t i = 0; i < n; ++i) balls.push_back(ball(dist, i, r));
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> inter, uni;
      std::set_intersection(balls[i].begin(), balls[i].end(), balls[j].begin(), balls[j].end(),
                            std::back_inserter(inter));
      std::set_union(balls[i].begin(), balls[i].end(), balls[j].begin(), balls[j].end(),
                     std::back_inserter(uni));
      out(i, j) = static_cast<double>(inter.size()) / static_cast<double>(uni.size());
    }
  return out;
}

// softmax(A relu(A X W0) W1) with dense loops and a per-row exp/sum.
inline DenseMatrix gcn_probs(const DenseMatrix& a_hat, const DenseMatrix& x, const DenseMatrix& w0,
                             const DenseMatrix& w1) {
  DenseMatrix h = dense_product(dense_product(a_hat, x), w0);
  for (double& v : h.values()) v = v > 0.0 ? v : 0.0;
  DenseMatrix logits = dense_product(a_hat, dense_product(h, w1));
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : logits.row(i)) mx = std::max(mx, v);
    double s = 0.0;
    for (double& v : logits.row(i)) s += (v = std::exp(v - mx));
    for (double& v : logits.row(i)) v /= s;
  }
  return logits;
}

// Mean CE over rows s plus 0.5 * l2 * ||W0||^2, using gcn_probs.
inline double gcn_loss(const DenseMatrix& a_hat, const DenseMatrix& x, const DenseMatrix& w0,
                       const DenseMatrix& w1, const std::vector<int>& targets,
                       const std::vector<std::size_t>& s, double l2) {
  const DenseMatrix p = gcn_probs(a_hat, x, w0, w1);
  double loss = 0.0;
  for (std::size_t i : s) loss -= std::log(p(i, targets[i]));
  loss /= static_cast<double>(s.size());
  double sq = 0.0;
  for (double v : w0.values()) sq += v * v;
  return loss + 0.5 * l2 * sq;
}

// S = ({i : max_j z(i,j) >= p_th} ∩ {i : argmax z(i) == y_s_hat(i)}) ∪ fixed,
// rebuilt from the definitions by a literal scan.
inline std::vector<std::size_t> brute_force_s_oracle(const DenseMatrix& z,
                                                     const std::vector<int>& y_s_hat,
                                                     const std::vector<std::size_t>& fixed,
                                                     double p_th) {
  std::set<std::size_t> s1, s2;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    int best = 0;
    double best_p = z(i, 0);
    for (std::size_t j = 0; j < z.cols(); ++j) {
      if (z(i, j) >= p_th) s1.insert(i);
      if (z(i, j) > best_p) {
        best_p = z(i, j);
        best = static_cast<int>(j);
      }
    }
    if (best == y_s_hat[i]) s2.insert(i);
  }
  std::set<std::size_t> s;
  for (std::size_t i : s1)
    if (s2.count(i)) s.insert(i);
  s.insert(fixed.begin(), fixed.end());
  return {s.begin(), s.end()};
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline DenseMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng,
                                 double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  DenseMatrix m(r, c);
  for (double& v : m.values()) v = u(rng);
  return m;
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

}  // namespace oracle
