#include "gcnsi/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

namespace gcnsi {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("Graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("Graph: self-loop at node " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& nb = adj_[i];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("Graph: duplicate edge at node " + std::to_string(i));
    }
  }
  num_edges_ = edges.size();
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  if (i >= adj_.size() || j >= adj_.size()) return false;
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::size_t j : adj_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

NormalizedAdjacency NormalizedAdjacency::identity(std::size_t n) {
  NormalizedAdjacency a;
  a.n = n;
  a.row_ptr.resize(n + 1);
  a.col.resize(n);
  a.val.assign(n, 1.0);
  for (std::size_t i = 0; i <= n; ++i) a.row_ptr[i] = i;
  for (std::size_t i = 0; i < n; ++i) a.col[i] = i;
  return a;
}

double NormalizedAdjacency::at(std::size_t i, std::size_t j) const {
  const auto begin = col.begin() + static_cast<std::ptrdiff_t>(row_ptr[i]);
  const auto end = col.begin() + static_cast<std::ptrdiff_t>(row_ptr[i + 1]);
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return val[static_cast<std::size_t>(it - col.begin())];
}

DenseMatrix NormalizedAdjacency::to_dense() const {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) out(i, col[p]) = val[p];
  return out;
}

NormalizedAdjacency sym_normalize(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(g.degree(i) + 1);
  // 1 / sqrt(d_i d_j) is symmetric in (i, j) bit for bit.
  auto entry = [&](std::size_t i, std::size_t j) { return 1.0 / std::sqrt(d[i] * d[j]); };

  NormalizedAdjacency a;
  a.n = n;
  a.row_ptr.assign(n + 1, 0);
  a.col.reserve(2 * g.num_edges() + n);
  a.val.reserve(2 * g.num_edges() + n);
  for (std::size_t i = 0; i < n; ++i) {
    bool diag_done = false;
    for (std::size_t j : g.neighbors(i)) {
      if (!diag_done && j > i) {
        a.col.push_back(i);
        a.val.push_back(entry(i, i));
        diag_done = true;
      }
      a.col.push_back(j);
      a.val.push_back(entry(i, j));
    }
    if (!diag_done) {
      a.col.push_back(i);
      a.val.push_back(entry(i, i));
    }
    a.row_ptr[i + 1] = a.col.size();
  }
  return a;
}

IndexSet neighborhood_set(const Graph& g, std::size_t i, int r) {
  const std::size_t n = g.num_nodes();
  if (i >= n) {
    throw std::out_of_range("neighborhood_set: node " + std::to_string(i) +
                            " out of range for n=" + std::to_string(n));
  }
  if (r < 1) throw std::invalid_argument("neighborhood_set: radius must be >= 1");

  std::vector<int> dist(n, -1);
  std::deque<std::size_t> frontier{i};
  dist[i] = 0;
  IndexSet out{i};
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop_front();
    if (dist[u] == r) continue;
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      out.push_back(v);
      frontier.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DenseMatrix r_neighborhood_matrix(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("r_neighborhood_matrix: radius must be >= 1");
  const std::size_t n = g.num_nodes();
  std::vector<IndexSet> hood(n);
  for (std::size_t i = 0; i < n; ++i) hood[i] = neighborhood_set(g, i, r);

  // Distance is symmetric, so u in N_j  <=>  j in N_u, and
  // |N_i ∩ N_j| = #{u in N_i : j in N_u}.
  DenseMatrix out(n, n);
  std::vector<std::size_t> common(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(common.begin(), common.end(), 0);
    for (std::size_t u : hood[i])
      for (std::size_t j : hood[u]) ++common[j];
    auto row = out.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (common[j] == 0) continue;
      const std::size_t uni = hood[i].size() + hood[j].size() - common[j];
      row[j] = static_cast<double>(common[j]) / static_cast<double>(uni);
    }
  }
  return out;
}

DenseMatrix spmm(const NormalizedAdjacency& a, const DenseMatrix& x) {
  if (a.n != x.rows()) {
    throw std::invalid_argument("spmm: adjacency is " + std::to_string(a.n) + "x" +
                                std::to_string(a.n) + " but dense operand has " +
                                std::to_string(x.rows()) + " rows");
  }
  DenseMatrix out(a.n, x.cols());
  const std::size_t width = x.cols();
  for (std::size_t i = 0; i < a.n; ++i) {
    double* dst = out.row(i).data();
    for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      const double s = a.val[p];
      const double* src = x.row(a.col[p]).data();
      for (std::size_t j = 0; j < width; ++j) dst[j] += s * src[j];
    }
  }
  return out;
}

CsrMatrix CsrMatrix::from_dense(const DenseMatrix& m) {
  CsrMatrix c;
  c.rows = m.rows();
  c.cols = m.cols();
  c.row_ptr.assign(c.rows + 1, 0);
  for (std::size_t i = 0; i < c.rows; ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] != 0.0) {
        c.col.push_back(j);
        c.val.push_back(r[j]);
      }
    }
    c.row_ptr[i + 1] = c.col.size();
  }
  return c;
}

double density(const DenseMatrix& m) {
  if (m.empty()) return 0.0;
  const auto v = m.values();
  const auto nz = std::count_if(v.begin(), v.end(), [](double x) { return x != 0.0; });
  return static_cast<double>(nz) / static_cast<double>(v.size());
}

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x) {
  if (a.cols != x.rows()) throw std::invalid_argument("spmm: dimension mismatch");
  DenseMatrix out(a.rows, x.cols());
  const std::size_t width = x.cols();
  for (std::size_t i = 0; i < a.rows; ++i) {
    double* dst = out.row(i).data();
    for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      const double s = a.val[p];
      const double* src = x.row(a.col[p]).data();
      for (std::size_t j = 0; j < width; ++j) dst[j] += s * src[j];
    }
  }
  return out;
}

DenseMatrix spmm_tn(const CsrMatrix& a, const DenseMatrix& x) {
  if (a.rows != x.rows()) throw std::invalid_argument("spmm_tn: dimension mismatch");
  DenseMatrix out(a.cols, x.cols());
  const std::size_t width = x.cols();
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* src = x.row(i).data();
    for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      const double s = a.val[p];
      double* dst = out.row(a.col[p]).data();
      for (std::size_t j = 0; j < width; ++j) dst[j] += s * src[j];
    }
  }
  return out;
}

}  // namespace gcnsi
