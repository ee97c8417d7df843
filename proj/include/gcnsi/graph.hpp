#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gcnsi/matrix.hpp"

namespace gcnsi {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph. Neighbor lists are sorted; self-loops and
// duplicate edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t degree(std::size_t i) const { return adj_[i].size(); }
  std::span<const std::size_t> neighbors(std::size_t i) const { return adj_[i]; }
  bool has_edge(std::size_t i, std::size_t j) const;

  // Each undirected edge once, as (i, j) with i < j, in lexicographic order.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t num_edges_ = 0;
};

// Symmetric sparse matrix in compressed-row layout. Column indices within a
// row are strictly increasing.
struct NormalizedAdjacency {
  std::size_t n = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col;
  std::vector<double> val;

  static NormalizedAdjacency identity(std::size_t n);

  std::size_t nnz() const { return col.size(); }
  double at(std::size_t i, std::size_t j) const;
  DenseMatrix to_dense() const;
};

// D^{-1/2} (A + I) D^{-1/2}, D the degree matrix of A + I.
NormalizedAdjacency sym_normalize(const Graph& g);

// Nodes within shortest-path distance r of i, including i. Sorted.
IndexSet neighborhood_set(const Graph& g, std::size_t i, int r);

// Jaccard similarity of radius-r neighborhoods for every node pair.
DenseMatrix r_neighborhood_matrix(const Graph& g, int r);

DenseMatrix spmm(const NormalizedAdjacency& a, const DenseMatrix& x);

// General compressed-row matrix, used for sparse feature tables.
struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col;
  std::vector<double> val;

  static CsrMatrix from_dense(const DenseMatrix& m);
  std::size_t nnz() const { return col.size(); }
};

// Fraction of nonzero entries.
double density(const DenseMatrix& m);

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x);
// transpose(a) * x
DenseMatrix spmm_tn(const CsrMatrix& a, const DenseMatrix& x);

}  // namespace gcnsi
