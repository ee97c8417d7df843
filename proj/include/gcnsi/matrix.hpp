#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcnsi {

using Label = std::int32_t;
using LabelVector = std::vector<Label>;

// Sorted, duplicate-free node indices.
using IndexSet = std::vector<std::size_t>;

// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  void fill(double v);
  bool all_finite() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// a * b
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
// transpose(a) * b
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
// a * transpose(b)
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);

// Column-wise concatenation [a | b]; row counts must agree.
DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b);

// Row-wise argmax; ties resolve to the lowest column index.
LabelVector argmax_rows(const DenseMatrix& m);

DenseMatrix one_hot(std::span<const Label> labels, std::size_t k);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace gcnsi
