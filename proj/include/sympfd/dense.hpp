#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sympfd {

/// Small row-major real matrix for oracle-scale checks (N <= a few hundred).
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  std::vector<double> apply(std::span<const double> x) const;
  DenseMatrix transposed() const;

  /// Largest absolute entry of (this - rhs).
  double max_abs_diff(const DenseMatrix& rhs) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

}  // namespace sympfd
