#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isrht/error.hpp"

namespace isrht {

/// Row-major dense matrix of doubles. Rows are contiguous so a per-sample
/// transform is one linear pass.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
      : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) {
      throw DimensionError("dense matrix: value count does not match shape");
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return values_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) {
    return {values_.data() + i * cols_, cols_};
  }

  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& values() noexcept { return values_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// New matrix holding the given rows, in the given order.
DenseMatrix select_rows(const DenseMatrix& x, const std::vector<std::size_t>& rows);

/// Copy of x widened to new_cols columns; the appended columns are zero.
DenseMatrix pad_cols(const DenseMatrix& x, std::size_t new_cols);

}  // namespace isrht
