#pragma once

#include <span>
#include <vector>

#include "saitprec/csr.hpp"

namespace saitprec {

/// Column-major dense block, used for solver search blocks and eigenvectors.
/// Deliberately minimal; the sparse structures do the heavy lifting.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(index_t nrows, index_t ncols)
      : nrows_(nrows), ncols_(ncols), data_(nrows * ncols, 0.0) {}

  index_t nrows() const { return nrows_; }
  index_t ncols() const { return ncols_; }

  double& operator()(index_t i, index_t j) { return data_[j * nrows_ + i]; }
  double operator()(index_t i, index_t j) const { return data_[j * nrows_ + i]; }

  std::span<double> col(index_t j) {
    return {data_.data() + j * nrows_, static_cast<std::size_t>(nrows_)};
  }
  std::span<const double> col(index_t j) const {
    return {data_.data() + j * nrows_, static_cast<std::size_t>(nrows_)};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

 private:
  index_t nrows_ = 0;
  index_t ncols_ = 0;
  std::vector<double> data_;
};

/// Y = A X, one sparse-times-vector per column.
DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x);

/// C = A^T B (small result, tall inputs).
DenseMatrix transpose_times(const DenseMatrix& a, const DenseMatrix& b);

/// C = A B for a tall A and small B.
DenseMatrix times(const DenseMatrix& a, const DenseMatrix& b);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace saitprec
