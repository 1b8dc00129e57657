#include "saitprec/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "saitprec/kernels.hpp"

namespace saitprec {

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x) {
  if (a.ncols != x.nrows()) {
    throw std::invalid_argument("spmm: dimension mismatch");
  }
  DenseMatrix y(a.nrows, x.ncols());
  for (index_t j = 0; j < x.ncols(); ++j) {
    spmv(a, x.col(j), y.col(j));
  }
  return y;
}

DenseMatrix transpose_times(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.nrows() != b.nrows()) {
    throw std::invalid_argument("transpose_times: dimension mismatch");
  }
  DenseMatrix c(a.ncols(), b.ncols());
  for (index_t j = 0; j < b.ncols(); ++j) {
    for (index_t i = 0; i < a.ncols(); ++i) {
      c(i, j) = dot(a.col(i), b.col(j));
    }
  }
  return c;
}

DenseMatrix times(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.ncols() != b.nrows()) {
    throw std::invalid_argument("times: dimension mismatch");
  }
  DenseMatrix c(a.nrows(), b.ncols());
  for (index_t j = 0; j < b.ncols(); ++j) {
    auto cj = c.col(j);
    for (index_t k = 0; k < a.ncols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      auto ak = a.col(k);
      for (index_t i = 0; i < a.nrows(); ++i) cj[i] += ak[i] * bkj;
    }
  }
  return c;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace saitprec
