#include "saitprec/preconditioner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "saitprec/kernels.hpp"
#include "saitprec/sait.hpp"

namespace saitprec {

DenseMatrix Preconditioner::apply_block(const DenseMatrix& r) const {
  DenseMatrix z(r.nrows(), r.ncols());
  for (index_t j = 0; j < r.ncols(); ++j) {
    apply(r.col(j), z.col(j));
  }
  return z;
}

void IdentityPreconditioner::apply(std::span<const double> r, std::span<double> z) const {
  std::copy(r.begin(), r.end(), z.begin());
}

ExactIluPreconditioner::ExactIluPreconditioner(IluFactors factors)
    : factors_(std::move(factors)) {}

void ExactIluPreconditioner::apply(std::span<const double> r, std::span<double> z) const {
  const std::vector<double> y = trisolve(factors_.lower, unit_lower_triangular, r);
  const std::vector<double> x = trisolve(factors_.upper, upper_triangular, y);
  std::copy(x.begin(), x.end(), z.begin());
}

SaitPairPreconditioner::SaitPairPreconditioner(CsrMatrix lower_inverse,
                                               CsrMatrix upper_inverse)
    : lower_inv_(std::move(lower_inverse)), upper_inv_(std::move(upper_inverse)) {
  if (lower_inv_.nrows != upper_inv_.ncols) {
    throw std::invalid_argument("SaitPairPreconditioner: factor shapes do not chain");
  }
}

void SaitPairPreconditioner::apply(std::span<const double> r, std::span<double> z) const {
  const std::vector<double> y = spmv(lower_inv_, r);
  spmv(upper_inv_, y, z);
}

DenseMatrix SaitPairPreconditioner::apply_block(const DenseMatrix& r) const {
  return spmm(upper_inv_, spmm(lower_inv_, r));
}

JacobiSweepsPreconditioner::JacobiSweepsPreconditioner(IluFactors factors, int sweeps)
    : factors_(std::move(factors)), sweeps_(sweeps) {
  if (sweeps_ < 1) {
    throw std::invalid_argument("JacobiSweepsPreconditioner: sweeps must be >= 1");
  }
}

void JacobiSweepsPreconditioner::apply(std::span<const double> r, std::span<double> z) const {
  const std::vector<double> y =
      jacobi_sweeps_apply(factors_.lower, unit_lower_triangular, r, sweeps_);
  const std::vector<double> x =
      jacobi_sweeps_apply(factors_.upper, upper_triangular, y, sweeps_);
  std::copy(x.begin(), x.end(), z.begin());
}

void TimedPreconditioner::apply(std::span<const double> r, std::span<double> z) const {
  const auto start = std::chrono::steady_clock::now();
  inner_.apply(r, z);
  seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

DenseMatrix TimedPreconditioner::apply_block(const DenseMatrix& r) const {
  const auto start = std::chrono::steady_clock::now();
  DenseMatrix z = inner_.apply_block(r);
  seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return z;
}

std::vector<double> apply_precond(const Preconditioner& p, std::span<const double> r) {
  std::vector<double> z(r.size());
  p.apply(r, z);
  return z;
}

}  // namespace saitprec
