#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "saitprec/csr.hpp"
#include "saitprec/dense.hpp"
#include "saitprec/ilu.hpp"
#include "saitprec/sait.hpp"

namespace saitprec {

/// Application z = P(r). Pure function of the input vector; implementations
/// are safe to call concurrently on shared immutable matrices.
class Preconditioner {
 public:
  virtual ~Preconditioner() = default;

  virtual void apply(std::span<const double> r, std::span<double> z) const = 0;

  /// Block application, column by column unless a variant can do better.
  virtual DenseMatrix apply_block(const DenseMatrix& r) const;

  virtual std::string name() const = 0;

  /// Stored entries the application touches (0 where not meaningful).
  virtual index_t nnz() const { return 0; }
};

/// z = r.
class IdentityPreconditioner final : public Preconditioner {
 public:
  void apply(std::span<const double> r, std::span<double> z) const override;
  std::string name() const override { return "none"; }
};

/// Two exact triangular solves: z = U^{-1} (L^{-1} r). The sequential
/// baseline the approximate inverses compete with.
class ExactIluPreconditioner final : public Preconditioner {
 public:
  explicit ExactIluPreconditioner(IluFactors factors);
  void apply(std::span<const double> r, std::span<double> z) const override;
  std::string name() const override { return "exact"; }
  index_t nnz() const override { return factors_.lower.nnz() + factors_.upper.nnz(); }

 private:
  IluFactors factors_;
};

/// Two sparse matrix-vector products with a pair of approximate inverses:
/// z = M_U (M_L r). Block application uses sparse-times-block products.
class SaitPairPreconditioner final : public Preconditioner {
 public:
  SaitPairPreconditioner(CsrMatrix lower_inverse, CsrMatrix upper_inverse);
  void apply(std::span<const double> r, std::span<double> z) const override;
  DenseMatrix apply_block(const DenseMatrix& r) const override;
  std::string name() const override { return "sait"; }
  index_t nnz() const override { return lower_inv_.nnz() + upper_inv_.nnz(); }

  const CsrMatrix& lower_inverse() const { return lower_inv_; }
  const CsrMatrix& upper_inverse() const { return upper_inv_; }

 private:
  CsrMatrix lower_inv_;
  CsrMatrix upper_inv_;
};

/// k Jacobi sweeps on the L-system followed by k sweeps on the U-system.
class JacobiSweepsPreconditioner final : public Preconditioner {
 public:
  JacobiSweepsPreconditioner(IluFactors factors, int sweeps);
  void apply(std::span<const double> r, std::span<double> z) const override;
  std::string name() const override { return "jacobi"; }
  index_t nnz() const override { return factors_.lower.nnz() + factors_.upper.nnz(); }
  int sweeps() const { return sweeps_; }

 private:
  IluFactors factors_;
  int sweeps_;
};

/// Decorator that accumulates wall-clock time spent inside apply calls.
class TimedPreconditioner final : public Preconditioner {
 public:
  explicit TimedPreconditioner(const Preconditioner& inner) : inner_(inner) {}
  void apply(std::span<const double> r, std::span<double> z) const override;
  DenseMatrix apply_block(const DenseMatrix& r) const override;
  std::string name() const override { return inner_.name(); }
  index_t nnz() const override { return inner_.nnz(); }
  double seconds() const { return seconds_; }

 private:
  const Preconditioner& inner_;
  mutable double seconds_ = 0.0;
};

/// Free-function form of the variant dispatch; convenience for callers that
/// hold vectors.
std::vector<double> apply_precond(const Preconditioner& p, std::span<const double> r);

}  // namespace saitprec
