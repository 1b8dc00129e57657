#pragma once

#include "saitprec/csr.hpp"

namespace saitprec {

/// Factors of a level-of-fill incomplete LU factorization.
/// `lower` is unit lower triangular with the unit diagonal stored;
/// `upper` is upper triangular with a nonzero diagonal.
struct IluFactors {
  CsrMatrix lower;
  CsrMatrix upper;
  int level = 0;
};

/// ILU(level) by IKJ elimination, no pivoting.
///
/// The symbolic phase computes fill levels with the standard rule
///   lev(i,j) = min over k < min(i,j) of lev(i,k) + lev(k,j) + 1
/// (entries of A start at level 0) and keeps positions with lev <= level.
/// The numeric phase eliminates restricted to that pattern, so
/// (L U)[i,j] = A[i,j] at every retained position of A.
///
/// Throws std::invalid_argument for a non-square A or a structurally zero
/// diagonal, and std::runtime_error on pivot breakdown
/// (|u_kk| < 1e-14 * maxAbs(A)), reporting the row.
IluFactors ilu_k(const CsrMatrix& a, int level);

/// max over stored positions (i,j) of A of |(L U)[i,j] - A[i,j]|.
double ilu_residual_on_pattern(const CsrMatrix& a, const IluFactors& f);

}  // namespace saitprec
