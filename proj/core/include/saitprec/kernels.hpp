#pragma once

#include <span>
#include <vector>

#include "saitprec/csr.hpp"

namespace saitprec {

/// y = A x. Row-wise accumulation in stored index order; rows may be computed
/// in parallel, so results are identical for any thread count.
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x);

/// C = A B (numerically exact sparse product, Gustavson row merge).
/// The output pattern is the structural product pattern; entries that cancel
/// to exactly 0.0 stay stored. Per output row, contributions accumulate in
/// increasing column order of A's row, so results are deterministic.
CsrMatrix spgemm(const CsrMatrix& a, const CsrMatrix& b);

/// M + I with the diagonal position present in every row of the result,
/// even where the sum is exactly 0.0.
CsrMatrix add_identity(const CsrMatrix& m);

/// Removes entries with |value| < tau; diagonal entries always survive.
/// tau = 0 returns m unchanged. Requires 0 <= tau < 1: a unit-diagonal
/// matrix stays full-rank under any such threshold.
CsrMatrix drop_by_threshold(const CsrMatrix& m, double tau);

/// Keeps only entries whose position is in `s`; retained values unchanged.
CsrMatrix drop_by_pattern(const CsrMatrix& m, const SparsityPattern& s);

/// Solves T x = b by forward (Lower) or backward (Upper) substitution.
/// Sequential by nature. Throws std::runtime_error naming the row on a zero
/// or missing diagonal.
std::vector<double> trisolve(const CsrMatrix& t, TriangularKind kind,
                             std::span<const double> b);

/// M * diag(d): scales column j by d[j].
CsrMatrix scale_columns(const CsrMatrix& m, std::span<const double> d);

}  // namespace saitprec
