#include "saitprec/sait.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "saitprec/kernels.hpp"

namespace saitprec {

namespace {

constexpr double kStabilizedRelTol = 1e-15;

// Same pattern and every value within 1e-15 relative: the recursion has
// reached its stable state and further steps cannot change it.
bool stabilized(const CsrMatrix& prev, const CsrMatrix& cur) {
  if (prev.row_ptr != cur.row_ptr || prev.col_idx != cur.col_idx) return false;
  for (index_t k = 0; k < cur.nnz(); ++k) {
    const double a = prev.values[k];
    const double b = cur.values[k];
    if (std::abs(b - a) > kStabilizedRelTol * std::max(std::abs(a), std::abs(b))) {
      return false;
    }
  }
  return true;
}

}  // namespace

JacobiSplit jacobi_split(const CsrMatrix& t, TriangularKind kind) {
  if (t.nrows != t.ncols) {
    throw std::invalid_argument("jacobi_split: matrix is not square");
  }
  check_triangular(t, {kind.side, false});

  JacobiSplit split;
  split.kind = kind;
  split.inv_diag.assign(t.nrows, 0.0);

  CsrMatrix& tt = split.iteration_matrix;
  tt.nrows = t.nrows;
  tt.ncols = t.ncols;
  tt.row_ptr.assign(t.nrows + 1, 0);
  tt.col_idx.reserve(t.nnz());
  tt.values.reserve(t.nnz());

  for (index_t i = 0; i < t.nrows; ++i) {
    double diag = 0.0;
    bool have_diag = false;
    for (index_t k = t.row_ptr[i]; k < t.row_ptr[i + 1]; ++k) {
      if (t.col_idx[k] == i) {
        diag = t.values[k];
        have_diag = true;
        break;
      }
    }
    if (!have_diag || diag == 0.0) {
      throw std::runtime_error("jacobi_split: singular matrix, zero diagonal at row " +
                               std::to_string(i));
    }
    split.inv_diag[i] = 1.0 / diag;
    for (index_t k = t.row_ptr[i]; k < t.row_ptr[i + 1]; ++k) {
      const index_t j = t.col_idx[k];
      if (j == i) continue;
      tt.col_idx.push_back(j);
      tt.values.push_back(-t.values[k] * split.inv_diag[i]);
    }
    tt.row_ptr[i + 1] = static_cast<index_t>(tt.col_idx.size());
  }
  return split;
}

CsrMatrix sait_polynomial(const JacobiSplit& split, int steps, const DropRule& drop) {
  if (steps < 1) {
    throw std::invalid_argument("sait_polynomial: steps must be >= 1");
  }
  CsrMatrix m = identity(split.iteration_matrix.nrows);
  for (int k = 0; k < steps; ++k) {
    CsrMatrix next = add_identity(spgemm(split.iteration_matrix, m));
    if (drop) next = drop(next);
    const bool done = stabilized(m, next);
    m = std::move(next);
    if (done) break;
  }
  return m;
}

CsrMatrix sait_thr(const CsrMatrix& t, TriangularKind kind, const SaitThrParams& params) {
  if (!(params.threshold >= 0.0 && params.threshold < 1.0)) {
    throw std::invalid_argument("sait_thr: threshold must be in [0, 1), got " +
                                std::to_string(params.threshold));
  }
  const JacobiSplit split = jacobi_split(t, kind);
  const double tau = params.threshold;
  const CsrMatrix m = sait_polynomial(
      split, params.steps,
      [tau](const CsrMatrix& x) { return drop_by_threshold(x, tau); });
  return scale_columns(m, split.inv_diag);
}

SparsityPattern sait_pat_capture_pattern(const CsrMatrix& t, TriangularKind kind,
                                         int pattern_steps) {
  if (pattern_steps < 0) {
    throw std::invalid_argument("sait_pat_capture_pattern: pattern_steps must be >= 0");
  }
  const JacobiSplit split = jacobi_split(t, kind);
  if (pattern_steps == 0) return pattern_of(identity(t.nrows));
  return pattern_of(sait_polynomial(split, pattern_steps, {}));
}

CsrMatrix sait_pat(const CsrMatrix& t, TriangularKind kind, const SaitPatParams& params) {
  if (params.pattern_steps < 0) {
    throw std::invalid_argument("sait_pat: pattern_steps must be >= 0");
  }
  if (params.refine_steps < 1) {
    throw std::invalid_argument("sait_pat: refine_steps must be >= 1");
  }
  const JacobiSplit split = jacobi_split(t, kind);

  CsrMatrix m = identity(t.nrows);
  for (int k = 0; k < params.pattern_steps; ++k) {
    m = add_identity(spgemm(split.iteration_matrix, m));
  }
  const SparsityPattern pattern = pattern_of(m);

  for (int k = 0; k < params.refine_steps; ++k) {
    CsrMatrix next =
        drop_by_pattern(add_identity(spgemm(split.iteration_matrix, m)), pattern);
    const bool done = stabilized(m, next);
    m = std::move(next);
    if (done) break;
  }
  return scale_columns(m, split.inv_diag);
}

std::vector<double> jacobi_sweeps_apply(const CsrMatrix& t, TriangularKind kind,
                                        std::span<const double> b, int sweeps) {
  if (sweeps < 1) {
    throw std::invalid_argument("jacobi_sweeps_apply: sweeps must be >= 1");
  }
  if (static_cast<index_t>(b.size()) != t.nrows) {
    throw std::invalid_argument("jacobi_sweeps_apply: right-hand side length mismatch");
  }
  const JacobiSplit split = jacobi_split(t, kind);

  std::vector<double> scaled(t.nrows);
  for (index_t i = 0; i < t.nrows; ++i) scaled[i] = split.inv_diag[i] * b[i];

  // x^1 = D^{-1} b, then x^k = tT x^{k-1} + D^{-1} b.
  std::vector<double> x = scaled;
  std::vector<double> tmp(t.nrows);
  for (int k = 1; k < sweeps; ++k) {
    spmv(split.iteration_matrix, x, tmp);
    for (index_t i = 0; i < t.nrows; ++i) x[i] = tmp[i] + scaled[i];
  }
  return x;
}

}  // namespace saitprec
