#pragma once

#include <functional>
#include <span>
#include <vector>

#include "saitprec/csr.hpp"

namespace saitprec {

/// Parameters of the threshold-dropping construction: entries below
/// `threshold` are removed after every recursion step. threshold must lie in
/// [0, 1) so the unit-diagonal iterate stays full rank; `steps` >= 1.
struct SaitThrParams {
  double threshold = 0.0;
  int steps = 1;
};

/// Parameters of the pattern-dropping construction: `pattern_steps` undropped
/// steps fix the sparsity pattern, then `refine_steps` further steps are
/// masked to it. pattern_steps >= 0 (0 yields the inverse-diagonal, i.e. the
/// Jacobi preconditioner), refine_steps >= 1. Small pattern_steps values are
/// the useful range; the pattern grows quickly with each step.
struct SaitPatParams {
  int pattern_steps = 1;
  int refine_steps = 1;
};

/// Jacobi splitting of a triangular matrix T: the inverse diagonal 1/T[i,i]
/// and the strictly triangular iteration matrix I - D^{-1} T (no stored
/// diagonal).
struct JacobiSplit {
  std::vector<double> inv_diag;
  CsrMatrix iteration_matrix;
  TriangularKind kind;
};

/// Throws std::invalid_argument if T is not triangular of the stated kind,
/// std::runtime_error naming the row if a diagonal entry is zero or missing.
JacobiSplit jacobi_split(const CsrMatrix& t, TriangularKind kind);

/// Rule applied to the iterate after each recursion step.
using DropRule = std::function<CsrMatrix(const CsrMatrix&)>;

/// The recursion M <- drop(tT M + I), `steps` times from M = I. Returns the
/// unit-diagonal polynomial in tT, i.e. the approximate inverse BEFORE the
/// final column scaling by the inverse diagonal. With no dropping, the result
/// after k steps is sum_{i=0}^{k} tT^i.
///
/// Stops early once a step changes neither the pattern nor any value by more
/// than 1e-15 relative; the series has stabilized (tT is nilpotent, so this
/// always happens by step n-1).
CsrMatrix sait_polynomial(const JacobiSplit& split, int steps, const DropRule& drop);

/// Threshold-based sparse approximate inverse of a triangular matrix:
/// the polynomial recursion with below-threshold entries dropped each step
/// (diagonal protected), then scaled by the inverse diagonal.
CsrMatrix sait_thr(const CsrMatrix& t, TriangularKind kind, const SaitThrParams& params);

/// Pattern captured by `pattern_steps` undropped recursion steps: the
/// structural pattern of sum_{i=0}^{p} tT^i, which matches the pattern of T^p.
SparsityPattern sait_pat_capture_pattern(const CsrMatrix& t, TriangularKind kind,
                                         int pattern_steps);

/// Pattern-based sparse approximate inverse: `pattern_steps` undropped steps
/// fix the pattern, `refine_steps` further steps are masked to it, then the
/// result is scaled by the inverse diagonal.
CsrMatrix sait_pat(const CsrMatrix& t, TriangularKind kind, const SaitPatParams& params);

/// k sweeps of the Jacobi iteration x <- tT x + D^{-1} b from x = 0.
/// Algebraically x^k = (sum_{i=0}^{k-1} tT^i) D^{-1} b, so k sweeps equal a
/// multiply with the undropped (k-1)-step approximate inverse.
std::vector<double> jacobi_sweeps_apply(const CsrMatrix& t, TriangularKind kind,
                                        std::span<const double> b, int sweeps);

}  // namespace saitprec
