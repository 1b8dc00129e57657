#include "saitprec/ilu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "saitprec/kernels.hpp"

namespace saitprec {

namespace {

constexpr double kPivotBreakdownFactor = 1e-14;

// Per-row sparsity of the factors plus the fill levels of the U part
// (needed when later rows eliminate against this one).
struct SymbolicRows {
  std::vector<index_t> l_ptr{0}, l_cols;
  std::vector<index_t> u_ptr{0}, u_cols;
  std::vector<int> u_levs;
};

// Row-by-row level computation with a sorted linked working row. A single
// ascending pass over k suffices: by the time k is reached, lev(i,k) is final.
SymbolicRows symbolic_phase(const CsrMatrix& a, int level) {
  const index_t n = a.nrows;
  SymbolicRows sym;
  sym.l_ptr.reserve(n + 1);
  sym.u_ptr.reserve(n + 1);

  constexpr index_t kTail = -1;
  std::vector<index_t> next(n, kTail);
  std::vector<int> lev(n, 0);
  std::vector<index_t> stamp(n, -1);

  for (index_t i = 0; i < n; ++i) {
    index_t head = kTail;
    index_t last = kTail;
    bool has_diag = false;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      const index_t j = a.col_idx[k];
      if (j == i) has_diag = true;
      if (last == kTail) {
        head = j;
      } else {
        next[last] = j;
      }
      next[j] = kTail;
      lev[j] = 0;
      stamp[j] = i;
      last = j;
    }
    if (!has_diag) {
      throw std::invalid_argument("ilu_k: structurally zero diagonal at row " +
                                  std::to_string(i));
    }

    for (index_t k = head; k != kTail && k < i; k = next[k]) {
      // Fill contributed through pivot row k; U columns ascend, so a scan
      // pointer starting at k finds each insertion point without restarting.
      index_t scan = k;
      for (index_t p = sym.u_ptr[k]; p < sym.u_ptr[k + 1]; ++p) {
        const index_t j = sym.u_cols[p];
        if (j == k) continue;
        const int new_lev = lev[k] + sym.u_levs[p] + 1;
        if (new_lev > level) continue;
        if (stamp[j] == i) {
          lev[j] = std::min(lev[j], new_lev);
        } else {
          while (next[scan] != kTail && next[scan] < j) scan = next[scan];
          next[j] = next[scan];
          next[scan] = j;
          lev[j] = new_lev;
          stamp[j] = i;
        }
      }
    }

    for (index_t j = head; j != kTail; j = next[j]) {
      if (j < i) {
        sym.l_cols.push_back(j);
      } else {
        sym.u_cols.push_back(j);
        sym.u_levs.push_back(lev[j]);
      }
    }
    sym.l_ptr.push_back(static_cast<index_t>(sym.l_cols.size()));
    sym.u_ptr.push_back(static_cast<index_t>(sym.u_cols.size()));
  }
  return sym;
}

}  // namespace

IluFactors ilu_k(const CsrMatrix& a, int level) {
  if (a.nrows != a.ncols) {
    throw std::invalid_argument("ilu_k: matrix is not square");
  }
  if (level < 0) {
    throw std::invalid_argument("ilu_k: negative fill level");
  }

  const index_t n = a.nrows;
  double max_abs = 0.0;
  for (const double v : a.values) max_abs = std::max(max_abs, std::abs(v));
  const double breakdown_tol = kPivotBreakdownFactor * max_abs;

  SymbolicRows sym = symbolic_phase(a, level);

  IluFactors f;
  f.level = level;
  f.lower.nrows = f.lower.ncols = n;
  f.upper.nrows = f.upper.ncols = n;
  f.lower.row_ptr.assign(1, 0);
  f.upper.row_ptr.assign(1, 0);
  f.lower.col_idx.reserve(sym.l_cols.size() + n);
  f.lower.values.reserve(sym.l_cols.size() + n);
  f.upper.col_idx.reserve(sym.u_cols.size());
  f.upper.values.reserve(sym.u_cols.size());

  std::vector<double> u_diag(n, 0.0);
  std::vector<double> w(n, 0.0);
  std::vector<index_t> stamp(n, -1);

  for (index_t i = 0; i < n; ++i) {
    for (index_t p = sym.l_ptr[i]; p < sym.l_ptr[i + 1]; ++p) {
      w[sym.l_cols[p]] = 0.0;
      stamp[sym.l_cols[p]] = i;
    }
    for (index_t p = sym.u_ptr[i]; p < sym.u_ptr[i + 1]; ++p) {
      w[sym.u_cols[p]] = 0.0;
      stamp[sym.u_cols[p]] = i;
    }
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      w[a.col_idx[k]] = a.values[k];
    }

    for (index_t p = sym.l_ptr[i]; p < sym.l_ptr[i + 1]; ++p) {
      const index_t k = sym.l_cols[p];
      const double factor = w[k] / u_diag[k];
      w[k] = factor;
      for (index_t q = f.upper.row_ptr[k]; q < f.upper.row_ptr[k + 1]; ++q) {
        const index_t j = f.upper.col_idx[q];
        if (j == k) continue;
        if (stamp[j] == i) w[j] -= factor * f.upper.values[q];
      }
    }

    for (index_t p = sym.l_ptr[i]; p < sym.l_ptr[i + 1]; ++p) {
      f.lower.col_idx.push_back(sym.l_cols[p]);
      f.lower.values.push_back(w[sym.l_cols[p]]);
    }
    f.lower.col_idx.push_back(i);
    f.lower.values.push_back(1.0);
    f.lower.row_ptr.push_back(static_cast<index_t>(f.lower.col_idx.size()));

    const double piv = w[i];
    if (piv == 0.0 || std::abs(piv) < breakdown_tol) {
      throw std::runtime_error("ilu_k: pivot breakdown at row " + std::to_string(i) +
                               " (|pivot| = " + std::to_string(std::abs(piv)) + ")");
    }
    u_diag[i] = piv;
    for (index_t p = sym.u_ptr[i]; p < sym.u_ptr[i + 1]; ++p) {
      f.upper.col_idx.push_back(sym.u_cols[p]);
      f.upper.values.push_back(w[sym.u_cols[p]]);
    }
    f.upper.row_ptr.push_back(static_cast<index_t>(f.upper.col_idx.size()));
  }
  return f;
}

double ilu_residual_on_pattern(const CsrMatrix& a, const IluFactors& f) {
  if (a.nrows != f.lower.nrows || a.ncols != f.upper.ncols) {
    throw std::invalid_argument("ilu_residual_on_pattern: shape mismatch");
  }
  const CsrMatrix prod = spgemm(f.lower, f.upper);
  double max_err = 0.0;
  for (index_t i = 0; i < a.nrows; ++i) {
    index_t kp = prod.row_ptr[i];
    const index_t ep = prod.row_ptr[i + 1];
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      const index_t j = a.col_idx[k];
      while (kp < ep && prod.col_idx[kp] < j) ++kp;
      const double pv = (kp < ep && prod.col_idx[kp] == j) ? prod.values[kp] : 0.0;
      max_err = std::max(max_err, std::abs(pv - a.values[k]));
    }
  }
  return max_err;
}

}  // namespace saitprec
