#include "saitprec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace saitprec {

void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y) {
  if (static_cast<index_t>(x.size()) != a.ncols) {
    throw std::invalid_argument("spmv: vector length " + std::to_string(x.size()) +
                                " does not match ncols " + std::to_string(a.ncols));
  }
  if (static_cast<index_t>(y.size()) != a.nrows) {
    throw std::invalid_argument("spmv: output length mismatch");
  }
#pragma omp parallel for schedule(static)
  for (index_t i = 0; i < a.nrows; ++i) {
    double acc = 0.0;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      acc += a.values[k] * x[a.col_idx[k]];
    }
    y[i] = acc;
  }
}

std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x) {
  std::vector<double> y(a.nrows);
  spmv(a, x, y);
  return y;
}

CsrMatrix spgemm(const CsrMatrix& a, const CsrMatrix& b) {
  if (a.ncols != b.nrows) {
    throw std::invalid_argument("spgemm: inner dimensions " + std::to_string(a.ncols) +
                                " and " + std::to_string(b.nrows) + " do not match");
  }

  CsrMatrix c;
  c.nrows = a.nrows;
  c.ncols = b.ncols;
  c.row_ptr.assign(a.nrows + 1, 0);

  // Pass 1: count the structural nnz of each output row.
#pragma omp parallel
  {
    std::vector<index_t> mark(b.ncols, -1);
#pragma omp for schedule(dynamic, 256)
    for (index_t i = 0; i < a.nrows; ++i) {
      index_t count = 0;
      for (index_t ka = a.row_ptr[i]; ka < a.row_ptr[i + 1]; ++ka) {
        const index_t k = a.col_idx[ka];
        for (index_t kb = b.row_ptr[k]; kb < b.row_ptr[k + 1]; ++kb) {
          const index_t j = b.col_idx[kb];
          if (mark[j] != i) {
            mark[j] = i;
            ++count;
          }
        }
      }
      c.row_ptr[i + 1] = count;
    }
  }
  for (index_t i = 0; i < a.nrows; ++i) c.row_ptr[i + 1] += c.row_ptr[i];
  c.col_idx.resize(c.row_ptr[a.nrows]);
  c.values.resize(c.row_ptr[a.nrows]);

  // Pass 2: accumulate values into a dense workspace, emit columns sorted.
#pragma omp parallel
  {
    std::vector<index_t> mark(b.ncols, -1);
    std::vector<double> acc(b.ncols, 0.0);
    std::vector<index_t> cols;
#pragma omp for schedule(dynamic, 256)
    for (index_t i = 0; i < a.nrows; ++i) {
      cols.clear();
      for (index_t ka = a.row_ptr[i]; ka < a.row_ptr[i + 1]; ++ka) {
        const index_t k = a.col_idx[ka];
        const double av = a.values[ka];
        for (index_t kb = b.row_ptr[k]; kb < b.row_ptr[k + 1]; ++kb) {
          const index_t j = b.col_idx[kb];
          if (mark[j] != i) {
            mark[j] = i;
            acc[j] = av * b.values[kb];
            cols.push_back(j);
          } else {
            acc[j] += av * b.values[kb];
          }
        }
      }
      std::sort(cols.begin(), cols.end());
      index_t pos = c.row_ptr[i];
      for (const index_t j : cols) {
        c.col_idx[pos] = j;
        c.values[pos] = acc[j];
        ++pos;
      }
    }
  }
  return c;
}

CsrMatrix add_identity(const CsrMatrix& m) {
  if (m.nrows != m.ncols) {
    throw std::invalid_argument("add_identity: matrix is not square");
  }
  CsrMatrix r;
  r.nrows = m.nrows;
  r.ncols = m.ncols;
  r.row_ptr.assign(m.nrows + 1, 0);
  r.col_idx.reserve(m.nnz() + m.nrows);
  r.values.reserve(m.nnz() + m.nrows);
  for (index_t i = 0; i < m.nrows; ++i) {
    bool diag_seen = false;
    for (index_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) {
      const index_t j = m.col_idx[k];
      if (!diag_seen && j > i) {
        r.col_idx.push_back(i);
        r.values.push_back(1.0);
        diag_seen = true;
      }
      r.col_idx.push_back(j);
      r.values.push_back(j == i ? m.values[k] + 1.0 : m.values[k]);
      if (j == i) diag_seen = true;
    }
    if (!diag_seen) {
      r.col_idx.push_back(i);
      r.values.push_back(1.0);
    }
    r.row_ptr[i + 1] = static_cast<index_t>(r.col_idx.size());
  }
  return r;
}

CsrMatrix drop_by_threshold(const CsrMatrix& m, double tau) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw std::invalid_argument("drop_by_threshold: tau must be in [0, 1), got " +
                                std::to_string(tau));
  }
  if (tau == 0.0) return m;

  CsrMatrix r;
  r.nrows = m.nrows;
  r.ncols = m.ncols;
  r.row_ptr.assign(m.nrows + 1, 0);
  r.col_idx.reserve(m.nnz());
  r.values.reserve(m.nnz());
  for (index_t i = 0; i < m.nrows; ++i) {
    for (index_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) {
      const index_t j = m.col_idx[k];
      if (j == i || std::abs(m.values[k]) >= tau) {
        r.col_idx.push_back(j);
        r.values.push_back(m.values[k]);
      }
    }
    r.row_ptr[i + 1] = static_cast<index_t>(r.col_idx.size());
  }
  return r;
}

CsrMatrix drop_by_pattern(const CsrMatrix& m, const SparsityPattern& s) {
  if (m.nrows != s.nrows || m.ncols != s.ncols) {
    throw std::invalid_argument("drop_by_pattern: shape mismatch");
  }
  CsrMatrix r;
  r.nrows = m.nrows;
  r.ncols = m.ncols;
  r.row_ptr.assign(m.nrows + 1, 0);
  r.col_idx.reserve(std::min(m.nnz(), s.nnz()));
  r.values.reserve(std::min(m.nnz(), s.nnz()));
  for (index_t i = 0; i < m.nrows; ++i) {
    index_t km = m.row_ptr[i];
    index_t ks = s.row_ptr[i];
    const index_t em = m.row_ptr[i + 1];
    const index_t es = s.row_ptr[i + 1];
    while (km < em && ks < es) {
      const index_t jm = m.col_idx[km];
      const index_t js = s.col_idx[ks];
      if (jm == js) {
        r.col_idx.push_back(jm);
        r.values.push_back(m.values[km]);
        ++km;
        ++ks;
      } else if (jm < js) {
        ++km;
      } else {
        ++ks;
      }
    }
    r.row_ptr[i + 1] = static_cast<index_t>(r.col_idx.size());
  }
  return r;
}

std::vector<double> trisolve(const CsrMatrix& t, TriangularKind kind,
                             std::span<const double> b) {
  if (t.nrows != t.ncols) {
    throw std::invalid_argument("trisolve: matrix is not square");
  }
  if (static_cast<index_t>(b.size()) != t.nrows) {
    throw std::invalid_argument("trisolve: right-hand side length mismatch");
  }

  const index_t n = t.nrows;
  std::vector<double> x(n);

  auto solve_row = [&](index_t i) {
    double acc = b[i];
    double diag = 0.0;
    bool have_diag = false;
    for (index_t k = t.row_ptr[i]; k < t.row_ptr[i + 1]; ++k) {
      const index_t j = t.col_idx[k];
      if (j == i) {
        diag = t.values[k];
        have_diag = true;
      } else {
        acc -= t.values[k] * x[j];
      }
    }
    if (!have_diag || diag == 0.0) {
      throw std::runtime_error("trisolve: singular matrix, zero diagonal at row " +
                               std::to_string(i));
    }
    x[i] = acc / diag;
  };

  if (kind.side == TriangularKind::Side::Lower) {
    for (index_t i = 0; i < n; ++i) solve_row(i);
  } else {
    for (index_t i = n - 1; i >= 0; --i) solve_row(i);
  }
  return x;
}

CsrMatrix scale_columns(const CsrMatrix& m, std::span<const double> d) {
  if (static_cast<index_t>(d.size()) != m.ncols) {
    throw std::invalid_argument("scale_columns: scale vector length mismatch");
  }
  CsrMatrix r = m;
#pragma omp parallel for schedule(static)
  for (index_t k = 0; k < r.nnz(); ++k) {
    r.values[k] *= d[r.col_idx[k]];
  }
  return r;
}

}  // namespace saitprec
