#include "saitprec/csr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace saitprec {

CsrMatrix from_triplets(index_t nrows, index_t ncols,
                        std::span<const Triplet> triplets) {
  if (nrows < 0 || ncols < 0) {
    throw std::invalid_argument("from_triplets: negative dimension");
  }
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    const Triplet& t = triplets[k];
    if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols) {
      throw std::invalid_argument(
          "from_triplets: triplet " + std::to_string(k) + " (row " +
          std::to_string(t.row) + ", col " + std::to_string(t.col) + ", value " +
          std::to_string(t.value) + ") out of range for " +
          std::to_string(nrows) + "x" + std::to_string(ncols) + " matrix");
    }
  }

  // Stable sort keeps duplicates in input order, so their values are summed
  // deterministically.
  std::vector<std::size_t> order(triplets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (triplets[a].row != triplets[b].row) return triplets[a].row < triplets[b].row;
    return triplets[a].col < triplets[b].col;
  });

  CsrMatrix m;
  m.nrows = nrows;
  m.ncols = ncols;
  m.row_ptr.assign(nrows + 1, 0);
  m.col_idx.reserve(triplets.size());
  m.values.reserve(triplets.size());

  index_t cur_row = -1;
  index_t cur_col = -1;
  for (std::size_t k : order) {
    const Triplet& t = triplets[k];
    if (t.row == cur_row && t.col == cur_col) {
      m.values.back() += t.value;
    } else {
      m.col_idx.push_back(t.col);
      m.values.push_back(t.value);
      cur_row = t.row;
      cur_col = t.col;
      m.row_ptr[t.row + 1] += 1;
    }
  }
  for (index_t i = 0; i < nrows; ++i) m.row_ptr[i + 1] += m.row_ptr[i];
  return m;
}

CsrMatrix identity(index_t n) {
  CsrMatrix m;
  m.nrows = n;
  m.ncols = n;
  m.row_ptr.resize(n + 1);
  m.col_idx.resize(n);
  m.values.assign(n, 1.0);
  std::iota(m.row_ptr.begin(), m.row_ptr.end(), index_t{0});
  std::iota(m.col_idx.begin(), m.col_idx.end(), index_t{0});
  return m;
}

CsrMatrix transpose(const CsrMatrix& a) {
  CsrMatrix t;
  t.nrows = a.ncols;
  t.ncols = a.nrows;
  t.row_ptr.assign(a.ncols + 1, 0);
  t.col_idx.resize(a.nnz());
  t.values.resize(a.nnz());

  for (index_t k = 0; k < a.nnz(); ++k) t.row_ptr[a.col_idx[k] + 1] += 1;
  for (index_t j = 0; j < a.ncols; ++j) t.row_ptr[j + 1] += t.row_ptr[j];

  std::vector<index_t> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
  for (index_t i = 0; i < a.nrows; ++i) {
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      const index_t pos = next[a.col_idx[k]]++;
      t.col_idx[pos] = i;
      t.values[pos] = a.values[k];
    }
  }
  return t;
}

void validate(const CsrMatrix& a) {
  if (a.nrows < 0 || a.ncols < 0) {
    throw std::invalid_argument("validate: negative dimension");
  }
  if (a.row_ptr.size() != static_cast<std::size_t>(a.nrows) + 1 || a.row_ptr[0] != 0) {
    throw std::invalid_argument("validate: bad row_ptr head");
  }
  for (index_t i = 0; i < a.nrows; ++i) {
    if (a.row_ptr[i + 1] < a.row_ptr[i]) {
      throw std::invalid_argument("validate: row_ptr decreasing at row " + std::to_string(i));
    }
    index_t prev = -1;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      const index_t j = a.col_idx[k];
      if (j < 0 || j >= a.ncols) {
        throw std::invalid_argument("validate: column out of range in row " + std::to_string(i));
      }
      if (j <= prev) {
        throw std::invalid_argument("validate: columns not strictly increasing in row " +
                                    std::to_string(i));
      }
      prev = j;
    }
  }
  if (a.col_idx.size() != static_cast<std::size_t>(a.nnz()) ||
      a.values.size() != static_cast<std::size_t>(a.nnz())) {
    throw std::invalid_argument("validate: index/value array length mismatch");
  }
}

void check_triangular(const CsrMatrix& a, TriangularKind kind) {
  for (index_t i = 0; i < a.nrows; ++i) {
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      const index_t j = a.col_idx[k];
      const bool off_side = kind.side == TriangularKind::Side::Lower ? j > i : j < i;
      if (off_side) {
        throw std::invalid_argument("check_triangular: entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside stated triangle");
      }
      if (kind.unit_diagonal && j == i && a.values[k] != 1.0) {
        throw std::invalid_argument("check_triangular: non-unit diagonal at row " +
                                    std::to_string(i));
      }
    }
  }
}

SparsityPattern pattern_of(const CsrMatrix& m) {
  SparsityPattern s;
  s.nrows = m.nrows;
  s.ncols = m.ncols;
  s.row_ptr = m.row_ptr;
  s.col_idx = m.col_idx;
  return s;
}

CsrMatrix purge_zeros(const CsrMatrix& m) {
  CsrMatrix r;
  r.nrows = m.nrows;
  r.ncols = m.ncols;
  r.row_ptr.assign(m.nrows + 1, 0);
  r.col_idx.reserve(m.nnz());
  r.values.reserve(m.nnz());
  for (index_t i = 0; i < m.nrows; ++i) {
    for (index_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) {
      if (m.values[k] != 0.0) {
        r.col_idx.push_back(m.col_idx[k]);
        r.values.push_back(m.values[k]);
      }
    }
    r.row_ptr[i + 1] = static_cast<index_t>(r.col_idx.size());
  }
  return r;
}

double nnz_ratio(const CsrMatrix& m, const CsrMatrix& t) {
  if (t.nnz() == 0) {
    throw std::invalid_argument("nnz_ratio: reference matrix has no stored entries");
  }
  return static_cast<double>(m.nnz()) / static_cast<double>(t.nnz());
}

}  // namespace saitprec
