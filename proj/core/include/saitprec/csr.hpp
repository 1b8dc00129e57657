#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace saitprec {

using index_t = std::int64_t;

/// One (row, col, value) entry used to assemble a CsrMatrix.
struct Triplet {
  index_t row = 0;
  index_t col = 0;
  double value = 0.0;
};

/// Compressed-sparse-row matrix with 64-bit indices and double values.
///
/// Invariants: row_ptr[0] == 0, row_ptr non-decreasing, row_ptr[nrows] == nnz;
/// column indices strictly increasing within each row and in [0, ncols).
/// Instances are treated as immutable after construction; concurrent readers
/// are safe.
struct CsrMatrix {
  index_t nrows = 0;
  index_t ncols = 0;
  std::vector<index_t> row_ptr{0};
  std::vector<index_t> col_idx;
  std::vector<double> values;

  index_t nnz() const { return row_ptr.empty() ? 0 : row_ptr.back(); }

  std::span<const index_t> row_cols(index_t i) const {
    return {col_idx.data() + row_ptr[i],
            static_cast<std::size_t>(row_ptr[i + 1] - row_ptr[i])};
  }
  std::span<const double> row_vals(index_t i) const {
    return {values.data() + row_ptr[i],
            static_cast<std::size_t>(row_ptr[i + 1] - row_ptr[i])};
  }

  bool operator==(const CsrMatrix&) const = default;
};

/// Positions-only view of a sparse matrix (same layout as CsrMatrix, no values).
struct SparsityPattern {
  index_t nrows = 0;
  index_t ncols = 0;
  std::vector<index_t> row_ptr{0};
  std::vector<index_t> col_idx;

  index_t nnz() const { return row_ptr.empty() ? 0 : row_ptr.back(); }

  std::span<const index_t> row_cols(index_t i) const {
    return {col_idx.data() + row_ptr[i],
            static_cast<std::size_t>(row_ptr[i + 1] - row_ptr[i])};
  }

  bool operator==(const SparsityPattern&) const = default;
};

/// Which triangle a matrix occupies, plus whether its diagonal is all ones.
/// Unit diagonals are stored explicitly, not implied.
struct TriangularKind {
  enum class Side { Lower, Upper };
  Side side = Side::Lower;
  bool unit_diagonal = false;
};

inline constexpr TriangularKind lower_triangular{TriangularKind::Side::Lower, false};
inline constexpr TriangularKind unit_lower_triangular{TriangularKind::Side::Lower, true};
inline constexpr TriangularKind upper_triangular{TriangularKind::Side::Upper, false};
inline constexpr TriangularKind unit_upper_triangular{TriangularKind::Side::Upper, true};

/// Builds a CsrMatrix from unordered triplets; duplicate (row, col) pairs are
/// summed in their original order. Throws std::invalid_argument naming the
/// offending triplet if an index is out of range.
CsrMatrix from_triplets(index_t nrows, index_t ncols, std::span<const Triplet> triplets);

CsrMatrix identity(index_t n);

CsrMatrix transpose(const CsrMatrix& a);

/// Throws std::invalid_argument if the CSR invariants do not hold.
void validate(const CsrMatrix& a);

/// Throws std::invalid_argument if `a` has entries outside the stated triangle
/// or, for unit kinds, a diagonal value != 1.
void check_triangular(const CsrMatrix& a, TriangularKind kind);

SparsityPattern pattern_of(const CsrMatrix& m);

/// Removes stored entries whose value is exactly 0.0. Used where structural
/// claims must not be polluted by cancellation zeros.
CsrMatrix purge_zeros(const CsrMatrix& m);

/// nnz(m) / nnz(t); throws std::invalid_argument when nnz(t) == 0.
double nnz_ratio(const CsrMatrix& m, const CsrMatrix& t);

}  // namespace saitprec
