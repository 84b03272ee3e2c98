#pragma once
// Exact linear algebra over rational functions in q: fraction-free (Bareiss)
// elimination after clearing denominators, with pivot/column-reduction/nullspace
// extraction and small dense inversion.

#include "bozec/qscalar.hpp"

#include <vector>

namespace bozec {

using QMatrix = std::vector<std::vector<QScalar>>;

struct EchelonResult {
  size_t rank = 0;
  std::vector<size_t> pivot_cols; // first linearly independent columns, in order
  // column_reduction[r][j]: coefficient of pivot column r in the expansion of
  // column j (identity on pivot columns themselves).
  QMatrix column_reduction;
  // nullspace vectors over the columns, denominator-cleared and primitive;
  // one per non-pivot column, unit at that column.
  QMatrix nullspace;
};

// Column-relation analysis of m (any shape). Row operations only, so the
// column dependencies of the input are reported exactly.
EchelonResult column_echelon(const QMatrix& m);

// Inverse of a square nonsingular matrix; throws std::invalid_argument if singular.
QMatrix invert(const QMatrix& m);

// x with m * x = rhs for square nonsingular m.
std::vector<QScalar> solve(const QMatrix& m, const std::vector<QScalar>& rhs);

QMatrix matmul(const QMatrix& a, const QMatrix& b);
std::vector<QScalar> matvec(const QMatrix& a, const std::vector<QScalar>& v);

// Incremental exact row space in echelon form, for span maintenance.
class RowSpan {
public:
  explicit RowSpan(size_t ncols) : ncols_(ncols) {}
  size_t dim() const { return rows_.size(); }
  size_t ncols() const { return ncols_; }
  // Reduces v against the span; returns the residue (zero if contained).
  std::vector<QScalar> reduce(std::vector<QScalar> v) const;
  bool contains(const std::vector<QScalar>& v) const;
  // Adds v if independent; returns true when the dimension grew.
  bool add(std::vector<QScalar> v);
  // Columns without a pivot: coordinates of the complement basis.
  std::vector<size_t> free_columns() const;
  const std::vector<std::vector<QScalar>>& rows() const { return rows_; }
  const std::vector<size_t>& pivot_columns() const { return pivots_; }

private:
  size_t ncols_;
  std::vector<std::vector<QScalar>> rows_; // normalized: unit pivot, sorted by pivot
  std::vector<size_t> pivots_;
};

} // namespace bozec
