#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "unexp/poly.hpp"

namespace unexp {

// Dense matrix with exact scalar entries. Immutable in normal use; the
// elimination routines work on copies or on an explicitly owned instance.
class Matrix {
 public:
  Matrix(FieldHandle field, std::size_t rows, std::size_t cols);

  static Matrix from_rows(FieldHandle field, const std::vector<std::vector<Scalar>>& rows);

  const FieldHandle& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  Matrix transposed() const;

 private:
  FieldHandle field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

// a stacked above b (matching column counts)
Matrix vstack(const Matrix& a, const Matrix& b);

std::vector<Scalar> matvec(const Matrix& m, std::span<const Scalar> v);

// Exact rank via Gaussian elimination over the field; deterministic pivoting
// (first nonzero in column order).
unsigned rank(const Matrix& m);

// Reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref_in_place(Matrix& m);

// Basis of the right kernel {v : m v = 0}; size is cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Matrix with multivariate polynomial entries, for computations that keep the
// coordinates of a general point symbolic.
class PolyMatrix {
 public:
  PolyMatrix(FieldHandle field, std::size_t nvars, std::size_t rows, std::size_t cols);

  const FieldHandle& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

  // Entry-wise evaluation at a point in parameter space.
  Matrix evaluated(const ProjPoint& pt) const;

 private:
  FieldHandle field_;
  std::size_t nvars_, rows_, cols_;
  std::vector<Poly> entries_;
};

struct SymbolicRankResult {
  unsigned rank = 0;
  // The Bareiss pivot polynomials: the computed rank holds at every parameter
  // point where none of them vanish (the genericity certificate).
  std::vector<Poly> pivots;
};

// Rank over the rational function field in the parameters, by fraction-free
// (Bareiss) elimination with exact polynomial pivots.
SymbolicRankResult symbolic_rank(const PolyMatrix& m);

// CSV with cells in the scalar/polynomial text format (which never contains
// commas); row and column order is construction order.
void write_csv(std::ostream& os, const Matrix& m);
void write_csv(std::ostream& os, const PolyMatrix& m,
               std::span<const std::string> var_names = {});
Matrix read_csv(std::istream& is, FieldHandle field);

}  // namespace unexp
