#include "unexp/linalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace unexp {

Matrix::Matrix(FieldHandle field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_->zero()) {}

Matrix Matrix::from_rows(FieldHandle field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(errc::arity_mismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) raise(errc::arity_mismatch, "column counts differ");
  if (!(a.field()->spec() == b.field()->spec()))
    raise(errc::field_mismatch, "matrices over different fields");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
  return out;
}

std::vector<Scalar> matvec(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) raise(errc::arity_mismatch, "vector length mismatch");
  const Field& F = *m.field();
  std::vector<Scalar> out(m.rows(), F.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!F.is_zero(m.at(r, c))) {
        Scalar t = F.mul(m.at(r, c), v[c]);
        F.add_assign(out[r], t);
      }
    }
  }
  return out;
}

namespace {

// Forward elimination; returns pivot (row, col) pairs. Pivot rows end up
// scaled to a leading one.
std::vector<std::pair<std::size_t, std::size_t>> forward_eliminate(Matrix& m) {
  const Field& F = *m.field();
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && F.is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    const Scalar piv_inv = F.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) F.mul_assign(m.at(r, j), piv_inv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (F.is_zero(m.at(i, c))) continue;
      const Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) F.submul_assign(m.at(i, j), f, m.at(r, j));
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

unsigned rank(const Matrix& m) {
  Matrix work = m;
  return static_cast<unsigned>(forward_eliminate(work).size());
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  const Field& F = *m.field();
  const auto pivots = forward_eliminate(m);
  // backward pass: clear entries above each pivot
  for (std::size_t t = pivots.size(); t-- > 0;) {
    const auto [pr, pc] = pivots[t];
    for (std::size_t i = 0; i < pr; ++i) {
      if (F.is_zero(m.at(i, pc))) continue;
      const Scalar f = m.at(i, pc);
      for (std::size_t j = pc; j < m.cols(); ++j) F.submul_assign(m.at(i, j), f, m.at(pr, j));
    }
  }
  std::vector<std::size_t> cols;
  cols.reserve(pivots.size());
  for (const auto& [pr, pc] : pivots) cols.push_back(pc);
  return cols;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const Field& F = *m.field();
  Matrix r = m;
  const std::vector<std::size_t> pivot_cols = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(m.cols(), F.zero());
    v[fc] = F.one();
    for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
      v[pivot_cols[t]] = F.neg(r.at(t, fc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(FieldHandle field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      nvars_(nvars),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Poly(field_, nvars)) {}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Matrix PolyMatrix::evaluated(const ProjPoint& pt) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).evaluate(pt);
  }
  return out;
}

SymbolicRankResult symbolic_rank(const PolyMatrix& matrix) {
  PolyMatrix m = matrix;
  const Poly one = Poly::constant(m.field(), m.nvars(), m.field()->one());
  Poly prev = one;
  SymbolicRankResult result;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Poly num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        m.at(i, j) = prev.equals(one) ? std::move(num) : divide_exact(num, prev);
      }
      m.at(i, c) = Poly(m.field(), m.nvars());
    }
    prev = m.at(r, c);
    result.pivots.push_back(prev);
    ++r;
  }
  result.rank = static_cast<unsigned>(r);
  return result;
}

// ---------------------------------------------------------------------------
// CSV

void write_csv(std::ostream& os, const Matrix& m) {
  const Field& F = *m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << F.to_string(m.at(r, c));
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const PolyMatrix& m, std::span<const std::string> var_names) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m.at(r, c).to_string(var_names);
    }
    os << '\n';
  }
}

Matrix read_csv(std::istream& is, FieldHandle field) {
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<Scalar> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(field->parse(cell));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(std::move(field), rows);
}

}  // namespace unexp
