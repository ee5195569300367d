#pragma once

// Small independent oracles used to pin expected values. The rank oracle
// re-does elimination with its own scalar type instead of going through
// unexp::linalg; the multiplicity oracle restricts to a random line through
// the point instead of taking derivatives.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "unexp/linalg.hpp"
#include "unexp/rng.hpp"

namespace oracle {

// element u + v*z of Q(z), z^2 + z + 1 = 0
struct Z3 {
  mpq_class u, v;
  bool is_zero() const { return u == 0 && v == 0; }
};

inline Z3 sub(const Z3& a, const Z3& b) { return {a.u - b.u, a.v - b.v}; }

inline Z3 mul(const Z3& a, const Z3& b) {
  // (u1 + v1 z)(u2 + v2 z) with z^2 = -1 - z
  return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u - a.v * b.v};
}

inline Z3 inv(const Z3& a) {
  const mpq_class norm = a.u * a.u - a.u * a.v + a.v * a.v;
  return {(a.u - a.v) / norm, -a.v / norm};
}

// Textbook elimination over Q(zeta_3); accepts matrices over the cyclotomic
// n = 3 backend.
inline unsigned naive_rank_zeta3(const unexp::Matrix& m) {
  std::vector<std::vector<Z3>> a(m.rows(), std::vector<Z3>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const unexp::CycValue& cv = m.at(r, c).cyc();
      a[r][c] = {cv[0], cv[1]};
    }
  }
  unsigned rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[row], a[pivot]);
    const Z3 pinv = inv(a[row][col]);
    for (std::size_t c = col; c < m.cols(); ++c) a[row][c] = mul(a[row][c], pinv);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (a[r][col].is_zero()) continue;
      const Z3 f = a[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) a[r][c] = sub(a[r][c], mul(f, a[row][c]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Same for a prime-field matrix.
inline unsigned naive_rank_modular(const unexp::Matrix& m) {
  const std::uint64_t p = m.field()->p();
  const auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  const auto powmod = [&](std::uint64_t x, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).mod();
  unsigned rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[row], a[pivot]);
    const std::uint64_t pinv = powmod(a[row][col], p - 2);
    for (std::size_t c = col; c < m.cols(); ++c) a[row][c] = mulmod(a[row][c], pinv);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) {
        const std::uint64_t t = mulmod(f, a[row][c]);
        a[r][c] = a[r][c] >= t ? a[r][c] - t : a[r][c] + p - t;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline unsigned naive_rank(const unexp::Matrix& m) {
  if (m.field()->kind() == unexp::FieldKind::prime_modular) return naive_rank_modular(m);
  return naive_rank_zeta3(m);
}

// Order of vanishing of f along the line p + t*d for a random integer
// direction d: the lowest power of t in the restriction. Agrees with the
// multiplicity for generic directions.
inline unsigned line_restriction_order(const unexp::Poly& f, const unexp::ProjPoint& p,
                                       unexp::RngState& rng) {
  const unexp::FieldHandle& field = f.field();
  std::vector<unexp::Poly> images;
  const unexp::Poly t = unexp::Poly::variable(field, 1, 0);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const unexp::Scalar dir = field->from_integer(rng.integer_in(-50, 50));
    images.push_back(unexp::Poly::constant(field, 1, p[i]) + t.scaled(dir));
  }
  const unexp::Poly restricted = f.substitute(images);
  if (restricted.is_zero()) return f.total_degree() + 1;  // line inside the hypersurface
  unsigned low = restricted.total_degree();
  for (const auto& [m, c] : restricted.terms()) low = std::min(low, m.degree());
  return low;
}

}  // namespace oracle
