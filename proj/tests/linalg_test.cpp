#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "unexp/linalg.hpp"

using namespace unexp;

namespace {

Matrix random_integer_matrix(const FieldHandle& F, std::size_t rows, std::size_t cols,
                             RngState& rng) {
  Matrix m(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = F->from_integer(rng.integer_in(-9, 9));
  return m;
}

// product of random rows*k and k*cols factors: rank at most k
Matrix random_low_rank(const FieldHandle& F, std::size_t rows, std::size_t cols, std::size_t k,
                       RngState& rng) {
  Matrix m(F, rows, cols);
  const Matrix a = random_integer_matrix(F, rows, k, rng);
  const Matrix b = random_integer_matrix(F, k, cols, rng);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar acc = F->zero();
      for (std::size_t t = 0; t < k; ++t)
        F->add_assign(acc, F->mul(a.at(r, t), b.at(t, c)));
      m.at(r, c) = acc;
    }
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rank basics") {
  const FieldHandle F = make_field(cyclotomic(3));
  CHECK(rank(Matrix(F, 4, 7)) == 0);
  Matrix id(F, 5, 5);
  for (int i = 0; i < 5; ++i) id.at(i, i) = F->one();
  CHECK(rank(id) == 5);
}

TEST_CASE("kernel of (1 1)") {
  const FieldHandle F = make_field(cyclotomic(3));
  Matrix m(F, 1, 2);
  m.at(0, 0) = F->one();
  m.at(0, 1) = F->one();
  const auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  // proportional to (1, -1)
  CHECK(F->eq(F->mul(basis[0][0], F->from_integer(-1)), basis[0][1]));
  // full column rank: empty kernel
  Matrix t(F, 2, 1);
  t.at(0, 0) = F->one();
  CHECK(kernel_basis(t).empty());
}

TEST_CASE("kernel vectors annihilate their matrix exactly") {
  for (const FieldSpec spec : {cyclotomic(3), modular(3, default_prime(3))}) {
    const FieldHandle F = make_field(spec);
    RngState rng(31);
    for (int i = 0; i < 15; ++i) {
      const Matrix m = random_low_rank(F, 6, 9, 4, rng);
      const auto basis = kernel_basis(m);
      CHECK(basis.size() == m.cols() - rank(m));
      for (const auto& v : basis) {
        for (const Scalar& entry : matvec(m, v)) CHECK(F->is_zero(entry));
      }
    }
  }
}

TEST_CASE("rank equals rank of the transpose") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(32);
  for (int i = 0; i < 15; ++i) {
    const Matrix m = random_low_rank(F, 5, 8, 3, rng);
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("rank agrees with the independent oracle") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(33);
  for (int i = 0; i < 15; ++i) {
    const Matrix m = random_low_rank(F, 7, 9, 1 + i % 5, rng);
    CHECK(rank(m) == oracle::naive_rank(m));
  }
}

TEST_CASE("cyclotomic and modular ranks agree on integer matrices") {
  const FieldHandle C = make_field(cyclotomic(3));
  const FieldHandle M = make_field(modular(3, default_prime(3)));
  RngState rng(34);
  for (int i = 0; i < 20; ++i) {
    RngState fork_a = rng.child(2 * i), fork_b = rng.child(2 * i);
    const Matrix over_q = random_low_rank(C, 6, 8, 1 + i % 6, fork_a);
    const Matrix over_p = random_low_rank(M, 6, 8, 1 + i % 6, fork_b);
    CHECK(rank(over_q) == rank(over_p));
  }
}

TEST_CASE("symbolic rank") {
  const FieldHandle F = make_field(cyclotomic(3));
  const auto a = [&](std::size_t i) { return Poly::variable(F, 2, i); };
  // diagonal (a0, a1)
  PolyMatrix diag(F, 2, 2, 2);
  diag.at(0, 0) = a(0);
  diag.at(1, 1) = a(1);
  const auto res = symbolic_rank(diag);
  CHECK(res.rank == 2);
  CHECK(res.pivots.size() == 2);
  // two identical polynomial rows collapse
  PolyMatrix dup(F, 2, 2, 2);
  dup.at(0, 0) = a(0);
  dup.at(0, 1) = a(1);
  dup.at(1, 0) = a(0);
  dup.at(1, 1) = a(1);
  CHECK(symbolic_rank(dup).rank == 1);
}

TEST_CASE("symbolic rank dominates scalar specializations") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(F, 3, 4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        Poly entry(F, 3);
        for (int t = 0; t < 2; ++t) {
          std::vector<unsigned> exps(3);
          exps[rng.below(3)] = static_cast<unsigned>(rng.below(2));
          entry.add_term(Monomial(std::move(exps)), F->from_integer(rng.integer_in(-2, 2)));
        }
        m.at(r, c) = entry;
      }
    }
    const unsigned sym = symbolic_rank(m).rank;
    const ProjPoint pt(F, {F->from_integer(rng.integer_in(1, 50)),
                           F->from_integer(rng.integer_in(1, 50)),
                           F->from_integer(rng.integer_in(1, 50))});
    CHECK(sym >= rank(m.evaluated(pt)));
  }
}

TEST_CASE("csv round trip") {
  for (const FieldSpec spec : {cyclotomic(3), modular(3, 7)}) {
    const FieldHandle F = make_field(spec);
    RngState rng(36);
    Matrix m(F, 3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = F->random_scalar(rng, 30);
    std::stringstream ss;
    write_csv(ss, m);
    const Matrix back = read_csv(ss, F);
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(F->eq(back.at(r, c), m.at(r, c)));
  }
}

TEST_SUITE_END();
