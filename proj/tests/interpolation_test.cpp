#include <doctest.h>

#include "oracle.hpp"
#include "unexp/constructions.hpp"
#include "unexp/interpolation.hpp"
#include "unexp/reference_tables.hpp"

using namespace unexp;

namespace {

std::vector<ProjPoint> all_points(const Configuration& config) {
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < config.point_count(); ++i) pts.push_back(config.point(i));
  return pts;
}

}  // namespace

TEST_SUITE_BEGIN("interpolation");

TEST_CASE("binomials and conditions counts") {
  CHECK(binomial(7, 5) == 21);
  CHECK(fat_point_conditions(5, 3) == 21);
  CHECK(fat_point_conditions(5, 2) == 6);
  CHECK(fat_point_conditions(2, 4) == 10);
  CHECK(fat_point_conditions(3, 1) == 1);
}

TEST_CASE("vanishing space dimensions") {
  const FieldHandle F = make_field(cyclotomic(3));
  // no points: the full space of quartics in P^5
  const Configuration empty = Configuration::empty(F, 5, 3);
  CHECK(vanishing_dimension(empty, 4) == 126);

  const Configuration w33 = build_configuration(3, 3, F);
  const auto basis33 = vanishing_space(w33, 4);
  CHECK(basis33.size() == 8);
  // oracle: independent elimination of the evaluation matrix
  {
    const auto pts = all_points(w33);
    const Matrix ev = evaluation_matrix(F, 4, pts, 4);
    CHECK(ev.rows() == 31);
    CHECK(ev.cols() == 35);
    CHECK(35 - oracle::naive_rank(ev) == 8);
  }
  // every basis element vanishes on the whole configuration
  for (const Poly& f : basis33) {
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == 4);
    for (std::size_t i = 0; i < w33.point_count(); ++i)
      CHECK(F->is_zero(f.evaluate(w33.point(i))));
  }

  const Configuration w53 = build_configuration(5, 3, F);
  CHECK(vanishing_dimension(w53, 4) == 24);
  {
    const auto pts = all_points(w53);
    const Matrix ev = evaluation_matrix(F, 6, pts, 4);
    CHECK(ev.rows() == 249);
    CHECK(ev.cols() == 126);
    CHECK(126 - oracle::naive_rank(ev) == 24);
  }
  // consistent with the 24 independent generators, which all vanish on W
  const GeneratorSet gens = generators(GeneratorKind::fermat_pn, 5, 3, F);
  CHECK(rank(coefficient_matrix(gens.gens, 4)) == 24);
  CHECK(verify_vanishing(gens, w53).ok);
}

TEST_CASE("derivative rows: shapes and the m = 1 case") {
  const FieldHandle F = make_field(cyclotomic(3));
  const GeneratorSet g5 = generators(GeneratorKind::fermat_pn, 5, 3, F);
  RngState rng(41);
  const ProjPoint R = sample_general_point(F, 5, 3, rng, {});
  const Matrix rows = derivative_rows(g5.gens, R, 3);
  CHECK(rows.rows() == 21);
  CHECK(rows.cols() == 24);

  const GeneratorSet g3 = generators(GeneratorKind::fermat_pn, 3, 3, F);
  RngState rng3(42);
  const ProjPoint R3 = sample_general_point(F, 3, 3, rng3, {});
  const Matrix rows3 = derivative_rows(g3.gens, R3, 3);
  CHECK(rows3.rows() == 10);
  CHECK(rows3.cols() == 8);

  // multiplicity 1: a single row of plain evaluations
  const Matrix row1 = derivative_rows(g3.gens, R3, 1);
  CHECK(row1.rows() == 1);
  for (std::size_t c = 0; c < row1.cols(); ++c)
    CHECK(F->eq(row1.at(0, c), g3.gens[c].evaluate(R3)));

  // degree-4 forms support multiplicities up to 4; m = 5 needs order-4
  // partials, where the top-order reduction no longer applies
  CHECK(derivative_rows(g3.gens, R3, 4).rows() == 20);
  CHECK_THROWS_AS(derivative_rows(g3.gens, R3, 5), error);
  try {
    derivative_rows(g3.gens, R3, 5);
  } catch (const error& e) {
    CHECK(e.code() == errc::degree_too_low);
  }
}

TEST_CASE("system dimensions around the quartic family") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w53 = build_configuration(5, 3, F);
  RngState rng(43);
  const auto avoid = all_points(w53);
  const ProjPoint R = sample_general_point(F, 5, 3, rng, avoid);

  // independent oracle for the 21-row conditions matrix of the triple point
  {
    const GeneratorSet g5 = generators(GeneratorKind::fermat_pn, 5, 3, F);
    CHECK(oracle::naive_rank(derivative_rows(g5.gens, R, 3)) == 18);
  }

  FatPointScheme scheme{w53, {FatPoint{R, 3}}};
  CHECK(system_dimension(scheme, 4) == 6);

  const ProjPoint P = sample_general_point(F, 5, 3, rng, avoid);
  scheme.points.push_back(FatPoint{P, 2});
  CHECK(system_dimension(scheme, 4) == 1);

  const Configuration w33 = build_configuration(3, 3, F);
  RngState rng3(44);
  const ProjPoint R3 = sample_general_point(F, 3, 3, rng3, {});
  FatPointScheme scheme3{w33, {FatPoint{R3, 3}}};
  CHECK(system_dimension(scheme3, 4) == 1);

  // coinciding points are rejected
  FatPointScheme clash{w33, {FatPoint{R3, 3}, FatPoint{R3, 2}}};
  CHECK_THROWS_AS(system_dimension(clash, 4), error);
}

TEST_CASE("system dimension is invariant under rescaling a point") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w33 = build_configuration(3, 3, F);
  const auto basis = vanishing_space(w33, 4);
  RngState rng(45);
  const ProjPoint R = sample_general_point(F, 3, 3, rng, {});
  std::vector<Scalar> scaled;
  for (std::size_t i = 0; i < R.size(); ++i) scaled.push_back(F->mul(R[i], F->from_integer(7)));
  const ProjPoint R7(F, std::move(scaled));
  const std::vector<FatPoint> a{{R, 3}};
  const std::vector<FatPoint> b{{R7, 3}};
  CHECK(system_dimension_with_basis(basis, a) == system_dimension_with_basis(basis, b));
}

TEST_CASE("stacked conditions: rank is monotone, increments bounded") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w23 = build_configuration(2, 3, F);
  const auto basis = vanishing_space(w23, 6);
  RngState rng(52);
  auto avoid = all_points(w23);
  Matrix stacked(F, 0, basis.size());
  unsigned prev = 0;
  for (unsigned m : {1u, 2u, 1u, 2u, 2u}) {
    const ProjPoint p = sample_general_point(F, 2, 3, rng, avoid);
    avoid.push_back(p);
    stacked = vstack(stacked, derivative_rows(basis, p, m));
    const unsigned r = rank(stacked);
    CHECK(r >= prev);
    CHECK(r - prev <= fat_point_conditions(2, m));
    prev = r;
  }
}

TEST_CASE("m = 1 conditions agree with enlarging the point set") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w23 = build_configuration(2, 3, F);
  const auto basis = vanishing_space(w23, 5);
  RngState rng(46);
  auto pts = all_points(w23);
  std::vector<FatPoint> simple;
  for (int i = 0; i < 3; ++i) {
    const ProjPoint p = sample_general_point(F, 2, 3, rng, pts);
    pts.push_back(p);
    simple.push_back(FatPoint{p, 1});
  }
  const unsigned via_rows = system_dimension_with_basis(basis, simple);
  const auto enlarged = vanishing_space_of_points(F, 3, pts, 5);
  CHECK(via_rows == enlarged.size());
}

TEST_CASE("top-order reduction is sound") {
  // 200 quartics with all order-2 partials vanishing at p, built from the
  // kernel of the conditions matrix: each vanishes at p together with all of
  // its first-order partials
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(47);
  const auto monos = monomials_of_degree(4, 4);
  std::vector<Poly> quartics;
  for (const Monomial& m : monos) quartics.push_back(Poly::term(F, m, F->one()));
  int tested = 0;
  for (int round = 0; tested < 200; ++round) {
    const ProjPoint p = sample_general_point(F, 3, 3, rng, {});
    const Matrix conditions = derivative_rows(quartics, p, 3);
    const auto kernel = kernel_basis(conditions);
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      // random combination of two kernel vectors, not just the basis itself
      const auto& v = kernel[k];
      const auto& w = kernel[(k + 1) % kernel.size()];
      const Scalar lambda = F->from_integer(rng.integer_in(1, 9));
      const Scalar mu = F->from_integer(rng.integer_in(0, 9));
      Poly f(F, 4);
      for (std::size_t c = 0; c < monos.size(); ++c)
        f.add_term(monos[c], F->add(F->mul(lambda, v[c]), F->mul(mu, w[c])));
      if (f.is_zero()) continue;
      CHECK(F->is_zero(f.evaluate(p)));
      for (std::size_t var = 0; var < 4; ++var)
        CHECK(F->is_zero(f.derivative(var).evaluate(p)));
      ++tested;
    }
  }
  CHECK(tested >= 200);
}

TEST_CASE("unexpectedness: the quartic family in P^5") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w53 = build_configuration(5, 3, F);
  const auto report = unexpectedness_report(w53, 4, {3, 2}, 2, 7);
  CHECK(report.base_dim == 24);
  CHECK(report.conditions_expected == 27);
  CHECK(report.virtual_dim == -3);
  CHECK(report.expected_dim == 0);
  CHECK(report.actual_dim == 1);
  CHECK(report.verdict);
  CHECK(report.rank_per_point == std::vector<unsigned>{18, 5});
  CHECK(report.seeds.size() == 2);
}

TEST_CASE("unexpectedness: the degree-5 curve with a 4-fold point") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w23 = build_configuration(2, 3, F);
  const auto report = unexpectedness_report(w23, 5, {4}, 2, 11);
  CHECK(report.actual_dim >= 1);
  CHECK(report.verdict);
}

TEST_CASE("unexpectedness negative control: a double point on conics") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration empty = Configuration::empty(F, 2, 3);
  const auto report = unexpectedness_report(empty, 2, {2}, 2, 13);
  CHECK(report.base_dim == 6);
  CHECK(report.conditions_expected == 3);
  CHECK(report.expected_dim == 3);
  CHECK(report.actual_dim == 3);
  CHECK_FALSE(report.verdict);
}

TEST_CASE("generation check, desk size") {
  const FieldHandle F = make_field(cyclotomic(3));
  const GenerationTable t33 = verify_generation(3, 3, 6, F);
  CHECK(t33.ok);
  for (const GenerationRow& row : t33.rows) CHECK(row.product_span_dim == row.kernel_dim);
  // degree 4 row must show the 8 independent generators
  CHECK(t33.rows[3].kernel_dim == 8);

  const GenerationTable t23 = verify_generation(2, 3, 7, F);
  CHECK(t23.ok);
  CHECK(t23.rows[3].kernel_dim == 3);

  CHECK_THROWS_AS(verify_generation(2, 3, 3, F), error);   // bound below generator degree
  CHECK_THROWS_AS(verify_generation(3, 4, 8, F), error);   // unsupported family
}

TEST_CASE("symbolic conditions matrix") {
  const FieldHandle F = make_field(cyclotomic(3));
  const SymbolicConditionsMatrix sym = symbolic_interpolation_matrix(3, F);
  REQUIRE(sym.matrix.rows() == 10);
  REQUIRE(sym.matrix.cols() == 8);

  // frozen rows: d^2/dx0^2 and d^2/dx0 dx1 after normalization
  const std::vector<std::string> a{"a0", "a1", "a2", "a3"};
  const auto cell = [&](const char* text) { return Poly::parse(F, 4, text, a); };
  const std::vector<const char*> row0{"0", "0", "-a1", "0", "-a2", "0", "a3", "a3"};
  const std::vector<const char*> row1{"a1^2", "a1^2", "-a0^2", "0", "0", "0", "0", "0"};
  for (std::size_t c = 0; c < 8; ++c) {
    CHECK(sym.matrix.at(0, c).equals(cell(row0[c])));
    CHECK(sym.matrix.at(1, c).equals(cell(row1[c])));
  }

  // entry-for-entry proportional to the frozen reference
  const PolyMatrix expected = reference_interpolation_matrix(3, F);
  CHECK(rows_proportional(sym.matrix, expected));

  // generic rank 7; scalar rank at 5 random points agrees (oracle)
  const auto res = symbolic_rank(sym.matrix);
  CHECK(res.rank == 7);
  RngState rng(48);
  for (int i = 0; i < 5; ++i) {
    const ProjPoint pt = sample_general_point(F, 3, 3, rng, {});
    CHECK(oracle::naive_rank(sym.matrix.evaluated(pt)) == 7);
  }

  const SymbolicConditionsMatrix sym5 = symbolic_interpolation_matrix(5, F);
  CHECK(sym5.matrix.rows() == 21);
  CHECK(sym5.matrix.cols() == 24);
  CHECK(rows_proportional(sym5.matrix, reference_interpolation_matrix(5, F)));

  CHECK_THROWS_AS(symbolic_interpolation_matrix(4, F), error);
}

TEST_CASE("symbolic matrix specializes to the scalar conditions matrix") {
  const FieldHandle F = make_field(cyclotomic(3));
  const SymbolicConditionsMatrix sym = symbolic_interpolation_matrix(3, F);
  const GeneratorSet gens = generators(GeneratorKind::fermat_pn, 3, 3, F);
  std::vector<Poly> reordered;
  for (std::size_t k : sym.column_order) reordered.push_back(gens.gens[k]);
  RngState rng(49);
  const ProjPoint pt = sample_general_point(F, 3, 3, rng, {});
  const Matrix direct = derivative_rows(reordered, pt, 3);
  for (std::size_t r = 0; r < sym.matrix.rows(); ++r) {
    const Scalar factor = sym.row_factors[r].evaluate(pt);
    for (std::size_t c = 0; c < sym.matrix.cols(); ++c) {
      CHECK(F->eq(direct.at(r, c), F->mul(sym.matrix.at(r, c).evaluate(pt), factor)));
    }
  }
}

TEST_CASE("conditions sweep at k = 2") {
  const std::vector<unsigned> ks{2};
  const ConditionsTable table = conditions_count_sweep(ks, 2, 19);
  CHECK(table.ok);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].N == 5);
  CHECK(table.rows[0].dim_v == 6);
  CHECK(table.rows[0].increments == std::vector<unsigned>{5});
  CHECK(table.rows[0].dim_final == 1);
  CHECK_THROWS_AS(conditions_count_sweep(std::vector<unsigned>{5}, 1, 1), error);  // guard
}

TEST_CASE("sampling: nondegeneracy, determinism, exhaustion") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState a(50), b(50);
  const ProjPoint p = sample_general_point(F, 4, 3, a, {});
  const ProjPoint q = sample_general_point(F, 4, 3, b, {});
  CHECK(p.projectively_equal(q));
  // nondegeneracy: by construction; must not throw
  require_nondegenerate(p, 3);
  // with bound 1 in P^1 every candidate has coordinates in {-1, 1}, whose
  // squares coincide, so the n = 2 degeneracy rule rejects everything
  RngState c(51);
  CHECK_THROWS_AS(sample_general_point(F, 1, 2, c, {}, 1, 20), error);
}

TEST_SUITE_END();
