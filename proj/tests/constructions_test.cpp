#include <doctest.h>

#include "oracle.hpp"
#include "unexp/constructions.hpp"
#include "unexp/interpolation.hpp"

using namespace unexp;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("multiplicity_at basics") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Poly f = Poly::parse(F, 4, "x0^2*x1^2");
  // on one of the double planes only
  const ProjPoint p(F, {F->zero(), F->one(), F->one(), F->one()});
  CHECK(multiplicity_at(f, p) == 2);
  // where the two double planes meet the local orders add up
  const ProjPoint pp(F, {F->zero(), F->zero(), F->one(), F->one()});
  CHECK(multiplicity_at(f, pp) == 4);
  const ProjPoint q(F, {F->one(), F->one(), F->one(), F->one()});
  CHECK(multiplicity_at(f, q) == 0);
  CHECK_THROWS_AS(multiplicity_at(Poly(F, 4), p), error);
}

TEST_CASE("nondegeneracy guard") {
  const FieldHandle F = make_field(cyclotomic(3));
  const auto pt = [&](long a, long b, long c) {
    return ProjPoint(F, {F->from_integer(a), F->from_integer(b), F->from_integer(c)});
  };
  CHECK_THROWS_AS(require_nondegenerate(pt(1, 0, 2), 3), error);
  CHECK_THROWS_AS(require_nondegenerate(pt(1, 1, 2), 3), error);  // equal cubes
  require_nondegenerate(pt(1, 2, 3), 3);
}

TEST_CASE("plane curve with a 4-fold point, n = 3") {
  const FieldHandle F = make_field(cyclotomic(3));
  const ProjPoint R(F, {F->from_integer(1), F->from_integer(2), F->from_integer(3)});
  const ConstructionResult res = curve_QP(3, R);
  CHECK(res.verified);
  CHECK(res.poly.total_degree() == 5);
  CHECK(res.base_vanishing_count == 12);
  REQUIRE(res.multiplicities.size() == 1);
  CHECK(res.multiplicities[0].computed == 4);
  // independent multiplicity oracle: order of vanishing along random lines
  RngState rng(61);
  for (int i = 0; i < 3; ++i) CHECK(oracle::line_restriction_order(res.poly, R, rng) == 4);
  // degenerate point is refused
  const ProjPoint bad(F, {F->one(), F->one(), F->one()});
  CHECK_THROWS_AS(curve_QP(3, bad), error);
}

TEST_CASE("plane curves for larger n keep degree n+2 and multiplicity 4") {
  for (unsigned n : {5u, 6u}) {
    const FieldHandle Fn = make_field(cyclotomic(n));
    RngState rng(62 + n);
    const ProjPoint R = sample_general_point(Fn, 2, n, rng, {});
    const ConstructionResult res = curve_QP(n, R);
    CHECK(res.verified);
    CHECK(res.poly.total_degree() == n + 2);
    CHECK(res.multiplicities[0].computed == 4);
    CHECK(res.base_vanishing_count == res.base.point_count());
  }
}

TEST_CASE("quartic surface with a triple point") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(63);
  const ProjPoint R = sample_general_point(F, 3, 3, rng, {});
  const ConstructionResult res = quartic_QR(R);
  CHECK(res.verified);
  CHECK(res.poly.total_degree() == 4);
  CHECK(res.base_vanishing_count == 31);
  CHECK(res.multiplicities[0].computed == 3);
  RngState orng(64);
  CHECK(oracle::line_restriction_order(res.poly, R, orng) == 3);

  // the coefficient of the first generator is -a0^2 (a1^3 - a3^3)
  const GeneratorSet gens = generators(GeneratorKind::fermat_pn, 3, 3, F);
  const Scalar a0 = R[0], a1 = R[1], a3 = R[3];
  const Scalar expected =
      F->neg(F->mul(F->mul(a0, a0), F->sub(F->pow(a1, 3), F->pow(a3, 3))));
  // isolate the coefficient via a monomial unique to g_{0,2}: x0*x2^3
  Monomial probe(std::vector<unsigned>{1, 0, 3, 0});
  const Scalar got = res.poly.coefficient(probe);
  // g_{0,2} contributes -coeff on x0*x2^3
  CHECK(F->eq(got, F->neg(expected)));
}

TEST_CASE("triple-point quartic is cyclic-shift equivariant up to sign") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(65);
  for (int i = 0; i < 3; ++i) {
    const ProjPoint R = sample_general_point(F, 3, 3, rng, {});
    const Poly q = quartic_QR(R).poly;
    // shift x_i -> x_{i+1}
    const std::vector<Poly> images{Poly::variable(F, 4, 1), Poly::variable(F, 4, 2),
                                   Poly::variable(F, 4, 3), Poly::variable(F, 4, 0)};
    const Poly shifted = q.substitute(images);
    const ProjPoint Rs(F, {R[3], R[0], R[1], R[2]});
    const Poly expected = quartic_QR(Rs).poly;
    CHECK(shifted.equals(-expected));
  }
}

TEST_CASE("symbolic derivative identities of the triple-point quartic") {
  const FieldHandle F = make_field(cyclotomic(3));
  CHECK(symbolic_qr_derivative_identities(F));
  // first-order derivative vanishes at the point itself: substitute x = a
  const Poly q = symbolic_quartic_QR(F);
  std::vector<Poly> x_to_a;
  for (unsigned i = 0; i < 4; ++i) x_to_a.push_back(Poly::variable(F, 8, 4 + i));
  for (unsigned i = 4; i < 8; ++i) x_to_a.push_back(Poly::variable(F, 8, i));
  CHECK(q.derivative(0).substitute(x_to_a).is_zero());
  CHECK(q.derivative(0).derivative(0).substitute(x_to_a).is_zero());
}

TEST_CASE("cones") {
  const FieldHandle F = make_field(cyclotomic(3));
  RngState rng(66);
  const ProjPoint R = sample_general_point(F, 5, 3, rng, {});
  const Poly j01 = cone_J(0, 1, R);
  CHECK(j01.total_degree() == 4);
  // no dependence on x0 and x1
  CHECK(j01.derivative(0).is_zero());
  CHECK(j01.derivative(1).is_zero());
  CHECK(multiplicity_at(j01, R) == 3);
  // vanishes on the whole configuration
  const Configuration w53 = build_configuration(5, 3, F);
  for (std::size_t i = 0; i < w53.point_count(); ++i)
    CHECK(F->is_zero(j01.evaluate(w53.point(i))));
  // uses exactly the remaining coordinates
  const Poly j13 = cone_J(1, 3, R);
  CHECK(j13.derivative(1).is_zero());
  CHECK(j13.derivative(3).is_zero());
  CHECK_FALSE(j13.derivative(0).is_zero());
  CHECK_THROWS_AS(cone_J(1, 1, R), error);
  CHECK_THROWS_AS(cone_J(0, 4, R), error);
}

TEST_CASE("the quartic with a triple and a double point") {
  const FieldHandle F = make_field(cyclotomic(3));
  const Configuration w53 = build_configuration(5, 3, F);
  const auto basis = vanishing_space(w53, 4);
  RngState rng(67);
  std::vector<ProjPoint> avoid;
  for (std::size_t i = 0; i < w53.point_count(); ++i) avoid.push_back(w53.point(i));
  const ProjPoint R = sample_general_point(F, 5, 3, rng, avoid);
  avoid.push_back(R);
  const ProjPoint P = sample_general_point(F, 5, 3, rng, avoid);

  const ConstructionResult res = quartic_QRP(R, P, basis);
  CHECK(res.verified);
  CHECK(res.base_vanishing_count == 249);
  CHECK(res.multiplicities[0].computed == 3);
  CHECK(res.multiplicities[1].computed == 2);

  // membership in the kernel space of the 21-row conditions matrix: appending
  // the coefficient vector of the quartic to the kernel basis does not grow
  // the rank
  const Matrix conditions = derivative_rows(basis, R, 3);
  const auto kernel = kernel_basis(conditions);
  CHECK(kernel.size() == 6);
  // coordinates of res.poly in the `basis` span: solve via the monomial
  // coefficient matrix
  std::vector<Poly> stack = basis;
  stack.push_back(res.poly);
  CHECK(rank(coefficient_matrix(stack, 4)) == basis.size());  // poly lies in the span

  // swap test: the signs are (+,-,+,+,-,+) against the cone products
  Poly rebuilt(F, 6);
  const std::array<std::pair<unsigned, unsigned>, 6> pairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const std::array<int, 6> signs{+1, -1, +1, +1, -1, +1};
  for (std::size_t t = 0; t < 6; ++t) {
    const auto [i, j] = pairs[5 - t];  // complementary pair
    Scalar coeff = cone_J(i, j, R).evaluate(P);
    if (signs[t] < 0) coeff = F->neg(coeff);
    rebuilt = rebuilt + cone_J(pairs[t].first, pairs[t].second, R).scaled(coeff);
  }
  CHECK(rebuilt.equals(res.poly));

  // rescaling R or P rescales the quartic: projectively the same hypersurface
  std::vector<Scalar> p2;
  for (std::size_t i = 0; i < P.size(); ++i) p2.push_back(F->mul(P[i], F->from_integer(3)));
  const ConstructionResult scaled = quartic_QRP(R, ProjPoint(F, std::move(p2)), basis);
  std::vector<Poly> both{res.poly, scaled.poly};
  CHECK(rank(coefficient_matrix(both, 4)) == 1);

  CHECK_THROWS_AS(quartic_QRP(R, R, basis), error);
}

TEST_SUITE_END();
