#include "unexp/constructions.hpp"

#include <array>

#include "unexp/interpolation.hpp"

namespace unexp {

unsigned multiplicity_at(const Poly& f, const ProjPoint& pt) {
  if (f.is_zero()) raise(errc::zero_polynomial, "multiplicity of the zero polynomial");
  if (pt.size() != f.nvars()) raise(errc::arity_mismatch, "point arity mismatch");
  const Field& F = *f.field();
  const unsigned d = f.total_degree();
  for (unsigned order = 0; order <= d; ++order) {
    for (const Monomial& idx : monomials_of_degree(f.nvars(), order)) {
      Poly g = f;
      for (std::size_t v = 0; v < f.nvars() && !g.is_zero(); ++v) {
        for (unsigned e = 0; e < idx[v]; ++e) g = g.derivative(v);
      }
      if (!g.is_zero() && !F.is_zero(g.evaluate(pt))) return order;
    }
  }
  // all partials through the top degree vanish only for the zero polynomial
  raise(errc::internal, "no nonvanishing derivative found");
}

void require_nondegenerate(const ProjPoint& pt, unsigned n) {
  const Field& F = *pt.field();
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (F.is_zero(pt[i])) raise(errc::degenerate_point, "zero coordinate");
  }
  for (std::size_t i = 0; i < pt.size(); ++i) {
    for (std::size_t j = i + 1; j < pt.size(); ++j) {
      if (F.eq(F.pow(pt[i], n), F.pow(pt[j], n)))
        raise(errc::degenerate_point, "coordinates share an n-th power");
    }
  }
}

namespace {

std::size_t count_base_vanishings(const Poly& f, const Configuration& config) {
  const Field& F = *config.field;
  std::size_t count = 0;
  for (std::size_t i = 0; i < config.point_count(); ++i) {
    if (F.is_zero(f.evaluate(config.point(i)))) ++count;
  }
  return count;
}

}  // namespace

ConstructionResult curve_QP(unsigned n, const ProjPoint& R) {
  if (n < 3) raise(errc::unsupported_parameters, "needs n >= 3");
  if (R.size() != 3) raise(errc::arity_mismatch, "the point must live in P^2");
  require_nondegenerate(R, n);
  const FieldHandle& field = R.field();
  const Field& F = *field;

  const Scalar u = F.from_integer(static_cast<long>(binomial(n, 2) - 1));
  const Scalar v = F.from_integer(static_cast<long>(binomial(n - 1, 2)));
  const Scalar w = F.from_integer(static_cast<long>(binomial(n + 1, 2)));
  const Scalar a = R[0], b = R[1], c = R[2];
  const Scalar an = F.pow(a, n), bn = F.pow(b, n), cn = F.pow(c, n);

  const Poly X = Poly::variable(field, 3, 0);
  const Poly Y = Poly::variable(field, 3, 1);
  const Poly Z = Poly::variable(field, 3, 2);
  const Poly ZX = bracket(Z, X, n);  // z^n - x^n
  const Poly YZ = bracket(Y, Z, n);
  const Poly XY = bracket(X, Y, n);

  const auto lin = [&](const Scalar& p, const Scalar& q) {  // u*p + v*q
    return F.add(F.mul(u, p), F.mul(v, q));
  };

  // transcribed term for term; a transcription slip surfaces as a failed
  // multiplicity check rather than silent divergence
  Poly Q = (X * Y * (ZX.scaled(lin(bn, cn)) + YZ.scaled(lin(an, cn)))).scaled(F.neg(c));
  Q = Q + (X * Z * (YZ.scaled(lin(an, bn)) + XY.scaled(lin(cn, bn)))).scaled(F.neg(b));
  Q = Q + (Y * Z * (ZX.scaled(lin(bn, an)) + XY.scaled(lin(cn, an)))).scaled(F.neg(a));
  Q = Q + (X * X * YZ).scaled(F.mul(F.mul(w, F.pow(a, n - 1)), F.mul(b, c)));
  Q = Q + (Y * Y * ZX).scaled(F.mul(F.mul(w, F.pow(b, n - 1)), F.mul(a, c)));
  Q = Q + (Z * Z * XY).scaled(F.mul(F.mul(w, F.pow(c, n - 1)), F.mul(a, b)));

  ConstructionResult result;
  result.poly = Q;
  result.base = build_configuration(2, n, field);
  const unsigned mult = Q.is_zero() ? 0 : multiplicity_at(Q, R);
  result.multiplicities.push_back(MultiplicityClaim{R, 4, mult});
  result.base_vanishing_count = count_base_vanishings(Q, result.base);
  result.verified = !Q.is_zero() && mult >= 4 &&
                    result.base_vanishing_count == result.base.point_count();
  return result;
}

namespace {

// coefficient of g_{i,j} in the triple-point quartic: (-1)^k a_i^2
// (a_{i+1}^3 - a_k^3) with k the index outside {i, i+1, j}, all modulo 4
unsigned complement_index(unsigned i, unsigned j) {
  const unsigned i1 = (i + 1) % 4;
  for (unsigned k = 0; k < 4; ++k) {
    if (k != i % 4 && k != i1 && k != j % 4) return k;
  }
  raise(errc::internal, "no complementary index");
}

Poly quartic_qr_poly(const ProjPoint& R) {
  const FieldHandle& field = R.field();
  const Field& F = *field;
  const GeneratorSet gens = generators(GeneratorKind::fermat_pn, 3, 3, field);
  Poly Q(field, 4);
  for (std::size_t t = 0; t < gens.gens.size(); ++t) {
    const auto [i, j] = gens.index_pairs[t];
    const unsigned k = complement_index(i, j);
    Scalar coeff = F.mul(F.pow(R[i], 2), F.sub(F.pow(R[(i + 1) % 4], 3), F.pow(R[k], 3)));
    if (k % 2 == 1) coeff = F.neg(coeff);
    Q = Q + gens.gens[t].scaled(coeff);
  }
  return Q;
}

}  // namespace

ConstructionResult quartic_QR(const ProjPoint& R) {
  if (R.size() != 4) raise(errc::arity_mismatch, "the point must live in P^3");
  require_nondegenerate(R, 3);
  ConstructionResult result;
  result.poly = quartic_qr_poly(R);
  result.base = build_configuration(3, 3, R.field());
  const unsigned mult = result.poly.is_zero() ? 0 : multiplicity_at(result.poly, R);
  result.multiplicities.push_back(MultiplicityClaim{R, 3, mult});
  result.base_vanishing_count = count_base_vanishings(result.poly, result.base);
  result.verified = !result.poly.is_zero() && mult >= 3 &&
                    result.base_vanishing_count == result.base.point_count();
  return result;
}

Poly symbolic_quartic_QR(const FieldHandle& field) {
  // ring Q[x0..x3, a0..a3]: x at indices 0..3, parameters at 4..7
  const auto X = [&](unsigned m) { return Poly::variable(field, 8, m % 4); };
  const auto A = [&](unsigned m) { return Poly::variable(field, 8, 4 + m % 4); };
  Poly Q(field, 8);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned step = 2; step <= 3; ++step) {
      const unsigned j = (i + step) % 4;
      const unsigned k = complement_index(i, j);
      const Poly gen = X(i) * bracket(X(i + 1), X(j), 3);
      Poly coeff = A(i) * A(i) * bracket(A(i + 1), A(k), 3);
      if (k % 2 == 1) coeff = -coeff;
      Q = Q + coeff * gen;
    }
  }
  return Q;
}

bool symbolic_qr_derivative_identities(const FieldHandle& field) {
  const Poly Q = symbolic_quartic_QR(field);
  const auto X = [&](unsigned m) { return Poly::variable(field, 8, m % 4); };
  const auto A = [&](unsigned m) { return Poly::variable(field, 8, 4 + m % 4); };
  const auto br = [&](const Poly& f, const Poly& g) { return bracket(f, g, 3); };
  const Poly three = Poly::constant(field, 8, field->from_integer(3));
  const Poly six = Poly::constant(field, 8, field->from_integer(6));

  // d/dx0: ([a1,a2][x1,x3] - [a1,a3][x1,x2]) a0^2
  //        + 3 x0^2 (a1^2 x1 [a2,a3] + a2^2 x2 [a3,a1] + a3^2 x3 [a1,a2])
  {
    const Poly lhs = Q.derivative(0);
    const Poly rhs =
        (br(A(1), A(2)) * br(X(1), X(3)) - br(A(1), A(3)) * br(X(1), X(2))) * A(0) * A(0) +
        three * X(0) * X(0) *
            (A(1) * A(1) * X(1) * br(A(2), A(3)) + A(2) * A(2) * X(2) * br(A(3), A(1)) +
             A(3) * A(3) * X(3) * br(A(1), A(2)));
    if (!lhs.equals(rhs)) return false;
  }
  // d^2/dx0^2: -6 x0 * sum_{k=1..3} (-1)^k a_j^2 a_l^2 (a_l x_j - a_j x_l),
  // j < l and {j,k,l} = {1,2,3}
  {
    const Poly lhs = Q.derivative(0).derivative(0);
    Poly sum(field, 8);
    for (unsigned k = 1; k <= 3; ++k) {
      unsigned j = 0, l = 0;
      for (unsigned m = 1; m <= 3; ++m) {
        if (m == k) continue;
        if (j == 0)
          j = m;
        else
          l = m;
      }
      Poly term = A(j) * A(j) * A(l) * A(l) * (A(l) * X(j) - A(j) * X(l));
      if (k % 2 == 1) term = -term;
      sum = sum + term;
    }
    const Poly rhs = -(six * X(0) * sum);
    if (!lhs.equals(rhs)) return false;
  }
  // d^2/dx1 dx0: 3 [a2,a3] (a1^2 x0^2 - a0^2 x1^2)
  {
    const Poly lhs = Q.derivative(0).derivative(1);
    const Poly rhs = three * br(A(2), A(3)) * (A(1) * A(1) * X(0) * X(0) - A(0) * A(0) * X(1) * X(1));
    if (!lhs.equals(rhs)) return false;
  }
  return true;
}

Poly cone_J(unsigned i, unsigned j, const ProjPoint& R) {
  if (!(i < j && j <= 3)) raise(errc::index_out_of_range, "cone indices need 0 <= i < j <= 3");
  if (R.size() != 6) raise(errc::arity_mismatch, "the point must live in P^5");
  require_nondegenerate(R, 3);
  const FieldHandle& field = R.field();
  // the four remaining coordinates, ascending
  std::array<unsigned, 4> rest{};
  std::size_t t = 0;
  for (unsigned m = 0; m < 6; ++m) {
    if (m != i && m != j) rest[t++] = m;
  }
  std::vector<Scalar> coords;
  for (unsigned m : rest) coords.push_back(R[m]);
  const Poly q = quartic_qr_poly(ProjPoint(field, std::move(coords)));
  // pull back through (x_s : x_t : x_u : x_v)
  std::vector<Poly> images;
  for (unsigned m : rest) images.push_back(Poly::variable(field, 6, m));
  return q.substitute(images);
}

ConstructionResult quartic_QRP(const ProjPoint& R, const ProjPoint& P) {
  return quartic_QRP(R, P, std::span<const Poly>{});
}

ConstructionResult quartic_QRP(const ProjPoint& R, const ProjPoint& P,
                               std::span<const Poly> quartic_base) {
  if (R.size() != 6 || P.size() != 6) raise(errc::arity_mismatch, "points must live in P^5");
  require_nondegenerate(R, 3);
  require_nondegenerate(P, 3);
  if (R.projectively_equal(P)) raise(errc::coincident_points, "the two points coincide");
  const FieldHandle& field = R.field();
  const Field& F = *field;

  constexpr std::array<std::pair<unsigned, unsigned>, 6> pairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const auto complement = [&](std::size_t t) { return pairs.size() - 1 - t; };

  std::array<Poly, 6> cones;
  for (std::size_t t = 0; t < pairs.size(); ++t)
    cones[t] = cone_J(pairs[t].first, pairs[t].second, R);

  Poly Q(field, 6);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    Scalar coeff = cones[complement(t)].evaluate(P);
    // minus exactly when the indices are not consecutive
    if (pairs[t] == std::pair<unsigned, unsigned>{0, 2} ||
        pairs[t] == std::pair<unsigned, unsigned>{1, 3})
      coeff = F.neg(coeff);
    Q = Q + cones[t].scaled(coeff);
  }

  ConstructionResult result;
  result.poly = Q;
  result.base = build_configuration(5, 3, field);
  const unsigned mult_r = Q.is_zero() ? 0 : multiplicity_at(Q, R);
  const unsigned mult_p = Q.is_zero() ? 0 : multiplicity_at(Q, P);
  result.multiplicities.push_back(MultiplicityClaim{R, 3, mult_r});
  result.multiplicities.push_back(MultiplicityClaim{P, 2, mult_p});
  result.base_vanishing_count = count_base_vanishings(Q, result.base);

  // cross-check: the system with these fat points is one-dimensional, so the
  // verified quartic spans it
  std::vector<Poly> basis_storage;
  std::span<const Poly> basis = quartic_base;
  if (basis.empty()) {
    basis_storage = vanishing_space(result.base, 4);
    basis = basis_storage;
  }
  const std::vector<FatPoint> fat{{R, 3}, {P, 2}};
  const unsigned sys_dim = system_dimension_with_basis(basis, fat);

  result.verified = !Q.is_zero() && mult_r >= 3 && mult_p >= 2 &&
                    result.base_vanishing_count == result.base.point_count() && sys_dim == 1;
  return result;
}

}  // namespace unexp
