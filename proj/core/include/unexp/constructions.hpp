#pragma once

#include <span>
#include <vector>

#include "unexp/fermat.hpp"
#include "unexp/poly.hpp"

namespace unexp {

struct MultiplicityClaim {
  ProjPoint point;
  unsigned claimed = 0;
  unsigned computed = 0;  // exact multiplicity found by verification
};

struct ConstructionResult {
  Poly poly;
  Configuration base;
  std::vector<MultiplicityClaim> multiplicities;
  std::size_t base_vanishing_count = 0;  // points of the base where poly vanishes
  bool verified = false;
};

// Exact order of vanishing at the point: the largest m such that every
// partial derivative of order below m vanishes there. Orders are tested
// exhaustively from zero upward.
unsigned multiplicity_at(const Poly& f, const ProjPoint& pt);

// All coordinates nonzero and all coordinate n-th powers pairwise distinct;
// raises DegeneratePoint otherwise. This is the open set on which the closed
// forms below are valid.
void require_nondegenerate(const ProjPoint& pt, unsigned n);

// Plane curve of degree n+2 through the n^2 + 3 configuration points with a
// 4-fold point at R = (a : b : c); the coefficients are
// u = C(n,2) - 1, v = C(n-1,2), w = C(n+1,2).
ConstructionResult curve_QP(unsigned n, const ProjPoint& R);

// Quartic surface in P^3 with a triple point at R, lying in the span of the
// eight degree-4 generators.
ConstructionResult quartic_QR(const ProjPoint& R);

// The same quartic with the coordinates of R kept symbolic: a polynomial in
// eight variables, x0..x3 followed by the parameters a0..a3.
Poly symbolic_quartic_QR(const FieldHandle& field);

// The two order-two derivative identities of the symbolic quartic (with
// respect to x0 twice, and to x0 and x1) against their closed forms, plus the
// closed form of the first-order x0 derivative; all as exact polynomial
// identities in x and a.
bool symbolic_qr_derivative_identities(const FieldHandle& field);

// Cone over the P^3 quartic: for 0 <= i < j <= 3 take the four remaining
// coordinates (s, t, u, v), the projected point (a_s : a_t : a_u : a_v), and
// pull the quartic back through (x_s : x_t : x_u : x_v). The result is a
// quartic in six variables independent of x_i and x_j.
Poly cone_J(unsigned i, unsigned j, const ProjPoint& R);

// The quartic 4-fold in P^5 with a triple point at R and a double point at P:
// the signed combination of the six cones with coefficients given by the
// complementary cone evaluated at P (signs -1 exactly for the index pairs
// (0,2) and (1,3)).
ConstructionResult quartic_QRP(const ProjPoint& R, const ProjPoint& P);

// Same, reusing a precomputed basis of the degree-4 system through the base
// configuration for the final span cross-check.
ConstructionResult quartic_QRP(const ProjPoint& R, const ProjPoint& P,
                               std::span<const Poly> quartic_base);

}  // namespace unexp
