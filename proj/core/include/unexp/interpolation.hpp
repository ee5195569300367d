#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unexp/fermat.hpp"
#include "unexp/linalg.hpp"

namespace unexp {

struct FatPoint {
  ProjPoint point;
  unsigned multiplicity = 1;
};

// A base configuration (possibly empty) plus general fat points.
struct FatPointScheme {
  Configuration base;
  std::vector<FatPoint> points;
};

unsigned long binomial(unsigned a, unsigned b);

// Conditions an m-fold point in P^N imposes on forms of degree >= m:
// C(N+m-1, N), the number of order-(m-1) derivative multi-indices.
unsigned long fat_point_conditions(unsigned N, unsigned m);

// Rows = points, columns = degree-d monomials in canonical (grlex) order.
Matrix evaluation_matrix(const FieldHandle& field, unsigned nvars,
                         std::span<const ProjPoint> points, unsigned d);

// Basis of the degree-d graded piece of the vanishing ideal, computed as the
// kernel of the evaluation matrix; basis vectors become polynomials in
// canonical monomial order.
std::vector<Poly> vanishing_space_of_points(const FieldHandle& field, unsigned nvars,
                                            std::span<const ProjPoint> points, unsigned d);
std::vector<Poly> vanishing_space(const Configuration& config, unsigned d);

// Dimension only (skips extracting a kernel basis).
unsigned vanishing_dimension(const Configuration& config, unsigned d);

// Conditions matrix of an m-fold point against a basis of forms: one row per
// order-(m-1) partial-derivative multi-index in grlex order, one column per
// basis element; entry = that derivative of that element at the point. Only
// top-order partials appear: for homogeneous forms of degree > m-1 the Euler
// identity makes all lower orders redundant.
Matrix derivative_rows(std::span<const Poly> basis, const ProjPoint& pt, unsigned multiplicity);

// Coefficient matrix of degree-d forms: rows = polys, cols = monomials.
Matrix coefficient_matrix(std::span<const Poly> polys, unsigned d);

unsigned system_dimension(const FatPointScheme& scheme, unsigned d);
unsigned system_dimension_with_basis(std::span<const Poly> basis,
                                     std::span<const FatPoint> points);

// Random point with all coordinates nonzero, pairwise distinct coordinate
// n-th powers, and not projectively equal to anything in `avoid`. Resamples
// up to `budget` times.
ProjPoint sample_general_point(const FieldHandle& field, unsigned N, unsigned n, RngState& rng,
                               std::span<const ProjPoint> avoid, std::uint64_t bound = 100,
                               unsigned budget = 100);

struct UnexpectednessReport {
  unsigned N = 0;
  unsigned n = 1;
  bool base_empty = false;
  unsigned degree = 0;
  std::vector<unsigned> mults;
  unsigned base_dim = 0;
  unsigned long conditions_expected = 0;
  long virtual_dim = 0;    // base_dim - conditions_expected, may be negative
  unsigned expected_dim = 0;  // max(virtual_dim, 0)
  unsigned actual_dim = 0;    // minimum over trials (specialization only inflates)
  std::vector<unsigned> rank_per_point;  // incremental conditions, minimal trial
  bool verdict = false;                  // actual_dim > expected_dim
  unsigned trials = 0;
  unsigned best_trial = 0;  // index of the trial the report quotes
  std::vector<std::uint64_t> seeds;
  FieldSpec backend;
  // The base dimension is the computed dimension of the base system, which
  // need not equal a naive count when the base itself fails to impose
  // independent conditions; the report states the convention it used.
  std::string base_dim_convention;
};

// Samples `trials` independent tuples of general fat points on top of the
// base and decides unexpectedness per the dimension-count definition. The
// verdict is one-sided rigorous: a single witness with actual > expected
// already proves unexpectedness, while the generic-dimension estimate itself
// is probabilistic.
UnexpectednessReport unexpectedness_report(const Configuration& base, unsigned d,
                                           std::vector<unsigned> mults, unsigned trials,
                                           std::uint64_t seed);

struct GenerationRow {
  unsigned degree = 0;
  unsigned product_span_dim = 0;  // span of monomial multiples of the generators
  unsigned kernel_dim = 0;        // evaluation kernel of the configuration
};

struct GenerationTable {
  unsigned N = 0, n = 1, d_max = 0;
  std::vector<GenerationRow> rows;
  bool ok = false;  // the two dimensions agree in every degree
};

// Degree-by-degree check that the binomial generators generate the vanishing
// ideal up to degree d_max.
GenerationTable verify_generation(unsigned N, unsigned n, unsigned d_max, FieldHandle field);

struct SymbolicConditionsMatrix {
  PolyMatrix matrix;               // entries: polynomials in a_0..a_N
  std::vector<Poly> row_factors;   // divided-out content * monomial per row
  std::vector<std::size_t> column_order;  // generator index per column
  std::vector<std::string> var_names;     // a0..aN, for printing
};

// Order-2 conditions matrix of the degree-4 generator family at the symbolic
// point (a_0 : ... : a_N), rows normalized by their content and common
// monomial factor. N = 3 or 5. Columns follow table_column_order.
SymbolicConditionsMatrix symbolic_interpolation_matrix(unsigned N, FieldHandle field);

struct ConditionsRow {
  unsigned k = 0;
  unsigned N = 0;
  unsigned dim_v = 0;                 // after the triple point; expect C(N-1, 2)
  std::vector<unsigned> increments;   // conditions imposed by each double point
  unsigned dim_final = 0;
  bool ok = false;
};

struct ConditionsTable {
  std::vector<ConditionsRow> rows;
  bool ok = false;
  unsigned trials = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<FieldSpec> backends_used;
};

// For each k: dimension after a general triple point, then the incremental
// conditions of k-1 general double points, checked against C(N-1,2), k-2
// increments of 2k+2, a final increment of k+3, and the 2k^2-k-1 total.
ConditionsTable conditions_count_sweep(std::span<const unsigned> ks, unsigned trials,
                                       std::uint64_t seed, unsigned max_k = 3);

// Backend policy: exact cyclotomic rationals up to P^5, two independent
// large primes (cross-checked) beyond.
std::vector<FieldSpec> default_backends(unsigned N, unsigned n);

}  // namespace unexp
