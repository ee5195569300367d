#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unexp/poly.hpp"

namespace unexp {

// The n^N points (1 : e^a1 : ... : e^aN) for a primitive n-th root of unity e,
// together with the N+1 coordinate points of P^N. All points are stored with
// the first nonzero coordinate normalized to one.
struct Configuration {
  FieldHandle field;
  unsigned N = 0;
  unsigned n = 1;
  std::vector<ProjPoint> fermat_points;
  std::vector<ProjPoint> coordinate_points;

  std::size_t point_count() const { return fermat_points.size() + coordinate_points.size(); }
  const ProjPoint& point(std::size_t i) const {
    return i < fermat_points.size() ? fermat_points[i]
                                    : coordinate_points[i - fermat_points.size()];
  }

  // No points at all; the ambient dimension and root order are still carried
  // so that sampling and degree bookkeeping work uniformly.
  static Configuration empty(FieldHandle field, unsigned N, unsigned n);
};

Configuration build_configuration(unsigned N, unsigned n, FieldHandle field);

enum class GeneratorKind {
  complete_intersection,  // the N binomials x_i^n - x_{i+1}^n
  fermat_p2,              // N = 2, any n >= 3: three binomials of degree n+1
  fermat_pn,              // n = 3, N >= 2: the (N+1)(N-1) binomials x_i(x_{i+1}^3 - x_j^3)
};

struct GeneratorSet {
  GeneratorKind kind;
  unsigned N = 0;
  unsigned n = 1;
  std::vector<Poly> gens;
  // For the x_i(x_{i+1}^n - x_j^n) families: the (i, j) of each generator, in
  // canonical order (outer i = 0..N, inner j = i+2, ..., i+N modulo N+1).
  std::vector<std::pair<unsigned, unsigned>> index_pairs;
};

GeneratorSet generators(GeneratorKind kind, unsigned N, unsigned n, FieldHandle field);

// Column order used by the interpolation-matrix tables: blocks of fixed i with
// j ascending as a reduced index. A permutation into GeneratorSet::gens.
std::vector<std::size_t> table_column_order(const GeneratorSet& gens);

struct VanishingWitness {
  std::size_t generator_index;
  std::size_t point_index;
};

struct VanishingResult {
  bool ok = false;
  std::optional<VanishingWitness> witness;  // first failure when !ok
};

// Does every generator vanish at every point of the configuration?
VanishingResult verify_vanishing(const GeneratorSet& gens, const Configuration& config);

// Exact polynomial identities behind the generation argument:
//   x_i (x_j^3 - x_k^3) = x_i (x_{i+1}^3 - x_k^3) - x_i (x_{i+1}^3 - x_j^3)
// for mutually distinct i, j, k, and
//   x_0 x_i (x_0^3 - x_i^3) = x_i * x_0 (x_j^3 - x_i^3) - x_0 * x_i (x_j^3 - x_0^3)
// for i != 0 and j outside {0, i}.
bool rewrite_identity_check(unsigned N, FieldHandle field);

}  // namespace unexp
