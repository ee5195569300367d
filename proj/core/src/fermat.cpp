#include "unexp/fermat.hpp"

#include <algorithm>

namespace unexp {

Configuration Configuration::empty(FieldHandle field, unsigned N, unsigned n) {
  Configuration config;
  config.field = std::move(field);
  config.N = N;
  config.n = n;
  return config;
}

Configuration build_configuration(unsigned N, unsigned n, FieldHandle field) {
  if (N == 0) raise(errc::unsupported_parameters, "projective dimension must be positive");
  if (n == 0) raise(errc::invalid_order, "root order must be positive");
  if (field->n() % n != 0)
    raise(errc::no_root_of_unity,
          "field carries no root of order " + std::to_string(n));
  const Field& F = *field;
  // zeta of order exactly n inside the field
  const Scalar zeta = F.pow(F.primitive_root(), F.n() / n);
  std::vector<Scalar> zeta_pow(n + 1, F.one());
  for (unsigned e = 1; e <= n; ++e) zeta_pow[e] = F.mul(zeta_pow[e - 1], zeta);

  Configuration config;
  config.field = field;
  config.N = N;
  config.n = n;
  config.fermat_points.reserve(1);

  // odometer over (a_1, ..., a_N), each in 1..n, last index fastest
  std::vector<unsigned> alpha(N, 1);
  while (true) {
    std::vector<Scalar> coords;
    coords.reserve(N + 1);
    coords.push_back(F.one());
    for (unsigned i = 0; i < N; ++i) coords.push_back(zeta_pow[alpha[i]]);
    config.fermat_points.emplace_back(field, std::move(coords));
    unsigned i = N;
    while (i > 0 && alpha[i - 1] == n) {
      alpha[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++alpha[i - 1];
  }

  for (unsigned i = 0; i <= N; ++i) {
    std::vector<Scalar> coords(N + 1, F.zero());
    coords[i] = F.one();
    config.coordinate_points.emplace_back(field, std::move(coords));
  }
  return config;
}

namespace {

// x_i (x_{i+1}^n - x_j^n), indices modulo N+1
Poly binomial_generator(const FieldHandle& field, unsigned N, unsigned n, unsigned i,
                        unsigned j) {
  const unsigned nvars = N + 1;
  const Poly xi = Poly::variable(field, nvars, i % nvars);
  const Poly xs = Poly::variable(field, nvars, (i + 1) % nvars);
  const Poly xj = Poly::variable(field, nvars, j % nvars);
  return xi * bracket(xs, xj, n);
}

}  // namespace

GeneratorSet generators(GeneratorKind kind, unsigned N, unsigned n, FieldHandle field) {
  GeneratorSet set;
  set.kind = kind;
  set.N = N;
  set.n = n;
  switch (kind) {
    case GeneratorKind::complete_intersection: {
      if (N == 0) raise(errc::unsupported_parameters, "need N >= 1");
      for (unsigned i = 0; i < N; ++i) {
        set.gens.push_back(bracket(Poly::variable(field, N + 1, i),
                                   Poly::variable(field, N + 1, i + 1), n));
      }
      return set;
    }
    case GeneratorKind::fermat_p2:
      if (N != 2 || n < 3)
        raise(errc::unsupported_parameters, "this family needs N = 2 and n >= 3");
      break;
    case GeneratorKind::fermat_pn:
      if (n != 3 || N < 2)
        raise(errc::unsupported_parameters, "this family needs n = 3 and N >= 2");
      break;
  }
  // Both binomial families follow the same pattern; for each i the inner index
  // j runs over i+2, ..., i+N modulo N+1 (everything except i and i+1).
  for (unsigned i = 0; i <= N; ++i) {
    for (unsigned step = 2; step <= N; ++step) {
      const unsigned j = (i + step) % (N + 1);
      set.gens.push_back(binomial_generator(field, N, n, i, j));
      set.index_pairs.emplace_back(i, j);
    }
  }
  return set;
}

std::vector<std::size_t> table_column_order(const GeneratorSet& set) {
  if (set.index_pairs.size() != set.gens.size())
    raise(errc::unsupported_parameters, "no index pairs on this generator set");
  std::vector<std::size_t> order(set.gens.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return set.index_pairs[a] < set.index_pairs[b];
  });
  return order;
}

VanishingResult verify_vanishing(const GeneratorSet& gens, const Configuration& config) {
  const Field& F = *config.field;
  VanishingResult result;
  for (std::size_t g = 0; g < gens.gens.size(); ++g) {
    for (std::size_t p = 0; p < config.point_count(); ++p) {
      if (!F.is_zero(gens.gens[g].evaluate(config.point(p)))) {
        result.witness = VanishingWitness{g, p};
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

bool rewrite_identity_check(unsigned N, FieldHandle field) {
  if (N < 3) raise(errc::unsupported_parameters, "needs N >= 3");
  const unsigned nvars = N + 1;
  const auto var = [&](unsigned i) { return Poly::variable(field, nvars, i % nvars); };
  const auto br = [&](unsigned a, unsigned b) { return bracket(var(a), var(b), 3); };

  // x_i [x_j, x_k] = x_i [x_{i+1}, x_k] - x_i [x_{i+1}, x_j]
  for (unsigned i = 0; i < nvars; ++i) {
    for (unsigned j = 0; j < nvars; ++j) {
      for (unsigned k = 0; k < nvars; ++k) {
        if (i == j || i == k || j == k) continue;
        const Poly lhs = var(i) * br(j, k);
        const Poly rhs = var(i) * br(i + 1, k) - var(i) * br(i + 1, j);
        if (!lhs.equals(rhs)) return false;
      }
    }
  }
  // x_0 x_i [x_0, x_i] = x_i * x_0 [x_j, x_i] - x_0 * x_i [x_j, x_0]
  for (unsigned i = 1; i < nvars; ++i) {
    for (unsigned j = 0; j < nvars; ++j) {
      if (j == 0 || j == i) continue;
      const Poly lhs = var(0) * var(i) * br(0, i);
      const Poly rhs = var(i) * (var(0) * br(j, i)) - var(0) * (var(i) * br(j, 0));
      if (!lhs.equals(rhs)) return false;
    }
  }
  return true;
}

}  // namespace unexp
