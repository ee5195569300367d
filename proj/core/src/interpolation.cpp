#include "unexp/interpolation.hpp"

#include <algorithm>
#include <map>

namespace unexp {

unsigned long binomial(unsigned a, unsigned b) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  if (!r.fits_ulong_p()) raise(errc::resource_guard, "binomial coefficient overflow");
  return r.get_ui();
}

unsigned long fat_point_conditions(unsigned N, unsigned m) {
  return binomial(N + m - 1, N);
}

Matrix evaluation_matrix(const FieldHandle& field, unsigned nvars,
                         std::span<const ProjPoint> points, unsigned d) {
  const Field& F = *field;
  const std::vector<Monomial> monos = monomials_of_degree(nvars, d);
  Matrix m(field, points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const ProjPoint& pt = points[r];
    if (pt.size() != nvars) raise(errc::arity_mismatch, "point arity mismatch");
    // power table per coordinate
    std::vector<std::vector<Scalar>> pows(nvars);
    for (unsigned i = 0; i < nvars; ++i) {
      pows[i].push_back(F.one());
      for (unsigned e = 1; e <= d; ++e) pows[i].push_back(F.mul(pows[i].back(), pt[i]));
    }
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Scalar v = F.one();
      for (unsigned i = 0; i < nvars; ++i) {
        if (monos[c][i]) F.mul_assign(v, pows[i][monos[c][i]]);
      }
      m.at(r, c) = std::move(v);
    }
  }
  return m;
}

namespace {

std::vector<ProjPoint> collect_points(const Configuration& config) {
  std::vector<ProjPoint> pts;
  pts.reserve(config.point_count());
  for (std::size_t i = 0; i < config.point_count(); ++i) pts.push_back(config.point(i));
  return pts;
}

}  // namespace

std::vector<Poly> vanishing_space_of_points(const FieldHandle& field, unsigned nvars,
                                            std::span<const ProjPoint> points, unsigned d) {
  const std::vector<Monomial> monos = monomials_of_degree(nvars, d);
  const Matrix m = evaluation_matrix(field, nvars, points, d);
  std::vector<Poly> basis;
  for (const std::vector<Scalar>& v : kernel_basis(m)) {
    Poly f(field, nvars);
    for (std::size_t c = 0; c < monos.size(); ++c) f.add_term(monos[c], v[c]);
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<Poly> vanishing_space(const Configuration& config, unsigned d) {
  if (d == 0) raise(errc::unsupported_parameters, "degree must be positive");
  const std::vector<ProjPoint> pts = collect_points(config);
  return vanishing_space_of_points(config.field, config.N + 1, pts, d);
}

unsigned vanishing_dimension(const Configuration& config, unsigned d) {
  if (d == 0) raise(errc::unsupported_parameters, "degree must be positive");
  const std::vector<ProjPoint> pts = collect_points(config);
  const Matrix m = evaluation_matrix(config.field, config.N + 1, pts, d);
  return static_cast<unsigned>(m.cols()) - rank(m);
}

Matrix derivative_rows(std::span<const Poly> basis, const ProjPoint& pt, unsigned multiplicity) {
  if (multiplicity == 0) raise(errc::unsupported_parameters, "multiplicity must be positive");
  if (basis.empty()) raise(errc::unsupported_parameters, "empty basis");
  const FieldHandle& field = basis.front().field();
  const std::size_t nvars = basis.front().nvars();
  unsigned d = 0;
  for (const Poly& f : basis) {
    if (f.nvars() != nvars) raise(errc::arity_mismatch, "mixed arities in basis");
    if (!f.is_homogeneous()) raise(errc::unsupported_parameters, "basis must be homogeneous");
    if (f.is_zero()) continue;
    if (d == 0) d = f.total_degree();
    if (f.total_degree() != d)
      raise(errc::unsupported_parameters, "basis degrees must agree");
  }
  if (d + 1 <= multiplicity)
    raise(errc::degree_too_low, "need degree > multiplicity - 1 for the top-order reduction");
  if (pt.size() != nvars) raise(errc::arity_mismatch, "point arity mismatch");

  const std::vector<Monomial> indices = monomials_of_degree(nvars, multiplicity - 1);
  Matrix m(field, indices.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < indices.size(); ++r) {
      Poly g = basis[c];
      for (std::size_t v = 0; v < nvars && !g.is_zero(); ++v) {
        for (unsigned e = 0; e < indices[r][v]; ++e) g = g.derivative(v);
      }
      m.at(r, c) = g.is_zero() ? field->zero() : g.evaluate(pt);
    }
  }
  return m;
}

Matrix coefficient_matrix(std::span<const Poly> polys, unsigned d) {
  if (polys.empty()) raise(errc::unsupported_parameters, "no polynomials");
  const FieldHandle& field = polys.front().field();
  const std::size_t nvars = polys.front().nvars();
  const std::vector<Monomial> monos = monomials_of_degree(nvars, d);
  std::map<Monomial, std::size_t, GrlexGreater> index;
  for (std::size_t c = 0; c < monos.size(); ++c) index.emplace(monos[c], c);
  Matrix m(field, polys.size(), monos.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [mono, coeff] : polys[r].terms()) {
      const auto it = index.find(mono);
      if (it == index.end())
        raise(errc::unsupported_parameters, "polynomial has a term outside degree d");
      m.at(r, it->second) = coeff;
    }
  }
  return m;
}

unsigned system_dimension_with_basis(std::span<const Poly> basis,
                                     std::span<const FatPoint> points) {
  if (basis.empty()) return 0;
  const FieldHandle& field = basis.front().field();
  Matrix stacked(field, 0, basis.size());
  for (const FatPoint& fp : points) {
    stacked = vstack(stacked, derivative_rows(basis, fp.point, fp.multiplicity));
  }
  return static_cast<unsigned>(basis.size()) - rank(stacked);
}

unsigned system_dimension(const FatPointScheme& scheme, unsigned d) {
  // fat points must be distinct from the base and from each other
  for (std::size_t i = 0; i < scheme.points.size(); ++i) {
    if (scheme.points[i].multiplicity == 0)
      raise(errc::unsupported_parameters, "multiplicities must be positive");
    for (std::size_t j = i + 1; j < scheme.points.size(); ++j) {
      if (scheme.points[i].point.projectively_equal(scheme.points[j].point))
        raise(errc::coincident_points, "fat points coincide");
    }
    for (std::size_t p = 0; p < scheme.base.point_count(); ++p) {
      if (scheme.points[i].point.projectively_equal(scheme.base.point(p)))
        raise(errc::coincident_points, "fat point lies in the base configuration");
    }
  }
  const std::vector<Poly> basis = vanishing_space(scheme.base, d);
  return system_dimension_with_basis(basis, scheme.points);
}

ProjPoint sample_general_point(const FieldHandle& field, unsigned N, unsigned n, RngState& rng,
                               std::span<const ProjPoint> avoid, std::uint64_t bound,
                               unsigned budget) {
  const Field& F = *field;
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    std::vector<Scalar> coords;
    coords.reserve(N + 1);
    bool zero_coord = false;
    for (unsigned i = 0; i <= N; ++i) {
      coords.push_back(F.random_scalar(rng, bound));
      if (F.is_zero(coords.back())) zero_coord = true;
    }
    if (zero_coord) continue;
    // coordinate n-th powers must be pairwise distinct
    std::vector<Scalar> powers;
    powers.reserve(N + 1);
    for (const Scalar& c : coords) powers.push_back(F.pow(c, n));
    bool degenerate = false;
    for (unsigned i = 0; i <= N && !degenerate; ++i) {
      for (unsigned j = i + 1; j <= N; ++j) {
        if (F.eq(powers[i], powers[j])) {
          degenerate = true;
          break;
        }
      }
    }
    if (degenerate) continue;
    ProjPoint pt(field, std::move(coords));
    bool collides = false;
    for (const ProjPoint& other : avoid) {
      if (pt.projectively_equal(other)) {
        collides = true;
        break;
      }
    }
    if (!collides) return pt;
  }
  raise(errc::degenerate_sampling_exhausted, "resample budget exhausted");
}

UnexpectednessReport unexpectedness_report(const Configuration& base, unsigned d,
                                           std::vector<unsigned> mults, unsigned trials,
                                           std::uint64_t seed) {
  if (trials == 0) raise(errc::unsupported_parameters, "need at least one trial");
  if (mults.empty()) raise(errc::unsupported_parameters, "need at least one fat point");
  for (unsigned m : mults) {
    if (m == 0) raise(errc::unsupported_parameters, "multiplicities must be positive");
  }
  const FieldHandle& field = base.field;
  UnexpectednessReport report;
  report.N = base.N;
  report.n = base.n;
  report.base_empty = base.point_count() == 0;
  report.degree = d;
  report.mults = mults;
  report.trials = trials;
  report.backend = field->spec();
  report.base_dim_convention =
      "base_dim is the computed dimension of the degree-d system through the base "
      "configuration; the conditions count is applied on top of it";

  const std::vector<Poly> basis = vanishing_space(base, d);
  report.base_dim = static_cast<unsigned>(basis.size());
  report.conditions_expected = 0;
  for (unsigned m : mults) report.conditions_expected += fat_point_conditions(base.N, m);
  report.virtual_dim =
      static_cast<long>(report.base_dim) - static_cast<long>(report.conditions_expected);
  report.expected_dim = report.virtual_dim > 0 ? static_cast<unsigned>(report.virtual_dim) : 0;

  const std::vector<ProjPoint> base_points = [&] {
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < base.point_count(); ++i) pts.push_back(base.point(i));
    return pts;
  }();

  bool have_result = false;
  RngState root(seed);
  for (unsigned t = 0; t < trials; ++t) {
    RngState rng = root.child(t);
    report.seeds.push_back(rng.seed());

    std::vector<ProjPoint> avoid = base_points;
    std::vector<FatPoint> points;
    for (unsigned m : mults) {
      ProjPoint pt = sample_general_point(field, base.N, base.n, rng, avoid);
      avoid.push_back(pt);
      points.push_back(FatPoint{std::move(pt), m});
    }

    unsigned dim = 0;
    std::vector<unsigned> ranks;
    if (!basis.empty()) {
      Matrix stacked(field, 0, basis.size());
      unsigned prev_rank = 0;
      for (const FatPoint& fp : points) {
        stacked = vstack(stacked, derivative_rows(basis, fp.point, fp.multiplicity));
        const unsigned r = rank(stacked);
        ranks.push_back(r - prev_rank);
        prev_rank = r;
      }
      dim = static_cast<unsigned>(basis.size()) - prev_rank;
    } else {
      ranks.assign(mults.size(), 0);
    }

    // Specialization can only inflate the dimension, so the minimum over
    // trials is the best generic estimate.
    if (!have_result || dim < report.actual_dim) {
      report.actual_dim = dim;
      report.rank_per_point = std::move(ranks);
      report.best_trial = t;
      have_result = true;
    }
  }

  if (report.actual_dim < report.expected_dim)
    raise(errc::internal, "computed dimension below the expected dimension");
  report.verdict = report.actual_dim > report.expected_dim;
  return report;
}

GenerationTable verify_generation(unsigned N, unsigned n, unsigned d_max, FieldHandle field) {
  const bool p2_case = (N == 2 && n >= 3);
  const bool pn_case = (N >= 3 && n == 3);
  if (!p2_case && !pn_case)
    raise(errc::unsupported_parameters, "supported: (N = 2, n >= 3) or (N >= 3, n = 3)");
  const unsigned gen_degree = n + 1;
  if (d_max < gen_degree)
    raise(errc::unsupported_parameters, "degree bound below the generator degree");

  const GeneratorSet gens = generators(
      p2_case ? GeneratorKind::fermat_p2 : GeneratorKind::fermat_pn, N, n, field);
  const Configuration config = build_configuration(N, n, field);
  const unsigned nvars = N + 1;

  GenerationTable table;
  table.N = N;
  table.n = n;
  table.d_max = d_max;
  table.ok = true;
  for (unsigned d = 1; d <= d_max; ++d) {
    GenerationRow row;
    row.degree = d;
    row.kernel_dim = vanishing_dimension(config, d);
    if (d >= gen_degree) {
      std::vector<Poly> products;
      for (const Poly& g : gens.gens) {
        for (const Monomial& m : monomials_of_degree(nvars, d - gen_degree)) {
          products.push_back(g * Poly::term(field, m, field->one()));
        }
      }
      row.product_span_dim = rank(coefficient_matrix(products, d));
    }
    table.ok = table.ok && (row.product_span_dim == row.kernel_dim);
    table.rows.push_back(row);
  }
  return table;
}

// ---------------------------------------------------------------------------
// symbolic interpolation matrix

namespace {

// greatest common monomial * positive rational content of a row; sign of the
// entries is kept as computed
Poly row_normalizer(const FieldHandle& field, std::span<const Poly> row) {
  bool any = false;
  Monomial gcd_mono;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const Poly& f : row) {
    for (const auto& [m, c] : f.terms()) {
      gcd_mono = any ? Monomial::gcd(gcd_mono, m) : m;
      any = true;
      if (field->kind() == FieldKind::cyclotomic_rational) {
        for (const mpq_class& q : c.cyc()) {
          if (q == 0) continue;
          mpz_class num = abs(q.get_num());
          mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
          mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
      }
    }
  }
  if (!any) return Poly(field, row.empty() ? 0 : row.front().nvars());
  mpq_class content(1);
  if (field->kind() == FieldKind::cyclotomic_rational && num_gcd != 0) {
    content = mpq_class(num_gcd) / mpq_class(den_lcm);
  }
  return Poly::term(field, gcd_mono, field->from_rational(content));
}

}  // namespace

SymbolicConditionsMatrix symbolic_interpolation_matrix(unsigned N, FieldHandle field) {
  if (N != 3 && N != 5)
    raise(errc::unsupported_parameters, "symbolic matrix is built for N = 3 or N = 5");
  const unsigned nvars = N + 1;
  const GeneratorSet gens = generators(GeneratorKind::fermat_pn, N, 3, field);
  const std::vector<std::size_t> order = table_column_order(gens);
  const std::vector<Monomial> indices = monomials_of_degree(nvars, 2);

  SymbolicConditionsMatrix out{
      PolyMatrix(field, nvars, indices.size(), gens.gens.size()), {}, order, {}};
  for (unsigned i = 0; i < nvars; ++i) out.var_names.push_back("a" + std::to_string(i));

  for (std::size_t r = 0; r < indices.size(); ++r) {
    std::vector<Poly> row;
    row.reserve(order.size());
    for (std::size_t c = 0; c < order.size(); ++c) {
      // order-2 derivative in the x-variables; evaluating at the symbolic
      // point (a_0 : ... : a_N) renames x_i to a_i, which leaves the exponent
      // data unchanged
      Poly g = gens.gens[order[c]];
      for (unsigned v = 0; v < nvars && !g.is_zero(); ++v) {
        for (unsigned e = 0; e < indices[r][v]; ++e) g = g.derivative(v);
      }
      row.push_back(std::move(g));
    }
    const Poly factor = row_normalizer(field, row);
    if (!factor.is_zero()) {
      for (Poly& f : row) f = divide_exact(f, factor);
    }
    out.row_factors.push_back(factor);
    for (std::size_t c = 0; c < row.size(); ++c) out.matrix.at(r, c) = std::move(row[c]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// conditions sweep

std::vector<FieldSpec> default_backends(unsigned N, unsigned n) {
  if (N <= 5) return {cyclotomic(n)};
  return {modular(n, default_prime(n, 0)), modular(n, default_prime(n, 1))};
}

ConditionsTable conditions_count_sweep(std::span<const unsigned> ks, unsigned trials,
                                       std::uint64_t seed, unsigned max_k) {
  if (trials == 0) raise(errc::unsupported_parameters, "need at least one trial");
  ConditionsTable table;
  table.ok = true;
  table.trials = trials;
  RngState root(seed);
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    const unsigned k = ks[ki];
    if (k < 2) raise(errc::unsupported_parameters, "needs k >= 2");
    if (k > max_k)
      raise(errc::resource_guard,
            "k = " + std::to_string(k) + " exceeds the configured bound " + std::to_string(max_k));
    const unsigned N = 2 * k + 1;
    const auto backends = default_backends(N, 3);
    ConditionsRow row;
    row.k = k;
    row.N = N;
    bool first_backend = true;
    bool row_ok = true;
    for (std::size_t bi = 0; bi < backends.size(); ++bi) {
      const FieldHandle field = make_field(backends[bi]);
      if (std::find(table.backends_used.begin(), table.backends_used.end(), backends[bi]) ==
          table.backends_used.end())
        table.backends_used.push_back(backends[bi]);
      const Configuration config = build_configuration(N, 3, field);
      const std::vector<Poly> basis = vanishing_space(config, 4);
      const std::vector<ProjPoint> base_points = [&] {
        std::vector<ProjPoint> pts;
        for (std::size_t i = 0; i < config.point_count(); ++i) pts.push_back(config.point(i));
        return pts;
      }();
      for (unsigned t = 0; t < trials; ++t) {
        RngState rng = root.child((ki * 97 + bi) * 1009 + t);
        if (bi == 0) table.seeds.push_back(rng.seed());

        std::vector<ProjPoint> avoid = base_points;
        const ProjPoint R = sample_general_point(field, N, 3, rng, avoid);
        avoid.push_back(R);
        Matrix stacked = derivative_rows(basis, R, 3);
        unsigned prev_rank = rank(stacked);
        const unsigned dim_v = static_cast<unsigned>(basis.size()) - prev_rank;

        std::vector<unsigned> increments;
        for (unsigned pi = 0; pi + 1 < k; ++pi) {
          const ProjPoint P = sample_general_point(field, N, 3, rng, avoid);
          avoid.push_back(P);
          stacked = vstack(stacked, derivative_rows(basis, P, 2));
          const unsigned r = rank(stacked);
          increments.push_back(r - prev_rank);
          prev_rank = r;
        }
        const unsigned dim_final = static_cast<unsigned>(basis.size()) - prev_rank;

        bool trial_ok = dim_v == binomial(N - 1, 2);
        unsigned total = 0;
        for (std::size_t pi = 0; pi < increments.size(); ++pi) {
          total += increments[pi];
          const unsigned expected = (pi + 2 < k) ? 2 * k + 2 : k + 3;
          trial_ok = trial_ok && increments[pi] == expected;
        }
        trial_ok = trial_ok && total == 2 * k * k - k - 1;
        row_ok = row_ok && trial_ok;

        if (first_backend && t == 0) {
          row.dim_v = dim_v;
          row.increments = increments;
          row.dim_final = dim_final;
        } else {
          // backends and trials must tell the same story
          row_ok = row_ok && dim_v == row.dim_v && increments == row.increments &&
                   dim_final == row.dim_final;
        }
      }
      first_backend = false;
    }
    row.ok = row_ok;
    table.ok = table.ok && row_ok;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace unexp
