// Command-line front end: configuration generation, identity verification,
// closed-form constructions, and unexpectedness reports, all reproducible
// from a seed and emitting machine-readable JSON on demand.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "unexp/constructions.hpp"
#include "unexp/interpolation.hpp"
#include "unexp/reference_tables.hpp"
#include "unexp/serialize.hpp"
#include "unexp/version.hpp"

using nlohmann::json;
using namespace unexp;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

struct CommonOpts {
  std::string format = "text";
  std::string backend;  // "", "auto", "cyclotomic", "modular", "modular:<p>"
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool force = false;
  std::string dump_matrix;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_seed = true) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--backend", opts.backend,
                  "coefficient field: auto, cyclotomic, modular, modular:<p> "
                  "(default from UNEXP_BACKEND or auto)");
  if (with_seed) cmd->add_flag("--force", opts.force, "override the resource guards");
  if (with_seed) {
    cmd->add_option("--seed", opts.seed, "random seed (default: drawn and printed)")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
  }
  cmd->add_option("--dump-matrix", opts.dump_matrix, "write the relevant matrix as CSV");
}

std::uint64_t ensure_seed(CommonOpts& opts) {
  if (!opts.seed_given) {
    opts.seed = std::random_device{}();
    opts.seed_given = true;
  }
  return opts.seed;
}

void check_resource_guard(unsigned N, unsigned n, bool force) {
  if (force) return;
  if (N > 9) raise(errc::resource_guard, "N > 9 (use --force to override)");
  double count = 1;
  for (unsigned i = 0; i < N; ++i) count *= n;
  if (count > 100000)
    raise(errc::resource_guard, "n^N exceeds 100000 (use --force to override)");
}

// first entry of the backend policy, or the explicit choice
FieldSpec resolve_backend(const std::string& flag, unsigned N, unsigned n) {
  std::string choice = flag;
  if (choice.empty()) {
    if (const char* env = std::getenv("UNEXP_BACKEND")) choice = env;
  }
  if (choice.empty() || choice == "auto") return default_backends(N, n).front();
  if (choice == "cyclotomic") return cyclotomic(n);
  if (choice == "modular") return modular(n, default_prime(n));
  if (choice.rfind("modular:", 0) == 0) {
    return modular(n, std::stoull(choice.substr(8)));
  }
  raise(errc::unsupported_parameters, "unknown backend: " + choice);
}

json make_manifest(const std::string& command, const json& parameters,
                   std::optional<std::uint64_t> seed, const FieldSpec& backend) {
  json m;
  m["command"] = command;
  m["parameters"] = parameters;
  if (seed) m["seed"] = *seed;
  m["backend"] = to_json(backend);
  m["artifact_version"] = artifact_version;
  m["schema_version"] = schema_version;
  m["timestamp"] = iso_timestamp();
  return m;
}

struct Output {
  std::ostringstream text;
  json body;  // includes "manifest" and "result"
  int exit_code = kExitPass;

  void emit(const std::string& format) const {
    if (format == "json") {
      std::cout << body.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

ProjPoint parse_point(const FieldHandle& field, const std::string& text) {
  std::vector<Scalar> coords;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) coords.push_back(field->parse(cell));
  return ProjPoint(field, std::move(coords));
}

json point_json(const ProjPoint& pt) {
  json out = json::array();
  for (std::size_t i = 0; i < pt.size(); ++i) out.push_back(pt.field()->to_string(pt[i]));
  return out;
}

void dump_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream os(path);
  if (!os) raise(errc::unsupported_parameters, "cannot open " + path);
  write_csv(os, m);
}

// ---------------------------------------------------------------------------
// points

int cmd_points(unsigned N, unsigned n, CommonOpts& opts) {
  check_resource_guard(N, n, opts.force);
  const FieldSpec spec = resolve_backend(opts.backend, N, n);
  const Configuration config = build_configuration(N, n, make_field(spec));

  Output out;
  out.body["manifest"] =
      make_manifest("points", {{"N", N}, {"n", n}}, std::nullopt, spec);
  out.body["result"] = to_json(config);

  out.text << "configuration W_{" << N << "," << n << "}: " << config.point_count()
           << " points (" << config.fermat_points.size() << " Fermat + "
           << config.coordinate_points.size() << " coordinate)\n";
  for (std::size_t i = 0; i < config.point_count(); ++i)
    out.text << "  " << config.point(i).to_string() << "\n";
  out.emit(opts.format);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& target, unsigned N, unsigned n, unsigned max_degree,
               std::vector<unsigned> ks, unsigned trials, CommonOpts& opts) {
  Output out;
  json params{{"target", target}, {"N", N}, {"n", n}};
  bool pass = true;
  json result;
  FieldSpec spec = resolve_backend(opts.backend, N, n);

  if (target == "generation") {
    check_resource_guard(N, n, opts.force);
    params["max_degree"] = max_degree;
    const GenerationTable table = verify_generation(N, n, max_degree, make_field(spec));
    result = to_json(table);
    pass = table.ok;
    out.text << "generation check N=" << N << " n=" << n << " up to degree " << max_degree
             << ":\n";
    for (const GenerationRow& row : table.rows)
      out.text << "  degree " << row.degree << ": span " << row.product_span_dim
               << ", kernel " << row.kernel_dim
               << (row.product_span_dim == row.kernel_dim ? "" : "  <-- mismatch") << "\n";
  } else if (target == "vanishing") {
    check_resource_guard(N, n, opts.force);
    const FieldHandle field = make_field(spec);
    const Configuration config = build_configuration(N, n, field);
    const GeneratorSet gens = generators(
        N == 2 ? GeneratorKind::fermat_p2 : GeneratorKind::fermat_pn, N, n, field);
    const VanishingResult v = verify_vanishing(gens, config);
    pass = v.ok;
    result["ok"] = v.ok;
    result["generators"] = gens.gens.size();
    result["points"] = config.point_count();
    if (!v.ok) {
      result["witness"] = {{"generator", v.witness->generator_index},
                           {"point", v.witness->point_index}};
    }
    out.text << "vanishing check: " << gens.gens.size() << " generators on "
             << config.point_count() << " points: " << (v.ok ? "pass" : "FAIL") << "\n";
  } else if (target == "identities") {
    const FieldHandle field = make_field(spec);
    const bool rewrite_ok = N >= 3 ? rewrite_identity_check(N, field) : true;
    result["rewrite_identities"] = rewrite_ok;
    pass = rewrite_ok;
    if (N == 3) {
      const bool deriv_ok = symbolic_qr_derivative_identities(field);
      result["derivative_identities"] = deriv_ok;
      pass = pass && deriv_ok;
    }
    // cubic-bracket cyclic identity on a deterministic random sample
    RngState rng(opts.seed_given ? opts.seed : 12345);
    bool jacobi_ok = true;
    for (int i = 0; i < 200 && jacobi_ok; ++i) {
      const Poly a = Poly::constant(field, 2, field->random_scalar(rng, 20)) +
                     Poly::variable(field, 2, 0).scaled(field->random_scalar(rng, 20));
      const Poly b = Poly::constant(field, 2, field->random_scalar(rng, 20)) +
                     Poly::variable(field, 2, 1).scaled(field->random_scalar(rng, 20));
      const Poly c = Poly::variable(field, 2, 0).scaled(field->random_scalar(rng, 20)) +
                     Poly::variable(field, 2, 1).scaled(field->random_scalar(rng, 20));
      jacobi_ok = (a.pow(3) * bracket(b, c, 3) + b.pow(3) * bracket(c, a, 3) +
                   c.pow(3) * bracket(a, b, 3))
                      .is_zero();
    }
    result["cyclic_bracket_identity"] = jacobi_ok;
    pass = pass && jacobi_ok;
    out.text << "identities N=" << N << ": " << (pass ? "pass" : "FAIL") << "\n";
  } else if (target == "tables") {
    const FieldHandle field = make_field(spec);
    const SymbolicConditionsMatrix sym = symbolic_interpolation_matrix(N, field);
    const PolyMatrix expected = reference_interpolation_matrix(N, field);
    const bool match = rows_proportional(sym.matrix, expected);
    result["rows"] = sym.matrix.rows();
    result["cols"] = sym.matrix.cols();
    result["matches_reference"] = match;
    pass = match;
    if (N == 3) {
      const auto rk = symbolic_rank(sym.matrix);
      result["symbolic_rank"] = rk.rank;
      pass = pass && rk.rank == 7;
    }
    if (!opts.dump_matrix.empty()) {
      std::ofstream os(opts.dump_matrix);
      if (!os) raise(errc::unsupported_parameters, "cannot open " + opts.dump_matrix);
      write_csv(os, sym.matrix, sym.var_names);
    }
    out.text << "symbolic conditions matrix N=" << N << " (" << sym.matrix.rows() << "x"
             << sym.matrix.cols() << "): " << (match ? "matches reference" : "DIFFERS")
             << "\n";
  } else if (target == "propositions") {
    const std::uint64_t seed = ensure_seed(opts);
    params["k"] = ks;
    params["trials"] = trials;
    const ConditionsTable table =
        conditions_count_sweep(ks, trials, seed, opts.force ? 4 : 3);
    result = to_json(table);
    pass = table.ok;
    for (const ConditionsRow& row : table.rows) {
      out.text << "k=" << row.k << " (N=" << row.N << "): dim after triple point "
               << row.dim_v << ", double-point increments [";
      for (std::size_t i = 0; i < row.increments.size(); ++i)
        out.text << (i ? ", " : "") << row.increments[i];
      out.text << "], final dim " << row.dim_final << " -> "
               << (row.ok ? "pass" : "FAIL") << "\n";
    }
  } else {
    raise(errc::unsupported_parameters, "unknown verify target: " + target);
  }

  out.body["manifest"] = make_manifest(
      "verify", params, opts.seed_given ? std::optional(opts.seed) : std::nullopt, spec);
  out.body["result"] = result;
  out.body["result"]["pass"] = pass;
  out.exit_code = pass ? kExitPass : kExitCheckFailed;
  // a failing check always leaves a machine-readable witness behind
  if (!pass && opts.format == "text") out.text << out.body["result"].dump() << "\n";
  out.emit(opts.format);
  return out.exit_code;
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const std::string& kind, unsigned n, std::vector<std::string> point_args,
                  bool random_points, unsigned cone_i, unsigned cone_j, CommonOpts& opts) {
  const unsigned ambient = (kind == "qp") ? 2 : (kind == "qr") ? 3 : 5;
  const unsigned order = (kind == "qp") ? n : 3;
  const FieldSpec spec = resolve_backend(opts.backend, ambient, order);
  const FieldHandle field = make_field(spec);

  const unsigned needed = (kind == "qrp") ? 2 : 1;
  std::vector<ProjPoint> pts;
  std::optional<std::uint64_t> used_seed;
  if (random_points) {
    const std::uint64_t seed = ensure_seed(opts);
    used_seed = seed;
    RngState rng(seed);
    for (unsigned i = 0; i < needed; ++i) {
      pts.push_back(sample_general_point(field, ambient, order, rng, pts));
    }
  } else {
    if (point_args.size() != needed)
      raise(errc::unsupported_parameters,
            kind + " needs " + std::to_string(needed) + " --point argument(s) or --random");
    for (const std::string& text : point_args) pts.push_back(parse_point(field, text));
  }

  ConstructionResult res;
  json params{{"kind", kind}};
  if (kind == "qp") {
    params["n"] = n;
    res = curve_QP(n, pts[0]);
  } else if (kind == "qr") {
    res = quartic_QR(pts[0]);
  } else if (kind == "qrp") {
    res = quartic_QRP(pts[0], pts[1]);
  } else if (kind == "cone") {
    params["i"] = cone_i;
    params["j"] = cone_j;
    const Poly cone = cone_J(cone_i, cone_j, pts[0]);
    res.poly = cone;
    res.base = build_configuration(5, 3, field);
    res.multiplicities.push_back(MultiplicityClaim{pts[0], 3, multiplicity_at(cone, pts[0])});
    std::size_t vanish = 0;
    for (std::size_t i = 0; i < res.base.point_count(); ++i)
      if (field->is_zero(cone.evaluate(res.base.point(i)))) ++vanish;
    res.base_vanishing_count = vanish;
    res.verified = res.multiplicities[0].computed >= 3 && vanish == res.base.point_count();
  } else {
    raise(errc::unsupported_parameters, "unknown construction: " + kind);
  }

  json jpoints = json::array();
  for (const ProjPoint& p : pts) jpoints.push_back(point_json(p));
  params["points"] = jpoints;

  Output out;
  out.body["manifest"] = make_manifest("construct", params, used_seed, spec);
  out.body["result"] = to_json(res);

  out.text << res.poly.to_string() << "\n";
  out.text << "base vanishing: " << res.base_vanishing_count << "/" << res.base.point_count()
           << "\n";
  for (const MultiplicityClaim& claim : res.multiplicities) {
    out.text << "multiplicity at " << claim.point.to_string() << ": " << claim.computed
             << " (claimed " << claim.claimed << ")\n";
  }
  if (used_seed) out.text << "seed: " << *used_seed << "\n";
  out.text << (res.verified ? "verified" : "NOT verified") << "\n";
  out.exit_code = res.verified ? kExitPass : kExitCheckFailed;
  out.emit(opts.format);
  return out.exit_code;
}

// ---------------------------------------------------------------------------
// unexpected

int cmd_unexpected(unsigned N, unsigned n, bool empty_base, unsigned degree,
                   const std::string& mults_text, unsigned trials, CommonOpts& opts) {
  check_resource_guard(N, n, opts.force);
  std::vector<unsigned> mults;
  {
    std::stringstream ss(mults_text);
    std::string cell;
    while (std::getline(ss, cell, ',')) mults.push_back(std::stoul(cell));
  }
  const std::uint64_t seed = ensure_seed(opts);

  std::vector<FieldSpec> backends;
  std::string choice = opts.backend;
  if (choice.empty()) {
    if (const char* env = std::getenv("UNEXP_BACKEND")) choice = env;
  }
  if (choice.empty() || choice == "auto") {
    backends = default_backends(N, n);  // two primes for large N, cross-checked
  } else {
    backends = {resolve_backend(choice, N, n)};
  }

  std::optional<UnexpectednessReport> report;
  bool backends_agree = true;
  for (const FieldSpec& spec : backends) {
    const FieldHandle field = make_field(spec);
    const Configuration base = empty_base ? Configuration::empty(field, N, n)
                                          : build_configuration(N, n, field);
    UnexpectednessReport r = unexpectedness_report(base, degree, mults, trials, seed);
    if (!report) {
      report = std::move(r);
    } else {
      backends_agree = backends_agree && r.base_dim == report->base_dim &&
                       r.actual_dim == report->actual_dim;
    }
  }
  if (!backends_agree)
    raise(errc::internal, "modular backends disagree; rerun with more primes");

  json params{{"N", N},       {"n", n},         {"empty", empty_base},
              {"degree", degree}, {"mults", mults}, {"trials", trials}};
  Output out;
  out.body["manifest"] = make_manifest("unexpected", params, seed, backends.front());
  out.body["result"] = to_json(*report);
  if (backends.size() > 1) {
    json checked = json::array();
    for (const FieldSpec& spec : backends) checked.push_back(to_json(spec));
    out.body["result"]["cross_checked_backends"] = checked;
  }

  if (!opts.dump_matrix.empty()) {
    // rebuild the conditions matrix of the reported (minimal) trial
    const FieldHandle field = make_field(backends.front());
    const Configuration base = empty_base ? Configuration::empty(field, N, n)
                                          : build_configuration(N, n, field);
    const auto basis = vanishing_space(base, degree);
    std::vector<ProjPoint> avoid;
    for (std::size_t i = 0; i < base.point_count(); ++i) avoid.push_back(base.point(i));
    RngState rng(report->seeds.at(report->best_trial));
    Matrix stacked(field, 0, basis.size());
    for (unsigned m : mults) {
      const ProjPoint pt = sample_general_point(field, N, n, rng, avoid);
      avoid.push_back(pt);
      stacked = vstack(stacked, derivative_rows(basis, pt, m));
    }
    dump_matrix_file(opts.dump_matrix, stacked);
  }

  out.text << "unexpectedness for W_{" << N << "," << n << "}"
           << (empty_base ? " (empty base)" : "") << ", degree " << degree << ", mults "
           << mults_text << ":\n";
  out.text << "  base_dim " << report->base_dim << ", expected conditions "
           << report->conditions_expected << ", virtual " << report->virtual_dim << "\n";
  out.text << "  expected_dim " << report->expected_dim << ", actual_dim "
           << report->actual_dim << " (over " << report->trials << " trials)\n";
  out.text << "  seed " << seed << "\n";
  out.text << "  verdict: " << (report->verdict ? "UNEXPECTED" : "not unexpected") << "\n";
  out.exit_code = report->verdict ? kExitPass : kExitCheckFailed;
  out.emit(opts.format);
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermat-type point configurations and unexpected hypersurfaces, exactly"};
  app.require_subcommand(1);

  // points
  unsigned N = 3, n = 3;
  CommonOpts points_opts;
  CLI::App* points = app.add_subcommand("points", "emit a configuration");
  points->add_option("--N", N, "projective dimension")->required();
  points->add_option("--n", n, "root-of-unity order")->required();
  add_common(points, points_opts);

  // verify
  std::string verify_target;
  unsigned vN = 3, vn = 3, max_degree = 6, trials = 3;
  std::vector<unsigned> ks;
  CommonOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "run a verification target");
  verify->add_option("target", verify_target, "generation|vanishing|identities|tables|propositions")
      ->required()
      ->check(CLI::IsMember({"generation", "vanishing", "identities", "tables", "propositions"}));
  verify->add_option("--N", vN, "projective dimension");
  verify->add_option("--n", vn, "root-of-unity order");
  verify->add_option("--max-degree", max_degree, "degree bound for generation checks");
  verify->add_option("--k", ks, "values of k for the propositions sweep (N = 2k+1)");
  verify->add_option("--trials", trials, "random trials per statement");
  add_common(verify, verify_opts);

  // construct
  std::string construct_kind;
  unsigned cn = 3, cone_i = 0, cone_j = 1;
  std::vector<std::string> point_args;
  bool random_points = false;
  CommonOpts construct_opts;
  CLI::App* construct = app.add_subcommand("construct", "build a closed-form hypersurface");
  construct->add_option("kind", construct_kind, "qp|qr|qrp|cone")
      ->required()
      ->check(CLI::IsMember({"qp", "qr", "qrp", "cone"}));
  construct->add_option("--n", cn, "root order for qp (degree is n+2)");
  construct->add_option("--point", point_args, "comma-separated coordinates; repeat for qrp");
  construct->add_flag("--random", random_points, "sample the point(s) instead");
  construct->add_option("--i", cone_i, "cone index i");
  construct->add_option("--j", cone_j, "cone index j");
  add_common(construct, construct_opts);

  // unexpected
  unsigned uN = 5, un = 3, degree = 4;
  std::string mults = "3,2";
  unsigned utrials = 3;
  bool empty_base = false;
  CommonOpts unexpected_opts;
  CLI::App* unexpected = app.add_subcommand("unexpected", "decide unexpectedness");
  unexpected->add_option("--N", uN, "projective dimension")->required();
  unexpected->add_option("--n", un, "root-of-unity order");
  unexpected->add_flag("--empty", empty_base, "use an empty base configuration");
  unexpected->add_option("--degree", degree, "degree of the linear system")->required();
  unexpected->add_option("--mults", mults, "fat-point multiplicities, e.g. 3,2")->required();
  unexpected->add_option("--trials", utrials, "independent random trials");
  add_common(unexpected, unexpected_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (points->parsed()) return cmd_points(N, n, points_opts);
    if (verify->parsed()) {
      if (ks.empty()) ks = {2};
      return cmd_verify(verify_target, vN, vn, max_degree, ks, trials, verify_opts);
    }
    if (construct->parsed())
      return cmd_construct(construct_kind, cn, point_args, random_points, cone_i, cone_j,
                           construct_opts);
    if (unexpected->parsed())
      return cmd_unexpected(uN, un, empty_base, degree, mults, utrials, unexpected_opts);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
