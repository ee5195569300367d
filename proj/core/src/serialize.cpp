#include "unexp/serialize.hpp"

#include "unexp/version.hpp"

namespace unexp {

using nlohmann::json;

json to_json(const FieldSpec& spec) {
  json j;
  j["kind"] = spec.kind == FieldKind::cyclotomic_rational ? "cyclotomic_rational" : "prime_modular";
  j["n"] = spec.n;
  if (spec.kind == FieldKind::prime_modular) j["p"] = spec.p;
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  FieldSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclotomic_rational") {
    spec.kind = FieldKind::cyclotomic_rational;
  } else if (kind == "prime_modular") {
    spec.kind = FieldKind::prime_modular;
    spec.p = j.at("p").get<std::uint64_t>();
  } else {
    raise(errc::parse_error, "unknown field kind: " + kind);
  }
  spec.n = j.at("n").get<unsigned>();
  return spec;
}

namespace {

json point_to_json(const ProjPoint& pt) {
  json coords = json::array();
  const Field& F = *pt.field();
  for (std::size_t i = 0; i < pt.size(); ++i) coords.push_back(F.to_string(pt[i]));
  return coords;
}

ProjPoint point_from_json(const json& j, const FieldHandle& field) {
  std::vector<Scalar> coords;
  for (const auto& c : j) coords.push_back(field->parse(c.get<std::string>()));
  return ProjPoint(field, std::move(coords));
}

}  // namespace

json to_json(const Configuration& config) {
  json j;
  j["N"] = config.N;
  j["n"] = config.n;
  j["backend"] = to_json(config.field->spec());
  j["fermat_points"] = json::array();
  for (const ProjPoint& pt : config.fermat_points) j["fermat_points"].push_back(point_to_json(pt));
  j["coordinate_points"] = json::array();
  for (const ProjPoint& pt : config.coordinate_points)
    j["coordinate_points"].push_back(point_to_json(pt));
  j["point_count"] = config.point_count();
  return j;
}

Configuration configuration_from_json(const json& j, FieldHandle field) {
  Configuration config;
  config.field = field;
  config.N = j.at("N").get<unsigned>();
  config.n = j.at("n").get<unsigned>();
  for (const auto& pt : j.at("fermat_points")) config.fermat_points.push_back(point_from_json(pt, field));
  for (const auto& pt : j.at("coordinate_points"))
    config.coordinate_points.push_back(point_from_json(pt, field));
  return config;
}

json to_json(const UnexpectednessReport& report) {
  json j;
  j["schema_version"] = schema_version;
  j["artifact_version"] = artifact_version;
  j["backend"] = to_json(report.backend);
  j["N"] = report.N;
  j["n"] = report.n;
  j["base_empty"] = report.base_empty;
  j["degree"] = report.degree;
  j["mults"] = report.mults;
  j["base_dim"] = report.base_dim;
  j["conditions_expected"] = report.conditions_expected;
  j["virtual_dim"] = report.virtual_dim;
  j["expected_dim"] = report.expected_dim;
  j["actual_dim"] = report.actual_dim;
  j["rank_per_point"] = report.rank_per_point;
  j["verdict"] = report.verdict;
  j["trials"] = report.trials;
  j["best_trial"] = report.best_trial;
  j["seeds"] = report.seeds;
  j["base_dim_convention"] = report.base_dim_convention;
  return j;
}

json to_json(const ConstructionResult& result) {
  json j;
  j["schema_version"] = schema_version;
  j["artifact_version"] = artifact_version;
  j["polynomial"] = result.poly.to_string();
  j["degree"] = result.poly.total_degree();
  j["terms"] = result.poly.term_count();
  j["base"] = {{"N", result.base.N}, {"n", result.base.n}, {"point_count", result.base.point_count()}};
  j["base_vanishing_count"] = result.base_vanishing_count;
  json mults = json::array();
  for (const MultiplicityClaim& claim : result.multiplicities) {
    mults.push_back({{"point", point_to_json(claim.point)},
                     {"claimed", claim.claimed},
                     {"computed", claim.computed}});
  }
  j["multiplicities"] = mults;
  j["verified"] = result.verified;
  return j;
}

json to_json(const GenerationTable& table) {
  json j;
  j["N"] = table.N;
  j["n"] = table.n;
  j["max_degree"] = table.d_max;
  json rows = json::array();
  for (const GenerationRow& row : table.rows) {
    rows.push_back({{"degree", row.degree},
                    {"product_span_dim", row.product_span_dim},
                    {"kernel_dim", row.kernel_dim}});
  }
  j["rows"] = rows;
  j["ok"] = table.ok;
  return j;
}

json to_json(const ConditionsTable& table) {
  json j;
  json rows = json::array();
  for (const ConditionsRow& row : table.rows) {
    rows.push_back({{"k", row.k},
                    {"N", row.N},
                    {"dim_after_triple_point", row.dim_v},
                    {"double_point_increments", row.increments},
                    {"dim_final", row.dim_final},
                    {"ok", row.ok}});
  }
  j["rows"] = rows;
  j["ok"] = table.ok;
  j["trials"] = table.trials;
  j["seeds"] = table.seeds;
  json backends = json::array();
  for (const FieldSpec& spec : table.backends_used) backends.push_back(to_json(spec));
  j["backends"] = backends;
  // the dimension statements themselves are checked at random points only
  j["certification"] = "randomized";
  return j;
}

}  // namespace unexp
