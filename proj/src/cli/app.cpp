#include "monoidx/cli/app.hpp"

#include <optional>
#include <string_view>

#include "CLI11.hpp"
#include "monoidx/cli/csv.hpp"
#include "monoidx/cli/format.hpp"
#include "monoidx/monotonicity.hpp"
#include "monoidx/orderings.hpp"
#include "monoidx/risk_measures.hpp"
#include "monoidx/signed_measure.hpp"

namespace monoidx::cli {

namespace {

struct Output {
  Json document;
  int exit_code = kExitOk;
};

Json new_document(std::string_view command) {
  Json doc;
  doc["command"] = command;
  doc["input"] = Json::object();
  doc["results"] = Json::object();
  doc["warnings"] = Json::array();
  return doc;
}

SampledFunction load_function(const std::string& path) {
  return parse_function_csv(read_file(path), path);
}

Json atoms_json(const DiscreteSignedMeasure& m) {
  Json out = Json::array();
  for (const Atom& a : m.atoms()) {
    out.push_back({{"location", number(a.location)}, {"weight", number(a.weight)}});
  }
  return out;
}

struct IndicesArgs {
  std::string file;
  std::optional<double> p;
  std::vector<double> interval;
};

Output cmd_indices(const IndicesArgs& args) {
  Output o{new_document("indices")};
  Json& input = o.document["input"];
  input["file"] = args.file;

  SampledFunction f0 = load_function(args.file);
  if (!args.interval.empty()) {
    input["interval"] = {number(args.interval[0]), number(args.interval[1])};
    f0 = f0.restricted(args.interval[0], args.interval[1]);
  }
  if (args.p) input["p"] = number(*args.p);

  const MonotonicityReport r = report(f0, args.p);
  Json& res = o.document["results"];
  res["interval"] = {{"a", number(r.a)}, {"b", number(r.b)}};
  res["cells"] = r.cells;
  res["loi"] = number(r.loi);
  res["lod"] = number(r.lod);
  res["lom"] = number(r.lom);
  res["tv"] = number(r.tv);
  res["loi_norm"] = number_or_undefined(r.loi_norm);
  res["lod_norm"] = number_or_undefined(r.lod_norm);
  res["lom_norm"] = number_or_undefined(r.lom_norm);
  if (r.p) {
    res["loi_p"] = number(*r.loi_p);
    res["lod_p"] = number(*r.lod_p);
  }
  if (!r.loi_norm) {
    o.document["warnings"].push_back("total variation is zero; normalized indices are undefined");
  }
  return o;
}

struct CompareArgs {
  std::string file_g;
  std::string file_h;
  std::string relation;
};

std::string_view compared_quantity(Relation r) {
  switch (r) {
    case Relation::I:
      return "loi_norm";
    case Relation::D:
      return "lod_norm";
    case Relation::M:
      return "lom_norm";
    case Relation::SI:
      return "normalized_survival_minus";
    case Relation::SD:
      return "normalized_survival_plus";
  }
  return "?";
}

Output cmd_compare(const CompareArgs& args) {
  Output o{new_document("compare")};
  Json& input = o.document["input"];
  input["file_g"] = args.file_g;
  input["file_h"] = args.file_h;
  const Relation relation = parse_relation(args.relation);
  input["relation"] = to_string(relation);

  const StandardizedFunction g = standardize(load_function(args.file_g));
  const StandardizedFunction h = standardize(load_function(args.file_h));
  const OrderingVerdict v = compare(g, h, relation);

  Json& res = o.document["results"];
  res["relation"] = to_string(relation);
  res["holds"] = to_string(v.holds);
  res["compared"] = compared_quantity(relation);
  const bool strict = relation == Relation::SI || relation == Relation::SD;
  if (!strict || v.witness) {
    res["g"] = number(v.lhs);
    res["h"] = number(v.rhs);
  }
  if (v.witness) res["witness"] = number(*v.witness);
  if (v.note) o.document["warnings"].push_back(*v.note);
  o.exit_code = v.holds == Holds::yes ? kExitOk : kExitNo;
  return o;
}

Output cmd_measure(const std::string& file) {
  Output o{new_document("measure")};
  o.document["input"]["file"] = file;
  AtomsCsv parsed = parse_atoms_csv(read_file(file), file);
  for (auto& w : parsed.warnings) o.document["warnings"].push_back(w);

  const DiscreteSignedMeasure& nu = parsed.measure;
  const MassSplit m = split_masses(nu);
  const auto parts = jordan(nu);
  const auto optional_norm = [&](double (*fn)(const MassSplit&)) -> std::optional<double> {
    if (!(m.total > 0.0)) return std::nullopt;
    return fn(m);
  };

  Json& res = o.document["results"];
  res["atoms"] = nu.size();
  res["lop"] = number(lop(nu));
  res["lon"] = number(lon(nu));
  res["los"] = number(los(nu));
  res["total_variation"] = number(m.total);
  res["lop_norm"] = number_or_undefined(optional_norm(&lop_norm));
  res["lon_norm"] = number_or_undefined(optional_norm(&lon_norm));
  res["los_norm"] = number_or_undefined(optional_norm(&los_norm));
  res["positive_part"] = atoms_json(parts.positive_part);
  res["negative_part"] = atoms_json(parts.negative_part);
  if (!(m.total > 0.0)) {
    o.document["warnings"].push_back("measure has zero total variation; normalized indices are undefined");
  }
  return o;
}

struct PremiumArgs {
  std::string file;
  std::string weight;
  std::optional<double> param;
  std::size_t quad_n = 10000;
};

Output cmd_premium(const PremiumArgs& args) {
  Output o{new_document("premium")};
  Json& input = o.document["input"];
  input["file"] = args.file;
  input["weight"] = args.weight;
  if (args.param) input["param"] = number(*args.param);
  input["quad_n"] = args.quad_n;

  const EmpiricalDistribution ed(parse_sample_csv(read_file(args.file), args.file));
  constexpr std::string_view kSampledPrefix = "sampled:";
  std::optional<WeightSpec> weight;
  if (std::string_view(args.weight).starts_with(kSampledPrefix)) {
    weight = WeightSpec::sampled(load_function(args.weight.substr(kSampledPrefix.size())));
  } else {
    if (!args.param) {
      // Validate the name first so an unknown weight lists the catalog.
      WeightSpec::from_name(args.weight, 0.5);
      throw InvalidParameter("weight '" + args.weight + "' needs --param");
    }
    weight = WeightSpec::from_name(args.weight, *args.param);
  }

  const LoadingReport r = loading_report(ed, *weight);
  const VTheta vt = v_theta(ed, args.quad_n);

  Json& res = o.document["results"];
  res["observations"] = ed.size();
  res["premium"] = number(r.premium);
  res["net_premium"] = number(r.net_premium);
  res["covariance"] = number(r.covariance);
  res["loading_nonneg"] = r.loading_nonneg;
  res["gain_loss_ratio"] = number_or_undefined(r.gain_loss_ratio);
  res["omega_style_ratio"] = number_or_undefined(r.omega_style_ratio);
  res["weight_mass"] = number(r.weight_mass);
  res["theta"] = number(vt.theta);
  return o;
}

Output cmd_glr(const std::string& file) {
  Output o{new_document("glr")};
  o.document["input"]["file"] = file;
  const GainLoss gl = gain_loss(load_function(file));
  Json& res = o.document["results"];
  res["gain"] = number(gl.gain);
  res["loss"] = number(gl.loss);
  res["integral"] = number(gl.integral);
  res["integral_nonneg"] = gl.integral >= 0.0;
  res["glr"] = number(gl.ratio);
  res["omega_style"] = number(gl.omega);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indices of lack of monotonicity, positivity and loading"};
  app.name(args.empty() ? "monoidx" : args.front());
  app.require_subcommand(1);

  std::string format = "table";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->envname("MONO_FORMAT");
  };

  IndicesArgs indices;
  auto* sub_indices = app.add_subcommand("indices", "LOI/LOD/LOM of a sampled function");
  sub_indices->add_option("file", indices.file, "CSV with columns x,y")->required();
  sub_indices->add_option("--p", indices.p, "Also report the L_p indices (p >= 1)");
  sub_indices->add_option("--interval", indices.interval, "Restrict to [a, b]")->expected(2);
  add_format(sub_indices);

  CompareArgs cmp;
  auto* sub_compare = app.add_subcommand("compare", "Is g at least as monotone as h?");
  sub_compare->add_option("file_g", cmp.file_g, "CSV for g")->required();
  sub_compare->add_option("file_h", cmp.file_h, "CSV for h")->required();
  sub_compare->add_option("--relation", cmp.relation, "I, D, M, SI or SD")->required();
  add_format(sub_compare);

  std::string measure_file;
  auto* sub_measure = app.add_subcommand("measure", "LOP/LON/LOS of a discrete signed measure");
  sub_measure->add_option("file", measure_file, "CSV with columns location,weight")->required();
  add_format(sub_measure);

  PremiumArgs prem;
  auto* sub_premium = app.add_subcommand("premium", "Weighted premium and loading check");
  sub_premium->add_option("file", prem.file, "CSV with one column of observations")->required();
  sub_premium->add_option("--weight", prem.weight, "Catalog name or sampled:<file>")->required();
  sub_premium->add_option("--param", prem.param, "Weight parameter");
  sub_premium->add_option("--quad-n", prem.quad_n, "Grid size for v(t) and theta")
      ->check(CLI::PositiveNumber);
  add_format(sub_premium);

  std::string glr_file;
  auto* sub_glr = app.add_subcommand("glr", "Gain-loss and Omega-style ratios of g on [0,1]");
  sub_glr->add_option("file", glr_file, "CSV with columns x,y on [0,1]")->required();
  add_format(sub_glr);

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    Output o;
    if (*sub_indices) {
      o = cmd_indices(indices);
    } else if (*sub_compare) {
      o = cmd_compare(cmp);
    } else if (*sub_measure) {
      o = cmd_measure(measure_file);
    } else if (*sub_premium) {
      o = cmd_premium(prem);
    } else {
      o = cmd_glr(glr_file);
    }
    out << (format == "json" ? render_json(o.document) : render_table(o.document));
    return o.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace monoidx::cli
