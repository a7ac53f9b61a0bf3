#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "monoidx/error.hpp"
#include "monoidx/function_model.hpp"
#include "monoidx/monotonicity.hpp"
#include "monoidx/orderings.hpp"
#include "monoidx/risk_measures.hpp"
#include "monoidx/signed_measure.hpp"

namespace py = pybind11;
using namespace monoidx;

namespace {

using Vec = std::vector<double>;

py::object optional_value(const std::optional<double>& v) {
  return v ? py::object(py::float_(*v)) : py::object(py::none());
}

WeightSpec make_weight(const std::string& name, std::optional<double> param,
                       std::optional<std::pair<Vec, Vec>> samples) {
  if (name == "sampled") {
    if (!samples) throw InvalidParameter("weight 'sampled' needs samples=(ts, ws)");
    return WeightSpec::sampled(SampledFunction(samples->first, samples->second));
  }
  if (!param) throw InvalidParameter("weight '" + name + "' needs a parameter");
  return WeightSpec::from_name(name, *param);
}

py::dict indices(Vec xs, Vec ys, std::optional<double> p) {
  const auto r = report(SampledFunction(std::move(xs), std::move(ys)), p);
  py::dict d;
  d["loi"] = r.loi;
  d["lod"] = r.lod;
  d["lom"] = r.lom;
  d["tv"] = r.tv;
  d["loi_norm"] = optional_value(r.loi_norm);
  d["lod_norm"] = optional_value(r.lod_norm);
  d["lom_norm"] = optional_value(r.lom_norm);
  if (r.p) {
    d["loi_p"] = optional_value(r.loi_p);
    d["lod_p"] = optional_value(r.lod_p);
  }
  d["cells"] = r.cells;
  return d;
}

py::dict compare_functions(Vec xg, Vec yg, Vec xh, Vec yh, const std::string& relation) {
  const auto g = standardize(SampledFunction(std::move(xg), std::move(yg)));
  const auto h = standardize(SampledFunction(std::move(xh), std::move(yh)));
  const auto v = compare(g, h, parse_relation(relation));
  py::dict d;
  d["relation"] = std::string(to_string(v.relation));
  d["holds"] = v.holds == Holds::yes;
  d["witness"] = optional_value(v.witness);
  d["g"] = v.lhs;
  d["h"] = v.rhs;
  return d;
}

py::dict measure(Vec locations, Vec weights) {
  if (locations.size() != weights.size()) throw InvalidInput("locations and weights differ in length");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < locations.size(); ++i) atoms.push_back({locations[i], weights[i]});
  const DiscreteSignedMeasure nu(std::move(atoms));
  const MassSplit m = split_masses(nu);
  py::dict d;
  d["lop"] = lop(nu);
  d["lon"] = lon(nu);
  d["los"] = los(nu);
  d["total_variation"] = total_variation(nu);
  const bool defined = m.total > 0.0;
  d["lop_norm"] = defined ? py::object(py::float_(lop_norm(m))) : py::object(py::none());
  d["lon_norm"] = defined ? py::object(py::float_(lon_norm(m))) : py::object(py::none());
  d["los_norm"] = defined ? py::object(py::float_(los_norm(m))) : py::object(py::none());
  return d;
}

py::dict loading(Vec sample, const std::string& weight, std::optional<double> param,
                 std::optional<std::pair<Vec, Vec>> samples) {
  const EmpiricalDistribution ed(std::move(sample));
  const auto r = loading_report(ed, make_weight(weight, param, std::move(samples)));
  py::dict d;
  d["premium"] = r.premium;
  d["net_premium"] = r.net_premium;
  d["covariance"] = r.covariance;
  d["loading_nonneg"] = r.loading_nonneg;
  d["gain_loss_ratio"] = optional_value(r.gain_loss_ratio);
  d["omega_style_ratio"] = optional_value(r.omega_style_ratio);
  d["weight_mass"] = r.weight_mass;
  return d;
}

py::dict gain_loss_of(Vec xs, Vec ys) {
  const auto r = gain_loss(SampledFunction(std::move(xs), std::move(ys)));
  py::dict d;
  d["gain"] = r.gain;
  d["loss"] = r.loss;
  d["integral"] = r.integral;
  d["ratio"] = r.ratio;
  d["omega"] = r.omega;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monotonicity indices, orderings, signed-measure indices and weighted premiums.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", error);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", error);
  py::register_exception<UndefinedIndex>(m, "UndefinedIndex", error);
  py::register_exception<UndefinedComparison>(m, "UndefinedComparison", error);
  py::register_exception<UndefinedRatio>(m, "UndefinedRatio", error);
  py::register_exception<DegenerateWeight>(m, "DegenerateWeight", error);

  m.def("indices", &indices, py::arg("xs"), py::arg("ys"), py::arg("p") = py::none(),
        "LOI, LOD, LOM, total variation and normalized indices of the sampled function.");
  m.def("compare", &compare_functions, py::arg("xg"), py::arg("yg"), py::arg("xh"), py::arg("yh"),
        py::arg("relation"), "Whether g is at least as monotone as h under I, D, M, SI or SD.");
  m.def("survival", [](Vec xs, Vec ys, double z, const std::string& part) {
        const auto d = derivative(standardize(SampledFunction(std::move(xs), std::move(ys))));
        if (part != "negative" && part != "positive") throw InvalidParameter("part must be negative or positive");
        return SurvivalCurve(d, part == "negative" ? SlopePart::negative : SlopePart::positive)(z);
      },
      py::arg("xs"), py::arg("ys"), py::arg("z"), py::arg("part") = "negative",
      "Measure of {x : (g')^-(x) > z}, or of (g')^+ with part='positive'.");
  m.def("measure", &measure, py::arg("locations"), py::arg("weights"),
        "LOP, LON, LOS and total variation of a discrete signed measure.");
  m.def("quantile", [](Vec sample, double p) { return EmpiricalDistribution(std::move(sample)).quantile(p); },
        py::arg("sample"), py::arg("p"));
  m.def("premium", [](Vec sample, const std::string& weight, std::optional<double> param,
                      std::optional<std::pair<Vec, Vec>> samples) {
        return premium(EmpiricalDistribution(std::move(sample)), make_weight(weight, param, std::move(samples)));
      },
      py::arg("sample"), py::arg("weight"), py::arg("param") = py::none(), py::arg("samples") = py::none(),
      "Weighted premium of the empirical distribution.");
  m.def("loading", &loading, py::arg("sample"), py::arg("weight"), py::arg("param") = py::none(),
        py::arg("samples") = py::none(), "Premium, covariance loading and its gain-loss ratios.");
  m.def("gain_loss", &gain_loss_of, py::arg("xs"), py::arg("ys"),
        "Gain, loss, integral and ratios of a sampled function on [0, 1].");
  m.def("weight_catalog", &WeightSpec::catalog);
}
