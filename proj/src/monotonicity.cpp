#include "monoidx/monotonicity.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "monoidx/error.hpp"
#include "monoidx/numeric.hpp"

namespace monoidx {

namespace {

double nonzero_tv(const DerivativeProfile& d) {
  const double tv = total_variation(d);
  if (!(tv > 0.0)) {
    throw UndefinedIndex("normalized index undefined: total variation is zero");
  }
  return tv;
}

}  // namespace

double loi(const DerivativeProfile& d) { return integrate_H(d, TransformH::negative_part()); }
double lod(const DerivativeProfile& d) { return integrate_H(d, TransformH::positive_part()); }
double lom(const DerivativeProfile& d) { return 2.0 * std::min(loi(d), lod(d)); }

double loi(const StandardizedFunction& g) { return loi(derivative(g)); }
double lod(const StandardizedFunction& g) { return lod(derivative(g)); }
double lom(const StandardizedFunction& g) { return lom(derivative(g)); }

double loi_norm(const DerivativeProfile& d) { return loi(d) / nonzero_tv(d); }
double lod_norm(const DerivativeProfile& d) { return lod(d) / nonzero_tv(d); }

double lom_norm(const DerivativeProfile& d) {
  const double tv = nonzero_tv(d);
  const double value = 2.0 * std::min(loi(d) / tv, lod(d) / tv);
  assert(approx_equal(value, lom_norm_closed_form(d), 1e-9, 1e-12));
  return value;
}

double lom_norm_closed_form(const DerivativeProfile& d) {
  const double tv = nonzero_tv(d);
  return 1.0 - std::fabs(net_change(d)) / tv;
}

double loi_norm(const StandardizedFunction& g) { return loi_norm(derivative(g)); }
double lod_norm(const StandardizedFunction& g) { return lod_norm(derivative(g)); }
double lom_norm(const StandardizedFunction& g) { return lom_norm(derivative(g)); }

double loi_p(const DerivativeProfile& d, double p) {
  const double integral = integrate_H(d, TransformH::negative_part_pow(p));
  return p == 1.0 ? integral : std::pow(integral, 1.0 / p);
}

double lod_p(const DerivativeProfile& d, double p) {
  const double integral = integrate_H(d, TransformH::positive_part_pow(p));
  return p == 1.0 ? integral : std::pow(integral, 1.0 / p);
}

double loi_p(const StandardizedFunction& g, double p) { return loi_p(derivative(g), p); }
double lod_p(const StandardizedFunction& g, double p) { return lod_p(derivative(g), p); }

MonotonicityReport report(const SampledFunction& f0, std::optional<double> p) {
  const StandardizedFunction g = standardize(f0);
  const DerivativeProfile d = derivative(g);

  MonotonicityReport r;
  r.a = f0.a();
  r.b = f0.b();
  r.cells = d.size();
  r.loi = loi(d);
  r.lod = lod(d);
  r.lom = 2.0 * std::min(r.loi, r.lod);
  r.tv = total_variation(d);
  if (r.tv > 0.0) {
    r.loi_norm = r.loi / r.tv;
    r.lod_norm = r.lod / r.tv;
    r.lom_norm = 2.0 * std::min(*r.loi_norm, *r.lod_norm);
  }
  if (p) {
    r.p = *p;
    r.loi_p = loi_p(d, *p);
    r.lod_p = lod_p(d, *p);
  }
  return r;
}

}  // namespace monoidx
