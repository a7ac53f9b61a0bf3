#include "monoidx/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "monoidx/error.hpp"
#include "monoidx/numeric.hpp"

namespace monoidx {

SampledFunction::SampledFunction(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw InvalidInput("abscissa and ordinate counts differ");
  }
  if (xs_.size() < 2) {
    throw InvalidInput("a sampled function needs at least 2 samples");
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
      std::ostringstream msg;
      msg << "non-finite value at sample " << i;
      throw InvalidInput(msg.str());
    }
    if (i > 0 && !(xs_[i] > xs_[i - 1])) {
      std::ostringstream msg;
      msg << "abscissas must be strictly increasing (sample " << i << ": " << xs_[i]
          << " after " << xs_[i - 1] << ")";
      throw InvalidInput(msg.str());
    }
  }
}

double SampledFunction::operator()(double x) const {
  if (!(x >= a() && x <= b())) {
    throw InvalidParameter("evaluation point outside the sampled interval");
  }
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return ys_.back();
  const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + t * (ys_[hi] - ys_[lo]);
}

SampledFunction SampledFunction::restricted(double lo, double hi) const {
  if (!(lo < hi)) throw InvalidParameter("interval must satisfy a < b");
  if (lo < a() || hi > b()) {
    throw InvalidParameter("interval lies outside the sampled range");
  }
  std::vector<double> xs{lo};
  std::vector<double> ys{(*this)(lo)};
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (xs_[i] > lo && xs_[i] < hi) {
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
  }
  xs.push_back(hi);
  ys.push_back((*this)(hi));
  return SampledFunction(std::move(xs), std::move(ys));
}

StandardizedFunction standardize(const SampledFunction& f0) {
  const double a = f0.a();
  const double g_a = f0.ys().front();
  std::vector<double> xs(f0.size());
  std::vector<double> ys(f0.size());
  for (std::size_t i = 0; i < f0.size(); ++i) {
    xs[i] = f0.xs()[i] - a;
    ys[i] = f0.ys()[i] - g_a;
  }
  return StandardizedFunction(SampledFunction(std::move(xs), std::move(ys)));
}

DerivativeProfile::DerivativeProfile(std::vector<SlopeCell> cells) : cells_(std::move(cells)) {
  for (const SlopeCell& c : cells_) {
    if (!(c.length > 0.0) || !std::isfinite(c.length) || !std::isfinite(c.slope)) {
      throw InvalidInput("derivative cells need positive finite lengths and finite slopes");
    }
    domain_length_ += c.length;
  }
}

DerivativeProfile derivative(const StandardizedFunction& g) {
  const auto xs = g.inner().xs();
  const auto ys = g.inner().ys();
  std::vector<SlopeCell> cells;
  cells.reserve(xs.size() - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double dx = xs[i + 1] - xs[i];
    cells.push_back({dx, (ys[i + 1] - ys[i]) / dx});
  }
  return DerivativeProfile(std::move(cells));
}

namespace {

void require_power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidParameter("exponent p must be a finite real >= 1");
  }
}

double power(double x, double p) { return p == 1.0 ? x : std::pow(x, p); }

std::string pow_name(const char* base, double p) {
  std::ostringstream s;
  s << base << "^" << p;
  return s.str();
}

}  // namespace

TransformH TransformH::negative_part() {
  return TransformH("neg", [](double x) { return ::monoidx::negative_part(x); });
}

TransformH TransformH::positive_part() {
  return TransformH("pos", [](double x) { return ::monoidx::positive_part(x); });
}

TransformH TransformH::absolute() {
  return TransformH("abs", [](double x) { return std::fabs(x); });
}

TransformH TransformH::negative_part_pow(double p) {
  require_power(p);
  return TransformH(pow_name("neg", p),
                    [p](double x) { return power(::monoidx::negative_part(x), p); });
}

TransformH TransformH::positive_part_pow(double p) {
  require_power(p);
  return TransformH(pow_name("pos", p),
                    [p](double x) { return power(::monoidx::positive_part(x), p); });
}

TransformH TransformH::absolute_pow(double p) {
  require_power(p);
  return TransformH(pow_name("abs", p), [p](double x) { return power(std::fabs(x), p); });
}

TransformH TransformH::custom(std::string name, Fn fn) {
  if (!fn) throw InvalidParameter("transform H is empty");
  if (fn(0.0) != 0.0) throw InvalidParameter("transform H must satisfy H(0) = 0");
  return TransformH(std::move(name), std::move(fn));
}

double TransformH::operator()(double x) const {
  const double v = fn_(x);
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw InvalidParameter("transform " + name_ + " returned a negative or non-finite value");
  }
  return v;
}

double integrate_H(const DerivativeProfile& d, const TransformH& h) {
  double sum = 0.0;
  for (const SlopeCell& c : d.cells()) sum += c.length * h(c.slope);
  return sum;
}

double net_change(const DerivativeProfile& d) {
  double sum = 0.0;
  for (const SlopeCell& c : d.cells()) sum += c.length * c.slope;
  return sum;
}

double total_variation(const DerivativeProfile& d) {
  return integrate_H(d, TransformH::absolute());
}

double total_variation(const StandardizedFunction& g) { return total_variation(derivative(g)); }

}  // namespace monoidx
