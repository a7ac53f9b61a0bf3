#include "monoidx/risk_measures.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>

#include "monoidx/error.hpp"
#include "monoidx/numeric.hpp"

namespace monoidx {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> sample) : sorted_(std::move(sample)) {
  if (sorted_.empty()) throw InvalidInput("empirical distribution needs at least one observation");
  for (double x : sorted_) {
    if (!std::isfinite(x)) throw InvalidInput("sample contains a non-finite value");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::mean() const {
  // Shifted by the minimum so that a constant sample has an exact mean.
  const double base = sorted_.front();
  double sum = 0.0;
  for (double x : sorted_) sum += x - base;
  return base + sum / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidParameter("quantile level must lie in (0, 1]");
  const double n = static_cast<double>(sorted_.size());
  // Levels within a few ulps of a block edge i/n count as the edge itself, so
  // decimal inputs such as 0.1 or 0.3 select the order statistic they name.
  const double np = n * p;
  double k = std::ceil(np - 8.0 * std::numeric_limits<double>::epsilon() * np);
  k = std::clamp(k, 1.0, n);
  return sorted_[static_cast<std::size_t>(k) - 1];
}

// --- weights ---------------------------------------------------------------

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParameter(std::string(what) + " must be a finite positive number");
  }
}

// u(x) = ∫_0^x (1 - e^{-λs}) ds = x + expm1(-λx)/λ, with a series near zero
// where the direct form cancels.
double kamps_primitive(double x, double lambda) {
  const double z = lambda * x;
  if (z < 0.1) {
    // u(x) = x · Σ_{k>=2} (-1)^k z^{k-1} / k!
    double term = z / 2.0;
    double sum = term;
    for (int k = 3; k < 18; ++k) {
      term *= -z / k;
      sum += term;
    }
    return x * sum;
  }
  return x + std::expm1(-z) / lambda;
}

// Exact integral of a piecewise-linear function over [lo, hi] ⊆ [a, b].
double linear_integral(const SampledFunction& f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const auto xs = f.xs();
  const auto ys = f.ys();
  auto it = std::upper_bound(xs.begin(), xs.end(), lo);
  std::size_t i = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
  double sum = 0.0;
  for (; i + 1 < xs.size() && xs[i] < hi; ++i) {
    const double s = std::max(lo, xs[i]);
    const double e = std::min(hi, xs[i + 1]);
    if (e <= s) continue;
    const double slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    const double ws = ys[i] + slope * (s - xs[i]);
    const double we = ys[i] + slope * (e - xs[i]);
    sum += 0.5 * (ws + we) * (e - s);
  }
  return sum;
}

}  // namespace

WeightSpec WeightSpec::indicator(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("indicator weight needs p in (0, 1)");
  return WeightSpec(Kind::indicator, p);
}

WeightSpec WeightSpec::proportional_hazards(double nu) {
  require_positive(nu, "proportional hazards parameter");
  return WeightSpec(Kind::proportional_hazards, nu);
}

WeightSpec WeightSpec::size_biased(double lambda) {
  require_positive(lambda, "size-biased parameter");
  return WeightSpec(Kind::size_biased, lambda);
}

WeightSpec WeightSpec::esscher(double lambda) {
  require_positive(lambda, "Esscher parameter");
  return WeightSpec(Kind::esscher, lambda);
}

WeightSpec WeightSpec::kamps(double lambda) {
  require_positive(lambda, "Kamps parameter");
  return WeightSpec(Kind::kamps, lambda);
}

WeightSpec WeightSpec::sampled(SampledFunction w) {
  if (w.a() != 0.0 || w.b() != 1.0) {
    throw InvalidInput("sampled weight must be given on exactly [0, 1]");
  }
  for (double y : w.ys()) {
    if (y < 0.0) throw InvalidInput("sampled weight must be non-negative");
  }
  WeightSpec spec(Kind::sampled, 0.0);
  spec.samples_ = std::move(w);
  if (!(spec.integral(0.0, 1.0) > 0.0)) {
    throw DegenerateWeight("sampled weight integrates to zero");
  }
  return spec;
}

std::vector<std::string> WeightSpec::catalog() {
  return {"indicator", "proportional_hazards", "size_biased", "esscher", "kamps"};
}

WeightSpec WeightSpec::from_name(std::string_view name, double parameter) {
  if (name == "indicator") return indicator(parameter);
  if (name == "proportional_hazards") return proportional_hazards(parameter);
  if (name == "size_biased") return size_biased(parameter);
  if (name == "esscher") return esscher(parameter);
  if (name == "kamps") return kamps(parameter);
  std::ostringstream msg;
  msg << "unknown weight '" << name << "'; catalog:";
  for (const auto& c : catalog()) msg << ' ' << c;
  msg << " (or sampled:<file>)";
  throw InvalidParameter(msg.str());
}

std::string_view WeightSpec::name() const {
  switch (kind_) {
    case Kind::indicator:
      return "indicator";
    case Kind::proportional_hazards:
      return "proportional_hazards";
    case Kind::size_biased:
      return "size_biased";
    case Kind::esscher:
      return "esscher";
    case Kind::kamps:
      return "kamps";
    case Kind::sampled:
      return "sampled";
  }
  return "?";
}

double WeightSpec::operator()(double t) const {
  const double q = parameter_;
  switch (kind_) {
    case Kind::indicator:
      return t > q ? 1.0 : 0.0;
    case Kind::proportional_hazards:
      return q * std::pow(1.0 - t, q - 1.0);
    case Kind::size_biased:
      return std::pow(t, q);
    case Kind::esscher:
      return std::exp(q * t);
    case Kind::kamps:
      return -std::expm1(-q * t);
    case Kind::sampled:
      return (*samples_)(t);
  }
  return 0.0;
}

double WeightSpec::integral(double lo, double hi) const {
  const double q = parameter_;
  switch (kind_) {
    case Kind::indicator:
      return std::max(0.0, hi - std::max(lo, q));
    case Kind::proportional_hazards:
      return std::pow(1.0 - lo, q) - std::pow(1.0 - hi, q);
    case Kind::size_biased:
      return (std::pow(hi, q + 1.0) - std::pow(lo, q + 1.0)) / (q + 1.0);
    case Kind::esscher:
      return std::exp(q * lo) * std::expm1(q * (hi - lo)) / q;
    case Kind::kamps:
      return kamps_primitive(hi, q) - kamps_primitive(lo, q);
    case Kind::sampled:
      return linear_integral(*samples_, lo, hi);
  }
  return 0.0;
}

int WeightSpec::monotone_direction() const {
  switch (kind_) {
    case Kind::indicator:
    case Kind::size_biased:
    case Kind::esscher:
    case Kind::kamps:
      return 1;
    case Kind::proportional_hazards:
      return parameter_ < 1.0 ? 1 : (parameter_ > 1.0 ? -1 : 0);
    case Kind::sampled:
      return 0;
  }
  return 0;
}

// --- block integrals ---------------------------------------------------------

namespace {

double block_edge(std::size_t i, std::size_t n) {
  return static_cast<double>(i) / static_cast<double>(n);
}

struct BlockSums {
  double base;            // x_(1)
  double weighted = 0.0;  // Σ (x_(i) - x_(1)) W_i
  double plain = 0.0;     // Σ (x_(i) - x_(1))
  double mass = 0.0;      // Σ W_i = ∫_0^1 w
  double covariance = 0.0;
};

// F^{-1} is constant (= x_(i)) on block ((i-1)/n, i/n]; integrate w exactly
// over each block. Everything is shifted by x_(1) so constant samples give
// exact results.
BlockSums block_sums(const EmpiricalDistribution& ed, const WeightSpec& w) {
  const auto xs = ed.sorted();
  const std::size_t n = xs.size();
  BlockSums s{xs.front()};
  std::vector<double> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocks[i] = w.integral(block_edge(i, n), block_edge(i + 1, n));
    s.mass += blocks[i];
  }
  if (!(s.mass > 0.0) || !std::isfinite(s.mass)) {
    throw DegenerateWeight("weight function must have a finite positive integral over [0, 1]");
  }
  const double mean_block = s.mass / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = xs[i] - s.base;
    s.weighted += d * blocks[i];
    s.plain += d;
    s.covariance += d * (blocks[i] - mean_block);
  }
  return s;
}

// v(t) = ∫_t^1 F^{-1} - (1 - t) ∫_0^1 F^{-1}, piecewise linear with knots at
// i/n, together with its exact primitive.
class CovarianceProfile {
 public:
  explicit CovarianceProfile(const EmpiricalDistribution& ed) : n_(ed.size()) {
    const auto xs = ed.sorted();
    d_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) d_[i] = xs[i] - xs.front();
    suffix_.assign(n_ + 1, 0.0);
    for (std::size_t i = n_; i-- > 0;) suffix_[i] = suffix_[i + 1] + d_[i];
    mean_ = suffix_[0] / static_cast<double>(n_);

    knot_primitive_.assign(n_ + 1, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      const double h = block_edge(j + 1, n_) - block_edge(j, n_);
      knot_primitive_[j + 1] =
          knot_primitive_[j] + 0.5 * h * (value(block_edge(j, n_)) + value(block_edge(j + 1, n_)));
    }
  }

  double value(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const std::size_t k = block_of(t);
    const double tail = d_[k] * (block_edge(k + 1, n_) - t) + suffix_[k + 1] / static_cast<double>(n_);
    return tail - (1.0 - t) * mean_;
  }

  // ∫_0^t v
  double primitive(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return knot_primitive_[n_];
    const std::size_t k = block_of(t);
    const double left = block_edge(k, n_);
    return knot_primitive_[k] + 0.5 * (t - left) * (value(left) + value(t));
  }

 private:
  std::size_t block_of(double t) const {
    const double scaled = std::floor(t * static_cast<double>(n_));
    return std::min(static_cast<std::size_t>(std::max(scaled, 0.0)), n_ - 1);
  }

  std::size_t n_;
  std::vector<double> d_;
  std::vector<double> suffix_;
  std::vector<double> knot_primitive_;
  double mean_ = 0.0;
};

struct Ratios {
  std::optional<double> glr;
  std::optional<double> omega;
};

double omega_from(double gain, double loss) {
  double omega = gain / (gain + loss);
  // gain + loss can round to 2·gain when loss exceeds gain by one ulp; keep
  // the 1/2 threshold on the same side as the sign of gain - loss.
  if (gain < loss && omega >= 0.5) omega = std::nextafter(0.5, 0.0);
  return omega;
}

Ratios ratios(double gain, double loss) {
  if (!(gain + loss > 0.0)) return {};
  const double glr = loss == 0.0 ? std::numeric_limits<double>::infinity() : gain / loss;
  return {glr, omega_from(gain, loss)};
}

}  // namespace

double premium(const EmpiricalDistribution& ed, const WeightSpec& w) {
  const BlockSums s = block_sums(ed, w);
  return s.base + s.weighted / s.mass;
}

double loading_covariance(const EmpiricalDistribution& ed, const WeightSpec& w) {
  return block_sums(ed, w).covariance;
}

double loading_tolerance(const EmpiricalDistribution& ed) { return 1e-9 * ed.range(); }

VTheta v_theta(const EmpiricalDistribution& ed, std::size_t quad_n) {
  if (quad_n < 1) throw InvalidParameter("quad_n must be at least 1");
  const CovarianceProfile profile(ed);
  std::vector<double> ts(quad_n + 1);
  std::vector<double> vs(quad_n + 1);
  const double lower = -1e-12 * std::max(1.0, ed.range());
  for (std::size_t j = 0; j <= quad_n; ++j) {
    ts[j] = block_edge(j, quad_n);
    vs[j] = profile.value(ts[j]);
    assert(vs[j] >= lower);
  }
  (void)lower;
  double theta = 0.0;
  for (std::size_t j = 0; j < quad_n; ++j) {
    theta += 0.5 * (ts[j + 1] - ts[j]) * (vs[j] + vs[j + 1]);
  }
  return {SampledFunction(std::move(ts), std::move(vs)), theta};
}

GainLoss gain_loss(const SampledFunction& g) {
  if (g.a() < 0.0 || g.b() > 1.0) throw InvalidInput("gain-loss function must live on [0, 1]");
  const auto xs = g.xs();
  const auto ys = g.ys();
  double gain = 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double h = xs[i + 1] - xs[i];
    const double y0 = ys[i];
    const double y1 = ys[i + 1];
    if (y0 >= 0.0 && y1 >= 0.0) {
      gain += 0.5 * h * (y0 + y1);
    } else if (y0 <= 0.0 && y1 <= 0.0) {
      loss -= 0.5 * h * (y0 + y1);
    } else {
      // Linear piece crosses zero at fraction r of the cell.
      const double r = y0 / (y0 - y1);
      if (y0 > 0.0) {
        gain += 0.5 * h * r * y0;
        loss -= 0.5 * h * (1.0 - r) * y1;
      } else {
        loss -= 0.5 * h * r * y0;
        gain += 0.5 * h * (1.0 - r) * y1;
      }
    }
  }
  if (!(gain + loss > 0.0)) throw UndefinedRatio("gain-loss ratio undefined: ∫|g| is zero");
  const Ratios r = ratios(gain, loss);
  return {gain, loss, gain - loss, *r.glr, *r.omega};
}

LoadingReport loading_report(const EmpiricalDistribution& ed, const WeightSpec& w) {
  const BlockSums s = block_sums(ed, w);
  LoadingReport r{};
  r.premium = s.base + s.weighted / s.mass;
  r.net_premium = s.base + s.plain / static_cast<double>(ed.size());
  r.covariance = s.covariance;
  r.weight_mass = s.mass;
  r.loading_nonneg = s.covariance >= -loading_tolerance(ed);

  // With g = w'∘V^{-1} and dV = v/θ dt, ∫g^± dλ = θ^{-1} ∫(w')^± v dt; the
  // common factor θ cancels from both ratios.
  double gain = 0.0;
  double loss = 0.0;
  if (w.kind() == WeightSpec::Kind::sampled) {
    const CovarianceProfile profile(ed);
    const SampledFunction& f = *w.samples();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const double lo = f.xs()[i];
      const double hi = f.xs()[i + 1];
      const double slope = (f.ys()[i + 1] - f.ys()[i]) / (hi - lo);
      const double mass = profile.primitive(hi) - profile.primitive(lo);
      gain += positive_part(slope) * mass;
      loss += negative_part(slope) * mass;
    }
  } else if (w.monotone_direction() > 0) {
    gain = positive_part(s.covariance);
  } else if (w.monotone_direction() < 0) {
    loss = negative_part(s.covariance);
  }
  const Ratios q = ratios(gain, loss);
  r.gain_loss_ratio = q.glr;
  r.omega_style_ratio = q.omega;
  return r;
}

}  // namespace monoidx
