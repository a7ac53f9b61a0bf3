#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidx/function_model.hpp"

namespace monoidx {

// Sorted observations x_(1) <= ... <= x_(n) of a loss variable X.
class EmpiricalDistribution {
 public:
  // Throws InvalidInput for an empty or non-finite sample.
  explicit EmpiricalDistribution(std::vector<double> sample);

  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }
  double range() const { return sorted_.back() - sorted_.front(); }
  double mean() const;

  // F^{-1}(p) = inf{x : F(x) >= p} = x_(⌈np⌉) for p in (0, 1]. A level within
  // rounding of a block edge i/n is treated as that edge.
  double quantile(double p) const;

 private:
  std::vector<double> sorted_;
};

// A weight function w: [0,1] -> [0, ∞) from the catalog, or sampled.
//
//   indicator(p)             w(t) = 1{t > p},          p ∈ (0,1)   (average value at risk)
//   proportional_hazards(ν)  w(t) = ν (1-t)^{ν-1},     ν > 0
//   size_biased(λ)           w(t) = t^λ,               λ > 0
//   esscher(λ)               w(t) = e^{λt},            λ > 0
//   kamps(λ)                 w(t) = 1 - e^{-λt},       λ > 0
//   sampled                  piecewise-linear samples on [0,1], w >= 0
class WeightSpec {
 public:
  enum class Kind { indicator, proportional_hazards, size_biased, esscher, kamps, sampled };

  static WeightSpec indicator(double p);
  static WeightSpec proportional_hazards(double nu);
  static WeightSpec size_biased(double lambda);
  static WeightSpec esscher(double lambda);
  static WeightSpec kamps(double lambda);
  static WeightSpec sampled(SampledFunction w);

  // Catalog lookup by name; unknown names throw InvalidParameter listing the
  // catalog.
  static WeightSpec from_name(std::string_view name, double parameter);
  static std::vector<std::string> catalog();

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  const SampledFunction* samples() const { return samples_ ? &*samples_ : nullptr; }
  std::string_view name() const;

  double operator()(double t) const;
  // ∫_lo^hi w(t) dt in closed form (exact for the sampled model as well).
  double integral(double lo, double hi) const;

  // +1 for non-decreasing, -1 for non-increasing, 0 for constant; only
  // meaningful for catalog weights (sampled weights return 0).
  int monotone_direction() const;

 private:
  WeightSpec(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_ = 0.0;
  std::optional<SampledFunction> samples_;
};

// π_w = ∫F^{-1} w / ∫w, integrated block by block over the n quantile blocks.
// Throws DegenerateWeight when ∫w == 0.
double premium(const EmpiricalDistribution& ed, const WeightSpec& w);

// cov[F^{-1}(U), w(U)] = ∫F^{-1}w - ∫F^{-1} ∫w.
double loading_covariance(const EmpiricalDistribution& ed, const WeightSpec& w);

// v(t) = cov[F^{-1}(U), 1{U > t}] on a uniform grid of quad_n + 1 points and
// θ = ∫_0^1 v (trapezoid over the grid).
struct VTheta {
  SampledFunction v;
  double theta;
};
VTheta v_theta(const EmpiricalDistribution& ed, std::size_t quad_n = 10000);

// Gain-loss quantities of a function g on [0,1], computed on its values.
struct GainLoss {
  double gain;      // ∫g^+
  double loss;      // ∫g^-
  double integral;  // gain - loss
  double ratio;     // gain / loss, +inf when loss == 0
  double omega;     // gain / (gain + loss), in [0, 1]
};
// Throws InvalidInput if g's domain leaves [0,1], UndefinedRatio if ∫|g| == 0.
GainLoss gain_loss(const SampledFunction& g);

struct LoadingReport {
  double premium;
  double net_premium;
  double covariance;
  bool loading_nonneg;
  // Ratios of the integrand g = w'∘V^{-1}; empty when ∫|g| == 0.
  std::optional<double> gain_loss_ratio;
  std::optional<double> omega_style_ratio;
  double weight_mass;  // ∫_0^1 w
};

LoadingReport loading_report(const EmpiricalDistribution& ed, const WeightSpec& w);

// Tolerance applied to the covariance sign test: 1e-9 · sample range.
double loading_tolerance(const EmpiricalDistribution& ed);

}  // namespace monoidx
