#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace monoidx {

// A function known through samples (xs[i], ys[i]) and modelled as the
// piecewise-linear interpolant on [xs.front(), xs.back()].
//
// Invariants: at least two samples, xs strictly increasing, every value
// finite. Duplicate abscissas are rejected rather than merged, since a
// vertical jump has no finite slope.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> xs, std::vector<double> ys);

  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  std::size_t size() const { return xs_.size(); }
  std::size_t cell_count() const { return xs_.size() - 1; }
  double a() const { return xs_.front(); }
  double b() const { return xs_.back(); }

  // Linear interpolation. Throws InvalidParameter outside [a, b].
  double operator()(double x) const;

  // The model restricted to [lo, hi] ⊆ [a, b]: grid points strictly inside
  // are kept, the endpoints are interpolated.
  SampledFunction restricted(double lo, double hi) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// g(x) = f0(x + a) - f0(a) on [0, y], y = b - a. Only standardize() builds
// these, so inner().xs().front() == 0 and inner().ys().front() == 0 always.
class StandardizedFunction {
 public:
  const SampledFunction& inner() const { return inner_; }
  double length() const { return inner_.b(); }
  double end_value() const { return inner_.ys().back(); }

 private:
  explicit StandardizedFunction(SampledFunction inner) : inner_(std::move(inner)) {}
  friend StandardizedFunction standardize(const SampledFunction& f0);

  SampledFunction inner_;
};

StandardizedFunction standardize(const SampledFunction& f0);

struct SlopeCell {
  double length;
  double slope;
};

// Piecewise-constant derivative of a piecewise-linear function: one cell per
// grid interval. Doubles as the Lebesgue measure restricted to [0, y].
class DerivativeProfile {
 public:
  explicit DerivativeProfile(std::vector<SlopeCell> cells);

  std::span<const SlopeCell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  double domain_length() const { return domain_length_; }

 private:
  std::vector<SlopeCell> cells_;
  double domain_length_ = 0.0;
};

DerivativeProfile derivative(const StandardizedFunction& g);

// A map H with H(0) = 0 and H >= 0, applied to slopes.
class TransformH {
 public:
  using Fn = std::function<double(double)>;

  static TransformH negative_part();
  static TransformH positive_part();
  static TransformH absolute();
  // (x^-)^p, (x^+)^p and |x|^p; p must be >= 1.
  static TransformH negative_part_pow(double p);
  static TransformH positive_part_pow(double p);
  static TransformH absolute_pow(double p);
  // Throws InvalidParameter unless fn(0) == 0.
  static TransformH custom(std::string name, Fn fn);

  // Throws InvalidParameter if H returns a negative or non-finite value.
  double operator()(double x) const;
  const std::string& name() const { return name_; }

 private:
  TransformH(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  std::string name_;
  Fn fn_;
};

// Σ length_i · H(slope_i): the exact integral ∫_0^y H(g') dλ of the model.
double integrate_H(const DerivativeProfile& d, const TransformH& h);

// Σ length_i · slope_i, i.e. g(y) - g(0) as seen through the derivative.
double net_change(const DerivativeProfile& d);

double total_variation(const DerivativeProfile& d);
double total_variation(const StandardizedFunction& g);

}  // namespace monoidx
