#pragma once

#include <cstddef>
#include <optional>

#include "monoidx/function_model.hpp"

namespace monoidx {

// Raw indices. LOI is the L1 distance from the non-decreasing functions,
// attained at the function whose derivative is (g')^+, hence ∫(g')^- dλ.
double loi(const DerivativeProfile& d);
double lod(const DerivativeProfile& d);
double lom(const DerivativeProfile& d);
double loi(const StandardizedFunction& g);
double lod(const StandardizedFunction& g);
double lom(const StandardizedFunction& g);

// Normalized indices in [0, 1]. Throw UndefinedIndex when the total
// variation is zero.
double loi_norm(const DerivativeProfile& d);
double lod_norm(const DerivativeProfile& d);
double lom_norm(const DerivativeProfile& d);
double loi_norm(const StandardizedFunction& g);
double lod_norm(const StandardizedFunction& g);
double lom_norm(const StandardizedFunction& g);

// 1 - |g(y)| / tv with g(y) taken as the model's net change. Equal to
// lom_norm up to rounding; kept as an independent route.
double lom_norm_closed_form(const DerivativeProfile& d);

// (∫((g')^-)^p dλ)^{1/p} and its increase counterpart. Throw InvalidParameter
// for p < 1 (or non-finite p).
double loi_p(const DerivativeProfile& d, double p);
double lod_p(const DerivativeProfile& d, double p);
double loi_p(const StandardizedFunction& g, double p);
double lod_p(const StandardizedFunction& g, double p);

struct MonotonicityReport {
  double loi = 0.0;
  double lod = 0.0;
  double lom = 0.0;
  double tv = 0.0;
  // Empty when tv == 0.
  std::optional<double> loi_norm;
  std::optional<double> lod_norm;
  std::optional<double> lom_norm;
  // Filled only when a p was requested.
  std::optional<double> p;
  std::optional<double> loi_p;
  std::optional<double> lod_p;
  // The original interval [a, b]; metadata only.
  double a = 0.0;
  double b = 0.0;
  std::size_t cells = 0;
};

MonotonicityReport report(const SampledFunction& f0, std::optional<double> p = std::nullopt);

}  // namespace monoidx
