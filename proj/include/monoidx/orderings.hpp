#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidx/function_model.hpp"

namespace monoidx {

enum class SlopePart { negative, positive };

// z ↦ λ{x ∈ [0, y] : (g')^∓(x) > z} for the piecewise-constant derivative.
//
// Stored as ascending steps: S(z) = steps[k].level for
// steps[k].z <= z < steps[k+1].z. The first step starts at 0 and the last
// one has level 0. Breakpoints are the distinct non-zero slope magnitudes.
class SurvivalCurve {
 public:
  struct Step {
    double z;
    double level;
  };

  SurvivalCurve(const DerivativeProfile& d, SlopePart part);

  double operator()(double z) const;
  std::span<const Step> steps() const { return steps_; }
  SlopePart part() const { return part_; }
  double total_variation() const { return tv_; }
  double domain_length() const { return domain_length_; }

  // ∫_0^∞ S(z) dz, which equals LOI (negative part) or LOD (positive part).
  double integral() const;

 private:
  std::vector<Step> steps_;
  SlopePart part_;
  double tv_ = 0.0;
  double domain_length_ = 0.0;
};

SurvivalCurve survival_minus(const StandardizedFunction& g);
SurvivalCurve survival_plus(const StandardizedFunction& g);

// I, D, M compare the normalized LOI, LOD, LOM. SI and SD compare the
// normalized survival curves of (g')^- and (g')^+ pointwise.
enum class Relation { I, D, M, SI, SD };

enum class Holds { yes, no, incomparable };

struct OrderingVerdict {
  Relation relation;
  Holds holds;
  // SI/SD only: a level z > 0 at which g's normalized curve exceeds h's.
  std::optional<double> witness;
  std::optional<std::string> note;
  // The two compared values (I/D/M) or the curve levels at the witness.
  double lhs = 0.0;
  double rhs = 0.0;
};

// Does g ≥_relation h hold, i.e. is g at least as monotone as h in the given
// sense? Ties, including values equal to 1e-12 relative, count as yes.
// Throws UndefinedComparison if either function has zero total variation.
OrderingVerdict compare(const StandardizedFunction& g, const StandardizedFunction& h,
                        Relation relation);

// SI / SD only; throws InvalidParameter for the other relations.
OrderingVerdict compare_strict(const StandardizedFunction& g, const StandardizedFunction& h,
                               Relation relation);

// Same as compare() but reports Holds::incomparable instead of throwing when
// a total variation is zero.
OrderingVerdict compare_or_incomparable(const StandardizedFunction& g,
                                        const StandardizedFunction& h, Relation relation);

std::string_view to_string(Relation r);
std::string_view to_string(Holds h);
// Accepts "I", "D", "M", "SI", "SD" (case-insensitive).
Relation parse_relation(std::string_view text);

}  // namespace monoidx
