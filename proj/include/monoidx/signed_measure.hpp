#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "monoidx/function_model.hpp"

namespace monoidx {

struct Atom {
  double location;
  double weight;
};

// A finite signed measure Σ w_i δ_{x_i}. Zero weights are stripped on
// construction and the atoms sorted by location; duplicate locations and
// non-finite values throw InvalidInput.
class DiscreteSignedMeasure {
 public:
  DiscreteSignedMeasure() = default;
  explicit DiscreteSignedMeasure(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

 private:
  std::vector<Atom> atoms_;
};

struct DensityCell {
  double length;
  double density;
};

// dν = density · dλ on consecutive cells.
class GridDensityMeasure {
 public:
  GridDensityMeasure() = default;
  explicit GridDensityMeasure(std::vector<DensityCell> cells);

  // dν = g' dλ.
  static GridDensityMeasure from_derivative(const DerivativeProfile& d);

  std::span<const DensityCell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

 private:
  std::vector<DensityCell> cells_;
};

// Atoms plus an absolutely continuous part; indices add componentwise.
struct MixedSignedMeasure {
  DiscreteSignedMeasure atoms;
  GridDensityMeasure density;
};

// ν = positive_part - negative_part with both parts non-negative and
// mutually singular. The Hahn sets are indices into the input's atoms or
// cells: hahn_positive where ν >= 0, hahn_negative where ν < 0.
template <class Measure>
struct JordanPair {
  Measure positive_part;
  Measure negative_part;
  std::vector<std::size_t> hahn_positive;
  std::vector<std::size_t> hahn_negative;
};

JordanPair<DiscreteSignedMeasure> jordan(const DiscreteSignedMeasure& nu);
JordanPair<GridDensityMeasure> jordan(const GridDensityMeasure& nu);

struct MassSplit {
  double positive = 0.0;  // ‖ν⁺‖
  double negative = 0.0;  // ‖ν⁻‖
  double total = 0.0;     // ‖ν‖
};

MassSplit split_masses(const DiscreteSignedMeasure& nu);
MassSplit split_masses(const GridDensityMeasure& nu);
MassSplit split_masses(const MixedSignedMeasure& nu);

template <class M>
concept SignedMeasure = requires(const M& m) {
  { split_masses(m) } -> std::same_as<MassSplit>;
};

// Distance from the positive cone: ‖ν⁻‖.
template <SignedMeasure M>
double lop(const M& nu) { return split_masses(nu).negative; }

// Distance from the negative cone: ‖ν⁺‖.
template <SignedMeasure M>
double lon(const M& nu) { return split_masses(nu).positive; }

template <SignedMeasure M>
double los(const M& nu) {
  const MassSplit m = split_masses(nu);
  return 2.0 * (m.negative < m.positive ? m.negative : m.positive);
}

template <SignedMeasure M>
double total_variation(const M& nu) { return split_masses(nu).total; }

// Normalized by ‖ν‖; throw UndefinedIndex when ‖ν‖ == 0.
double lop_norm(const MassSplit& m);
double lon_norm(const MassSplit& m);
double los_norm(const MassSplit& m);

template <SignedMeasure M>
double lop_norm(const M& nu) { return lop_norm(split_masses(nu)); }
template <SignedMeasure M>
double lon_norm(const M& nu) { return lon_norm(split_masses(nu)); }
template <SignedMeasure M>
double los_norm(const M& nu) { return los_norm(split_masses(nu)); }

}  // namespace monoidx
