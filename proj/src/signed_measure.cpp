#include "monoidx/signed_measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "monoidx/error.hpp"
#include "monoidx/numeric.hpp"

namespace monoidx {

DiscreteSignedMeasure::DiscreteSignedMeasure(std::vector<Atom> atoms) {
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.location) || !std::isfinite(a.weight)) {
      throw InvalidInput("atom with non-finite location or weight");
    }
  }
  // A zero-weight atom belongs to neither Hahn set.
  std::erase_if(atoms, [](const Atom& a) { return a.weight == 0.0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& l, const Atom& r) { return l.location < r.location; });
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i].location == atoms[i - 1].location) {
      std::ostringstream msg;
      msg << "duplicate atom location " << atoms[i].location;
      throw InvalidInput(msg.str());
    }
  }
  atoms_ = std::move(atoms);
}

GridDensityMeasure::GridDensityMeasure(std::vector<DensityCell> cells) : cells_(std::move(cells)) {
  for (const DensityCell& c : cells_) {
    if (!(c.length > 0.0) || !std::isfinite(c.length) || !std::isfinite(c.density)) {
      throw InvalidInput("density cells need positive finite lengths and finite densities");
    }
  }
}

GridDensityMeasure GridDensityMeasure::from_derivative(const DerivativeProfile& d) {
  std::vector<DensityCell> cells;
  cells.reserve(d.size());
  for (const SlopeCell& c : d.cells()) cells.push_back({c.length, c.slope});
  return GridDensityMeasure(std::move(cells));
}

JordanPair<DiscreteSignedMeasure> jordan(const DiscreteSignedMeasure& nu) {
  std::vector<Atom> pos;
  std::vector<Atom> neg;
  JordanPair<DiscreteSignedMeasure> out;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const Atom& a = nu.atoms()[i];
    if (a.weight > 0.0) {
      pos.push_back(a);
      out.hahn_positive.push_back(i);
    } else {
      neg.push_back({a.location, -a.weight});
      out.hahn_negative.push_back(i);
    }
  }
  out.positive_part = DiscreteSignedMeasure(std::move(pos));
  out.negative_part = DiscreteSignedMeasure(std::move(neg));
  return out;
}

JordanPair<GridDensityMeasure> jordan(const GridDensityMeasure& nu) {
  std::vector<DensityCell> pos;
  std::vector<DensityCell> neg;
  pos.reserve(nu.size());
  neg.reserve(nu.size());
  JordanPair<GridDensityMeasure> out;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const DensityCell& c = nu.cells()[i];
    pos.push_back({c.length, positive_part(c.density)});
    neg.push_back({c.length, negative_part(c.density)});
    (c.density < 0.0 ? out.hahn_negative : out.hahn_positive).push_back(i);
  }
  out.positive_part = GridDensityMeasure(std::move(pos));
  out.negative_part = GridDensityMeasure(std::move(neg));
  return out;
}

MassSplit split_masses(const DiscreteSignedMeasure& nu) {
  MassSplit m;
  for (const Atom& a : nu.atoms()) {
    m.positive += positive_part(a.weight);
    m.negative += negative_part(a.weight);
    m.total += std::fabs(a.weight);
  }
  return m;
}

MassSplit split_masses(const GridDensityMeasure& nu) {
  // Same arithmetic as integrate_H over a derivative profile, so the measure
  // built from g' reproduces LOI/LOD bit for bit.
  MassSplit m;
  for (const DensityCell& c : nu.cells()) {
    m.positive += c.length * positive_part(c.density);
    m.negative += c.length * negative_part(c.density);
    m.total += c.length * std::fabs(c.density);
  }
  return m;
}

MassSplit split_masses(const MixedSignedMeasure& nu) {
  const MassSplit a = split_masses(nu.atoms);
  const MassSplit d = split_masses(nu.density);
  return {a.positive + d.positive, a.negative + d.negative, a.total + d.total};
}

namespace {

double nonzero_total(const MassSplit& m) {
  if (!(m.total > 0.0)) {
    throw UndefinedIndex("normalized index undefined: total variation of the measure is zero");
  }
  return m.total;
}

}  // namespace

double lop_norm(const MassSplit& m) { return m.negative / nonzero_total(m); }
double lon_norm(const MassSplit& m) { return m.positive / nonzero_total(m); }

double los_norm(const MassSplit& m) {
  const double t = nonzero_total(m);
  return 2.0 * std::min(m.negative / t, m.positive / t);
}

}  // namespace monoidx
