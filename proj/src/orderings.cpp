#include "monoidx/orderings.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "monoidx/error.hpp"
#include "monoidx/monotonicity.hpp"
#include "monoidx/numeric.hpp"

namespace monoidx {

SurvivalCurve::SurvivalCurve(const DerivativeProfile& d, SlopePart part)
    : part_(part), tv_(::monoidx::total_variation(d)), domain_length_(d.domain_length()) {
  struct Piece {
    double magnitude;
    double length;
  };
  std::vector<Piece> pieces;
  for (const SlopeCell& c : d.cells()) {
    const double m = part == SlopePart::negative ? negative_part(c.slope) : positive_part(c.slope);
    if (m > 0.0) pieces.push_back({m, c.length});
  }
  // Descending magnitudes: S(z) on [m_{k+1}, m_k) is the length of every
  // piece with magnitude >= m_k.
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& l, const Piece& r) { return l.magnitude > r.magnitude; });

  std::vector<Step> descending;  // (upper breakpoint, level just below it)
  double level = 0.0;
  std::size_t i = 0;
  while (i < pieces.size()) {
    const double m = pieces[i].magnitude;
    descending.push_back({m, level});
    while (i < pieces.size() && pieces[i].magnitude == m) {
      level += pieces[i].length;
      ++i;
    }
  }
  // descending[k] = {m_k, level on [m_k, m_{k-1})}; the level on [0, m_last)
  // is the full accumulated length.
  steps_.reserve(descending.size() + 1);
  steps_.push_back({0.0, level});
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) steps_.push_back(*it);
}

double SurvivalCurve::operator()(double z) const {
  if (z < 0.0) return domain_length_;
  auto it = std::upper_bound(steps_.begin(), steps_.end(), z,
                             [](double value, const Step& s) { return value < s.z; });
  return std::prev(it)->level;
}

double SurvivalCurve::integral() const {
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < steps_.size(); ++k) {
    sum += (steps_[k + 1].z - steps_[k].z) * steps_[k].level;
  }
  return sum;
}

SurvivalCurve survival_minus(const StandardizedFunction& g) {
  return SurvivalCurve(derivative(g), SlopePart::negative);
}

SurvivalCurve survival_plus(const StandardizedFunction& g) {
  return SurvivalCurve(derivative(g), SlopePart::positive);
}

namespace {

double normalized(const DerivativeProfile& d, Relation r) {
  switch (r) {
    case Relation::I:
      return loi_norm(d);
    case Relation::D:
      return lod_norm(d);
    case Relation::M:
      return lom_norm(d);
    default:
      throw InvalidParameter("not an index relation");
  }
}

// Values that agree to rounding count as ties, so reordering the same cells
// never flips a verdict.
bool at_most(double lhs, double rhs) { return lhs <= rhs || approx_equal(lhs, rhs); }

void require_variation(double tv_g, double tv_h) {
  if (!(tv_g > 0.0) || !(tv_h > 0.0)) {
    throw UndefinedComparison("comparison undefined: a function has zero total variation");
  }
}

std::optional<std::string> tv_note(double tv_g, double tv_h) {
  if (approx_equal(tv_g, tv_h)) return std::nullopt;
  std::ostringstream s;
  s.precision(12);
  s << "total variations differ (" << tv_g << " vs " << tv_h
    << "); raw indices are not comparable, normalized indices were used";
  return s.str();
}

OrderingVerdict compare_index(const DerivativeProfile& dg, const DerivativeProfile& dh,
                              Relation relation) {
  const double tv_g = total_variation(dg);
  const double tv_h = total_variation(dh);
  require_variation(tv_g, tv_h);
  OrderingVerdict v{relation, Holds::yes, std::nullopt, tv_note(tv_g, tv_h)};
  v.lhs = normalized(dg, relation);
  v.rhs = normalized(dh, relation);
  v.holds = at_most(v.lhs, v.rhs) ? Holds::yes : Holds::no;
  return v;
}

OrderingVerdict compare_curves(const DerivativeProfile& dg, const DerivativeProfile& dh,
                               Relation relation) {
  const SlopePart part = relation == Relation::SI ? SlopePart::negative : SlopePart::positive;
  const SurvivalCurve sg(dg, part);
  const SurvivalCurve sh(dh, part);
  require_variation(sg.total_variation(), sh.total_variation());

  std::vector<double> zs;
  zs.reserve(sg.steps().size() + sh.steps().size());
  for (const auto& s : sg.steps()) zs.push_back(s.z);
  for (const auto& s : sh.steps()) zs.push_back(s.z);
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  OrderingVerdict v{relation, Holds::yes, std::nullopt,
                    tv_note(sg.total_variation(), sh.total_variation())};
  // Both curves are constant on [zs[k], zs[k+1]), so checking the value at
  // each merged breakpoint covers every z > 0.
  for (std::size_t k = 0; k < zs.size(); ++k) {
    const double lg = sg(zs[k]) / sg.total_variation();
    const double lh = sh(zs[k]) / sh.total_variation();
    if (!at_most(lg, lh)) {
      // The last breakpoint has both levels at zero, so k + 1 exists here.
      v.holds = Holds::no;
      v.witness = 0.5 * (zs[k] + zs[k + 1]);
      v.lhs = lg;
      v.rhs = lh;
      return v;
    }
  }
  return v;
}

}  // namespace

OrderingVerdict compare(const StandardizedFunction& g, const StandardizedFunction& h,
                        Relation relation) {
  const DerivativeProfile dg = derivative(g);
  const DerivativeProfile dh = derivative(h);
  if (relation == Relation::SI || relation == Relation::SD) {
    return compare_curves(dg, dh, relation);
  }
  return compare_index(dg, dh, relation);
}

OrderingVerdict compare_strict(const StandardizedFunction& g, const StandardizedFunction& h,
                               Relation relation) {
  if (relation != Relation::SI && relation != Relation::SD) {
    throw InvalidParameter("compare_strict accepts only SI or SD");
  }
  return compare_curves(derivative(g), derivative(h), relation);
}

OrderingVerdict compare_or_incomparable(const StandardizedFunction& g,
                                        const StandardizedFunction& h, Relation relation) {
  try {
    return compare(g, h, relation);
  } catch (const UndefinedComparison& e) {
    return OrderingVerdict{relation, Holds::incomparable, std::nullopt, std::string(e.what())};
  }
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::I:
      return "I";
    case Relation::D:
      return "D";
    case Relation::M:
      return "M";
    case Relation::SI:
      return "SI";
    case Relation::SD:
      return "SD";
  }
  return "?";
}

std::string_view to_string(Holds h) {
  switch (h) {
    case Holds::yes:
      return "yes";
    case Holds::no:
      return "no";
    case Holds::incomparable:
      return "incomparable";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "I") return Relation::I;
  if (upper == "D") return Relation::D;
  if (upper == "M") return Relation::M;
  if (upper == "SI") return Relation::SI;
  if (upper == "SD") return Relation::SD;
  throw InvalidParameter("unknown relation '" + std::string(text) + "' (expected I, D, M, SI or SD)");
}

}  // namespace monoidx
