#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monoidx/error.hpp"
#include "monoidx/monotonicity.hpp"
#include "monoidx/numeric.hpp"
#include "monoidx/orderings.hpp"
#include "support/generators.hpp"

namespace monoidx {
namespace {

using testing::Rng;

constexpr double kPi = std::numbers::pi;

StandardizedFunction std_of(std::vector<double> xs, std::vector<double> ys) {
  return standardize(SampledFunction(std::move(xs), std::move(ys)));
}

// Direct level-set length: total length of cells whose slope part exceeds z.
double brute_survival(const DerivativeProfile& d, SlopePart part, double z) {
  double s = 0.0;
  for (const auto& c : d.cells()) {
    const double m = part == SlopePart::negative ? negative_part(c.slope) : positive_part(c.slope);
    if (m > z) s += c.length;
  }
  return s;
}

// Brute-force dominance of normalized curves: probe every slope magnitude of
// both functions, just above it, and midway to the next one.
bool brute_dominates(const DerivativeProfile& dg, const DerivativeProfile& dh, SlopePart part) {
  std::vector<double> probes{0.0};
  for (const auto* d : {&dg, &dh}) {
    for (const auto& c : d->cells()) probes.push_back(std::fabs(c.slope));
  }
  std::sort(probes.begin(), probes.end());
  const std::size_t base = probes.size();
  for (std::size_t i = 0; i + 1 < base; ++i) probes.push_back(0.5 * (probes[i] + probes[i + 1]));
  const double tg = total_variation(dg);
  const double th = total_variation(dh);
  for (double z : probes) {
    const double lg = brute_survival(dg, part, z) / tg;
    const double lh = brute_survival(dh, part, z) / th;
    if (lg > lh && !approx_equal(lg, lh)) return false;
  }
  return true;
}

TEST(SurvivalCurve, OneMinusCosine) {
  const auto g = standardize(testing::sine_example());
  const SurvivalCurve s = survival_minus(g);
  for (double z : {0.0, 0.25, 0.5, 0.75}) {
    EXPECT_NEAR(s(z), kPi / 2 - std::asin(z), 2e-3) << "z = " << z;
  }
  EXPECT_EQ(s(1.0), 0.0);
  EXPECT_NEAR(s(-1.0), 1.5 * kPi, 1e-12);
}

TEST(SurvivalCurve, LineAndTent) {
  const SurvivalCurve line = survival_minus(std_of({0, 1}, {0, 1}));
  EXPECT_EQ(line(0.0), 0.0);
  EXPECT_EQ(line.integral(), 0.0);

  const auto tent = std_of({0, 1, 2}, {0, 1, 0});
  const SurvivalCurve s = survival_minus(tent);
  EXPECT_EQ(s(0.0), 1.0);
  EXPECT_EQ(s(0.999), 1.0);
  EXPECT_EQ(s(1.0), 0.0);
  EXPECT_EQ(s(5.0), 0.0);
  ASSERT_EQ(s.steps().size(), 2u);
  EXPECT_EQ(s.part(), SlopePart::negative);
  EXPECT_EQ(survival_plus(tent)(0.5), 1.0);
}

TEST(SurvivalCurve, StepStructure) {
  // Slopes -3, 2, -1, -3, 0 over lengths 1, 2, 0.5, 0.25, 1.
  const auto g = std_of({0, 1, 3, 3.5, 3.75, 4.75}, {0, -3, 1, 0.5, -0.25, -0.25});
  const SurvivalCurve s = survival_minus(g);
  const auto steps = s.steps();
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].z, 0.0);
  EXPECT_DOUBLE_EQ(steps[0].level, 1.75);
  EXPECT_DOUBLE_EQ(steps[1].z, 1.0);
  EXPECT_DOUBLE_EQ(steps[1].level, 1.25);
  EXPECT_DOUBLE_EQ(steps[2].z, 3.0);
  EXPECT_EQ(steps[2].level, 0.0);
  EXPECT_DOUBLE_EQ(s.integral(), loi(g));
}

TEST(SurvivalCurve, MatchesBruteForceAndIsNonIncreasing) {
  Rng rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng)));
    for (SlopePart part : {SlopePart::negative, SlopePart::positive}) {
      const SurvivalCurve s(d, part);
      double previous = INFINITY;
      for (const auto& step : s.steps()) {
        EXPECT_LE(step.level, previous);
        previous = step.level;
        EXPECT_DOUBLE_EQ(s(step.z), brute_survival(d, part, step.z));
      }
      EXPECT_EQ(s.steps().back().level, 0.0);
      for (int k = 0; k < 20; ++k) {
        const double z = 12.0 * unit(rng);
        EXPECT_NEAR(s(z), brute_survival(d, part, z), 1e-12 * d.domain_length());
      }
    }
  }
}

TEST(SurvivalCurve, LayerCake) {
  Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng)));
    EXPECT_TRUE(approx_equal(SurvivalCurve(d, SlopePart::negative).integral(), loi(d)));
    EXPECT_TRUE(approx_equal(SurvivalCurve(d, SlopePart::positive).integral(), lod(d)));
  }
}

TEST(Compare, IndexExamples) {
  const auto g = standardize(testing::sine_example());
  const auto h = standardize(testing::cosine_example());
  const auto i = compare(g, h, Relation::I);
  EXPECT_EQ(i.holds, Holds::yes);
  EXPECT_NEAR(i.lhs, 1.0 / 3.0, 1e-3);
  EXPECT_NEAR(i.rhs, 2.0 / 3.0, 1e-3);
  EXPECT_FALSE(i.witness);
  EXPECT_EQ(compare(g, h, Relation::D).holds, Holds::no);
  EXPECT_EQ(compare(h, g, Relation::I).holds, Holds::no);
  for (Relation r : {Relation::I, Relation::D, Relation::M, Relation::SI, Relation::SD}) {
    EXPECT_EQ(compare(g, g, r).holds, Holds::yes);
  }
}

TEST(Compare, TotalVariationNote) {
  const auto g = std_of({0, 1, 2}, {0, 1, 0});
  const auto h = std_of({0, 1, 2}, {0, 2, 0});
  EXPECT_TRUE(compare(g, h, Relation::I).note.has_value());
  EXPECT_FALSE(compare(g, g, Relation::I).note.has_value());
}

TEST(Compare, ZeroVariation) {
  const auto flat = std_of({0, 1}, {2, 2});
  const auto line = std_of({0, 1}, {0, 1});
  EXPECT_THROW(compare(flat, line, Relation::I), UndefinedComparison);
  EXPECT_THROW(compare(line, flat, Relation::SI), UndefinedComparison);
  const auto v = compare_or_incomparable(flat, line, Relation::M);
  EXPECT_EQ(v.holds, Holds::incomparable);
  EXPECT_TRUE(v.note.has_value());
}

TEST(CompareStrict, LineDominatesEverything) {
  const auto line = std_of({0, 1}, {0, 1});
  const auto wiggle = std_of({0, 1, 2, 3}, {0, -2, 1, -1});
  const auto v = compare_strict(line, wiggle, Relation::SI);
  EXPECT_EQ(v.holds, Holds::yes);
  EXPECT_FALSE(v.witness);
  EXPECT_THROW(compare_strict(line, wiggle, Relation::I), InvalidParameter);
}

TEST(CompareStrict, TentAgainstReflectedTent) {
  // Both normalized S⁻ curves equal 1/2 on [0, 1) and 0 beyond, so the
  // relation holds in both directions.
  const auto tent = std_of({0, 1, 2}, {0, 1, 0});
  const auto reflected = std_of({0, 1, 2}, {0, -1, 0});
  const auto dt = derivative(tent);
  const auto dr = derivative(reflected);
  for (double z : {0.0, 0.5, 0.99}) {
    EXPECT_EQ(brute_survival(dt, SlopePart::negative, z) / total_variation(dt), 0.5);
    EXPECT_EQ(brute_survival(dr, SlopePart::negative, z) / total_variation(dr), 0.5);
  }
  EXPECT_TRUE(brute_dominates(dt, dr, SlopePart::negative));
  EXPECT_EQ(compare_strict(tent, reflected, Relation::SI).holds, Holds::yes);
  EXPECT_EQ(compare_strict(reflected, tent, Relation::SI).holds, Holds::yes);
}

TEST(CompareStrict, WitnessLiesInFailingRegion) {
  // g falls steeply on a short cell; h falls gently on a long one.
  const auto g = std_of({0, 1, 1.25}, {0, 1, 0});
  const auto h = std_of({0, 1, 3}, {0, 1, 0});
  const auto v = compare_strict(g, h, Relation::SI);
  ASSERT_EQ(v.holds, Holds::no);
  ASSERT_TRUE(v.witness);
  const auto dg = derivative(g);
  const auto dh = derivative(h);
  const double z = *v.witness;
  EXPECT_GT(z, 0.0);
  EXPECT_GT(brute_survival(dg, SlopePart::negative, z) / total_variation(dg),
            brute_survival(dh, SlopePart::negative, z) / total_variation(dh));
}

TEST(CompareStrict, PermutedCellsAreTies) {
  // Dyadic lengths and slopes keep every slope exact after re-accumulating
  // ordinates, so the two functions have identical normalized curves; only
  // the summation order of their indices differs.
  Rng rng(33);
  std::uniform_int_distribution<int> len(1, 64);
  std::uniform_int_distribution<int> slope(-40, 40);
  const auto build = [](const std::vector<SlopeCell>& cells) {
    std::vector<double> xs{0.0};
    std::vector<double> ys{0.0};
    for (const auto& c : cells) {
      xs.push_back(xs.back() + c.length);
      ys.push_back(ys.back() + c.length * c.slope);
    }
    return std_of(std::move(xs), std::move(ys));
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SlopeCell> cells(12);
    for (auto& c : cells) c = {len(rng) / 64.0, slope(rng) / 8.0};
    cells[0].slope = 1.5;
    cells[1].slope = -2.0;
    auto shuffled = cells;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto g = build(cells);
    const auto h = build(shuffled);
    for (Relation r : {Relation::I, Relation::D, Relation::M, Relation::SI, Relation::SD}) {
      EXPECT_EQ(compare(g, h, r).holds, Holds::yes);
      EXPECT_EQ(compare(h, g, r).holds, Holds::yes);
    }
  }
}

TEST(Compare, MatchesBruteForceDominance) {
  Rng rng(34);
  std::uniform_int_distribution<std::size_t> cells(2, 5);
  int yes = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = standardize(testing::random_piecewise(rng, cells(rng)));
    const auto h = standardize(testing::random_piecewise(rng, cells(rng)));
    const auto dg = derivative(g);
    const auto dh = derivative(h);
    for (auto [relation, part] : {std::pair{Relation::SI, SlopePart::negative},
                                  std::pair{Relation::SD, SlopePart::positive}}) {
      const auto v = compare_strict(g, h, relation);
      EXPECT_EQ(v.holds == Holds::yes, brute_dominates(dg, dh, part));
      EXPECT_EQ(v.witness.has_value(), v.holds == Holds::no);
      yes += v.holds == Holds::yes;
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(Compare, StrictImpliesIndex) {
  Rng rng(35);
  std::uniform_int_distribution<std::size_t> cells(2, 6);
  int strict_yes = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = standardize(testing::random_piecewise(rng, cells(rng)));
    const auto h = standardize(testing::random_piecewise(rng, cells(rng)));
    if (compare(g, h, Relation::SI).holds == Holds::yes) {
      ++strict_yes;
      EXPECT_EQ(compare(g, h, Relation::I).holds, Holds::yes);
    }
    if (compare(g, h, Relation::SD).holds == Holds::yes) {
      ++strict_yes;
      EXPECT_EQ(compare(g, h, Relation::D).holds, Holds::yes);
    }
  }
  EXPECT_GT(strict_yes, 100);
}

TEST(Compare, Duality) {
  Rng rng(36);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = standardize(testing::random_piecewise(rng));
    const auto h = standardize(testing::random_piecewise(rng));
    EXPECT_EQ(compare(g, h, Relation::I).holds, compare(h, g, Relation::D).holds);
  }
}

TEST(Relation, ParseAndPrint) {
  for (Relation r : {Relation::I, Relation::D, Relation::M, Relation::SI, Relation::SD}) {
    EXPECT_EQ(parse_relation(to_string(r)), r);
  }
  EXPECT_EQ(parse_relation("si"), Relation::SI);
  EXPECT_THROW(parse_relation("X"), InvalidParameter);
  EXPECT_EQ(to_string(Holds::incomparable), "incomparable");
}

}  // namespace
}  // namespace monoidx
