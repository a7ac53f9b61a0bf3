#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monoidx/error.hpp"
#include "monoidx/monotonicity.hpp"
#include "monoidx/numeric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace monoidx {
namespace {

using testing::Rng;

constexpr double kPi = std::numbers::pi;

StandardizedFunction std_of(std::vector<double> xs, std::vector<double> ys) {
  return standardize(SampledFunction(std::move(xs), std::move(ys)));
}

const StandardizedFunction& one_minus_cos() {
  static const auto g = standardize(testing::sine_example());
  return g;
}

const StandardizedFunction& sine_on_standard_interval() {
  static const auto h = standardize(testing::cosine_example());
  return h;
}

TEST(Loi, Examples) {
  EXPECT_NEAR(loi(one_minus_cos()), 1.0, 1e-3);
  EXPECT_NEAR(loi(sine_on_standard_interval()), 2.0, 1e-3);
  EXPECT_EQ(loi(std_of({0, 1}, {0, 1})), 0.0);
}

TEST(Lod, Examples) {
  EXPECT_NEAR(lod(one_minus_cos()), 2.0, 1e-3);
  EXPECT_EQ(lod(std_of({0, 1}, {0, -1})), 0.0);
  EXPECT_EQ(lod(std_of({0, 1, 2}, {0, 1, 0})), 1.0);
}

TEST(Lom, Examples) {
  EXPECT_NEAR(lom(one_minus_cos()), 2.0, 2e-3);
  EXPECT_EQ(lom(std_of({0, 1}, {0, 1})), 0.0);
  EXPECT_EQ(lom(std_of({0, 1, 2}, {0, 1, 0})), 2.0);
}

TEST(NormalizedIndices, Examples) {
  EXPECT_NEAR(loi_norm(one_minus_cos()), 1.0 / 3.0, 1e-3);
  EXPECT_NEAR(lod_norm(one_minus_cos()), 2.0 / 3.0, 1e-3);
  EXPECT_NEAR(lom_norm(one_minus_cos()), 2.0 / 3.0, 1e-3);
  EXPECT_NEAR(loi_norm(sine_on_standard_interval()), 2.0 / 3.0, 1e-3);

  const auto line = std_of({0, 1}, {0, 1});
  EXPECT_EQ(loi_norm(line), 0.0);
  EXPECT_EQ(lod_norm(line), 1.0);
  EXPECT_EQ(lom_norm(line), 0.0);
}

TEST(NormalizedIndices, UndefinedForConstant) {
  const auto flat = std_of({0, 1, 2}, {4, 4, 4});
  EXPECT_THROW(loi_norm(flat), UndefinedIndex);
  EXPECT_THROW(lod_norm(flat), UndefinedIndex);
  EXPECT_THROW(lom_norm(flat), UndefinedIndex);
  EXPECT_THROW(lom_norm_closed_form(derivative(flat)), UndefinedIndex);
}

TEST(LoiP, Examples) {
  // sqrt(∫_π^{3π/2} sin² dx) = sqrt(π/4); the Simpson oracle confirms it.
  const double oracle =
      std::sqrt(testing::simpson([](double x) { return std::sin(x) * std::sin(x); }, kPi, 1.5 * kPi, 2000));
  ASSERT_NEAR(oracle, 0.886226925452758, 1e-12);
  EXPECT_NEAR(loi_p(one_minus_cos(), 2.0), 0.886226925452758, 1e-3);
  EXPECT_EQ(loi_p(std_of({0, 1}, {0, 1}), 3.5), 0.0);
  EXPECT_THROW(loi_p(one_minus_cos(), 0.5), InvalidParameter);
  EXPECT_THROW(lod_p(one_minus_cos(), NAN), InvalidParameter);
}

TEST(LoiP, PEqualsOneIsLoi) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng)));
    EXPECT_EQ(loi_p(d, 1.0), loi(d));
    EXPECT_EQ(lod_p(d, 1.0), lod(d));
  }
}

TEST(LoiP, MonotoneInPForUnitInterval) {
  // On [0,1] the L_p norm is non-decreasing in p (Jensen).
  const auto g = std_of({0, 0.25, 0.5, 1.0}, {0, -1, 0.5, -2});
  double previous = 0.0;
  for (double p : {1.0, 1.5, 2.0, 4.0, 8.0}) {
    const double v = loi_p(g, p);
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(Report, SineAndCosine) {
  const auto s = report(testing::sine_example());
  EXPECT_NEAR(s.loi, 1.0, 1e-3);
  EXPECT_NEAR(s.lod, 2.0, 1e-3);
  EXPECT_NEAR(s.lom, 2.0, 1e-3);
  EXPECT_NEAR(s.tv, 3.0, 1e-3);
  EXPECT_NEAR(s.a, -kPi / 2, 1e-15);
  EXPECT_NEAR(s.b, kPi, 1e-15);

  const auto c = report(testing::cosine_example(), 2.0);
  EXPECT_NEAR(c.loi, 2.0, 1e-3);
  EXPECT_NEAR(c.lod, 1.0, 1e-3);
  EXPECT_NEAR(c.lom, 2.0, 1e-3);
  ASSERT_TRUE(c.loi_p.has_value());
  EXPECT_EQ(*c.p, 2.0);
}

TEST(Report, ConstantLeavesNormalizedEmpty) {
  const auto r = report(SampledFunction({0, 1, 2}, {3, 3, 3}));
  EXPECT_EQ(r.loi, 0.0);
  EXPECT_EQ(r.lod, 0.0);
  EXPECT_EQ(r.lom, 0.0);
  EXPECT_EQ(r.tv, 0.0);
  EXPECT_FALSE(r.loi_norm);
  EXPECT_FALSE(r.lod_norm);
  EXPECT_FALSE(r.lom_norm);
}

TEST(Report, IntervalFormEqualsStandardizedForm) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_piecewise(rng, 12, 5.0, -4.0, 2.0);
    const auto r = report(f);
    const auto d = derivative(standardize(f));
    EXPECT_EQ(r.loi, loi(d));
    EXPECT_EQ(r.lod, lod(d));
    EXPECT_EQ(r.lom, lom(d));
    EXPECT_EQ(*r.loi_norm, loi_norm(d));
    EXPECT_EQ(*r.lom_norm, lom_norm(d));
  }
}

// --- properties over random piecewise-linear functions ----------------------

TEST(Properties, A1TranslationInvariance) {
  // Dyadic data keeps y + alpha exact, so the model sees the same increments.
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_dyadic_piecewise(rng);
    const double alpha = testing::random_dyadic_shift(rng);
    const auto d = derivative(standardize(f));
    const auto ds = derivative(standardize(testing::map_values(f, [&](double y) { return y + alpha; })));
    EXPECT_EQ(loi(d), loi(ds));
    EXPECT_EQ(lod(d), lod(ds));
  }
}

TEST(Properties, A2PositiveHomogeneity) {
  Rng rng(102);
  std::uniform_real_distribution<double> scale(0.0, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_piecewise(rng);
    const double beta = scale(rng);
    const auto g = standardize(f);
    const auto bg = standardize(testing::map_values(f, [&](double y) { return beta * y; }));
    EXPECT_TRUE(approx_equal(loi(bg), beta * loi(g)));
    EXPECT_TRUE(approx_equal(lod(bg), beta * lod(g)));
  }
}

TEST(Properties, A3Reflection) {
  Rng rng(103);
  std::uniform_real_distribution<double> scale(-20.0, -0.01);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_piecewise(rng);
    const auto g = standardize(f);
    const auto neg = standardize(testing::map_values(f, [](double y) { return -y; }));
    EXPECT_EQ(loi(neg), lod(g));
    const double beta = scale(rng);
    const auto bg = standardize(testing::map_values(f, [&](double y) { return beta * y; }));
    EXPECT_TRUE(approx_equal(loi(bg), -beta * lod(g)));
  }
}

TEST(Properties, A4Decomposition) {
  Rng rng(104);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng)));
    const double tv = total_variation(d);
    EXPECT_TRUE(approx_equal(loi(d) + lod(d), tv));
    EXPECT_LE(std::min(loi(d), lod(d)), tv / 2 * (1 + 1e-12));
    EXPECT_LE(lom(d), tv * (1 + 1e-12));
    EXPECT_EQ(lom(d), 2.0 * std::min(loi(d), lod(d)));
  }
}

TEST(Properties, B1RangeAndExtremes) {
  Rng rng(105);
  std::uniform_real_distribution<double> slope(0.01, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng)));
    for (double v : {loi_norm(d), lod_norm(d), lom_norm(d)}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    // Mixed-sign random functions are neither extreme.
    bool has_pos = false;
    bool has_neg = false;
    for (const auto& c : d.cells()) {
      has_pos |= c.slope > 0;
      has_neg |= c.slope < 0;
    }
    EXPECT_EQ(loi_norm(d) == 0.0, !has_neg);
    EXPECT_EQ(loi_norm(d) == 1.0, !has_pos);
    EXPECT_EQ(lom_norm(d) == 0.0, !has_pos || !has_neg);

    // Non-decreasing and non-increasing variants of the same grid.
    std::vector<SlopeCell> up(d.cells().begin(), d.cells().end());
    for (auto& c : up) c.slope = slope(rng);
    std::vector<SlopeCell> down = up;
    for (auto& c : down) c.slope = -c.slope;
    up[0].slope = 0.0;  // flat pieces are still monotone
    const DerivativeProfile du(up);
    const DerivativeProfile dd(down);
    EXPECT_EQ(loi_norm(du), 0.0);
    EXPECT_EQ(lod_norm(du), 1.0);
    EXPECT_EQ(lom_norm(du), 0.0);
    EXPECT_EQ(loi_norm(dd), 1.0);
    EXPECT_EQ(lod_norm(dd), 0.0);
    EXPECT_EQ(lom_norm(dd), 0.0);
  }
}

TEST(Properties, AddOneAndClosedFormLom) {
  Rng rng(106);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng)));
    EXPECT_TRUE(approx_equal(loi_norm(d) + lod_norm(d), 1.0));
    EXPECT_TRUE(approx_equal(lom_norm(d), lom_norm_closed_form(d)))
        << lom_norm(d) << " vs " << lom_norm_closed_form(d);
    EXPECT_TRUE(approx_equal(lom_norm(d), 2.0 * std::min(loi_norm(d), lod_norm(d))));
  }
}

TEST(Properties, B2B3B4Invariances) {
  Rng rng(107);
  std::uniform_real_distribution<double> scale(-10.0, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_dyadic_piecewise(rng);
    double beta = scale(rng);
    if (beta == 0.0) beta = 1.0;
    const double alpha = testing::random_dyadic_shift(rng);
    const auto g = standardize(f);
    const auto shifted = standardize(testing::map_values(f, [&](double y) { return y + alpha; }));
    const auto scaled = standardize(testing::map_values(f, [&](double y) { return beta * y; }));
    const auto neg = standardize(testing::map_values(f, [](double y) { return -y; }));

    EXPECT_EQ(loi_norm(shifted), loi_norm(g));
    EXPECT_TRUE(approx_equal(lom_norm(scaled), lom_norm(g)));
    if (beta > 0) EXPECT_TRUE(approx_equal(loi_norm(scaled), loi_norm(g)));
    EXPECT_EQ(lod_norm(neg), loi_norm(g));
  }
}

// The infimum over non-decreasing f of ∫|g' - f'| is attained at f' = (g')^+.
TEST(Properties, LoiIsTheDistanceToNonDecreasing) {
  Rng rng(108);
  std::uniform_int_distribution<std::size_t> cells(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = derivative(standardize(testing::random_piecewise(rng, cells(rng))));
    const auto r = testing::distance_to_nondecreasing(d, rng);
    EXPECT_TRUE(approx_equal(r.at_candidate, loi(d)));
    EXPECT_GE(r.best_other, loi(d) * (1 - 1e-12));
  }
}

}  // namespace
}  // namespace monoidx
