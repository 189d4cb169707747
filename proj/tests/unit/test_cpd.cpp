#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "distembed/cpd.hpp"
#include "distembed/errors.hpp"
#include "test_support.hpp"

using namespace distembed;

namespace {

GeneralizedMeasure two_point(double a, double b) {
  return linear_combine({{1.0, point_mass({a})}, {-1.0, point_mass({b})}});
}

}  // namespace

TEST(CpdQuadraticForm, DipoleUnderNegativeAbs) {
  EXPECT_EQ(cpd_quadratic_form(cpd_kernels::negative_abs(), two_point(1.0, 2.0)), 2.0);
}

TEST(CpdQuadraticForm, MatchesBruteForceAndIsNonNegative) {
  const auto k = cpd_kernels::negative_abs();
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const auto mu = dtest::random_zero_mass(rng, 2 + trial % 6, -3.0, 3.0);
    double brute = 0.0;
    for (const auto& a : mu.atoms()) {
      for (const auto& b : mu.atoms()) {
        brute -= a.weight.real() * b.weight.real() * std::abs(a.location[0] - b.location[0]);
      }
    }
    const double form = cpd_quadratic_form(k, mu);
    EXPECT_NEAR(form, brute, 1e-12 * (1.0 + std::abs(brute)));
    EXPECT_GE(form, -1e-12);
  }
}

TEST(CpdQuadraticForm, InvariantUnderAddingConstants) {
  // psi + c gives the same form on zero-mass measures
  const CpdKernel base([](double h) { return -std::abs(h); });
  const CpdKernel shifted([](double h) { return 7.5 - std::abs(h); });
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const auto mu = dtest::random_zero_mass(rng, 5, -2.0, 2.0);
    EXPECT_NEAR(cpd_quadratic_form(base, mu), cpd_quadratic_form(shifted, mu), 1e-10);
  }
}

TEST(CpdQuadraticForm, RejectsInvalidMeasures) {
  const auto k = cpd_kernels::negative_abs();
  EXPECT_THROW(cpd_quadratic_form(k, point_mass({1.0})), InvalidArgument);
  EXPECT_THROW(cpd_quadratic_form(k, derivative(two_point(0.0, 1.0), MultiIndex{1})),
               InvalidArgument);
  EXPECT_THROW(cpd_quadratic_form(k, two_point(0.0, 1.0) + point_mass({0.0, 1.0})),
               InvalidArgument);
  const auto complex_mu =
      linear_combine({{{0.0, 1.0}, point_mass({0.0})}, {{0.0, -1.0}, point_mass({1.0})}});
  EXPECT_THROW(cpd_quadratic_form(k, complex_mu), InvalidArgument);
}

TEST(CpdSpectralForm, AgreesWithQuadraticForm) {
  const auto k = cpd_kernels::negative_abs();
  EXPECT_NEAR(cpd_spectral_form(k, two_point(1.0, 2.0)), 2.0, 2e-4);
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const auto mu = dtest::random_zero_mass(rng, 4, -2.0, 2.0);
    const double direct = cpd_quadratic_form(k, mu);
    EXPECT_NEAR(cpd_spectral_form(k, mu), direct, 1e-4 * std::max(1.0, direct));
  }
}

TEST(CpdSpectralForm, AtomsAndPolynomialPart) {
  // chi = delta_1 + delta_-1 gives 2 (cos(h) - 1); P0(h) = 3 - h^2
  GeneralizedBochnerData data;
  data.atoms = {{1.0, 1.0}, {-1.0, 1.0}};
  data.p0_constant = 3.0;
  data.p0_quadratic = -1.0;
  const CpdKernel k([](double h) { return 2.0 * (std::cos(h) - 1.0) + 3.0 - h * h; }, data);
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const auto mu = dtest::random_zero_mass(rng, 5, -2.0, 2.0);
    const double direct = cpd_quadratic_form(k, mu);
    EXPECT_NEAR(cpd_spectral_form(k, mu), direct, 1e-10 * (1.0 + std::abs(direct)));
  }
}

TEST(CpdSpectralForm, NeedsBochnerData) {
  const CpdKernel k([](double h) { return -std::abs(h); });
  EXPECT_THROW(cpd_spectral_form(k, two_point(0.0, 1.0)), InvalidArgument);
  GeneralizedBochnerData bad;
  bad.atoms = {{0.0, 1.0}};
  EXPECT_THROW(CpdKernel([](double) { return 0.0; }, bad), InvalidArgument);
  GeneralizedBochnerData positive_quadratic;
  positive_quadratic.p0_quadratic = 1.0;
  EXPECT_THROW(CpdKernel([](double) { return 0.0; }, positive_quadratic), InvalidArgument);
}

TEST(Brownian, RatioIsOneHalf) {
  std::mt19937_64 rng(103);
  std::vector<GeneralizedMeasure> probes;
  for (int i = 0; i < 10; ++i) {
    probes.push_back(dtest::random_zero_mass(rng, 4, 0.0, 3.0));
    probes.push_back(dtest::random_zero_mass(rng, 3, -3.0, -0.1));
  }
  const auto report = brownian_correspondence_check(probes, 1e-10);
  EXPECT_TRUE(report.consistent);
  EXPECT_NEAR(report.fitted_constant, 0.5, 1e-12);
  EXPECT_EQ(report.probes.size(), probes.size());
}

TEST(Brownian, MixedSignsAreRefused) {
  std::vector<GeneralizedMeasure> probes{two_point(-1.0, 1.0)};
  EXPECT_THROW(brownian_correspondence_check(probes, 1e-10), UnsupportedConfiguration);
  EXPECT_THROW(brownian_correspondence_check({}, 1e-10), InvalidArgument);
}
