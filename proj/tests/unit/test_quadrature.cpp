#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "distembed/errors.hpp"
#include "distembed/quadrature.hpp"

using namespace distembed;

TEST(GaussLegendre, ExactForPolynomials) {
  const auto& rule = gauss_legendre_rule(8);
  ASSERT_EQ(rule.nodes.size(), 8u);
  // int_{-1}^{1} x^k dx, exact up to degree 15
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = (k % 2) ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(s, exact, 1e-14) << "degree " << k;
  }
}

TEST(Integrate, SmoothAndPeaked) {
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0).value,
              std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0).value,
              2.0 * std::atan(1.0 / 1e-2) / 1e-2, 1e-6);
  EXPECT_NEAR(integrate([](double x) { return std::sqrt(std::abs(x)); }, -1.0, 1.0).value,
              4.0 / 3.0, 1e-8);
}

TEST(Integrate, ReversedAndEmptyInterval) {
  auto f = [](double x) { return std::cos(x); };
  EXPECT_NEAR(integrate(f, 1.0, 0.0).value, -std::sin(1.0), 1e-14);
  EXPECT_EQ(integrate(f, 2.0, 2.0).value, 0.0);
}

TEST(Integrate, BoxIsIterated) {
  auto f = [](PointView x) { return std::exp(-x[0] * x[0] - 2.0 * x[1] * x[1]); };
  const double exact = std::numbers::pi / std::sqrt(2.0);
  EXPECT_NEAR(integrate(f, Box{{-9.0, 9.0}, {-9.0, 9.0}}).value, exact, 1e-10);
}

TEST(Integrate, BudgetIsEnforced) {
  QuadratureOptions opts;
  opts.max_evaluations = 200;
  EXPECT_THROW(integrate([](double x) { return std::sin(1.0 / (x + 1e-9)); }, 0.0, 1.0, opts),
               QuadratureBudgetExceeded);
}

TEST(Integrate, RejectsNonFiniteBounds) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, INFINITY), InvalidArgument);
}
