#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "distembed/embedding.hpp"
#include "distembed/errors.hpp"
#include "distembed/kernel.hpp"
#include "test_support.hpp"

using namespace distembed;
using dtest::richardson_derivative;

namespace {

struct Profile1d {
  const char* name;
  Kernel kernel;
  std::function<double(double)> psi;
};

// Profiles written out independently of the library.
std::vector<Profile1d> smooth_profiles() {
  return {
      {"gaussian", kernels::gaussian(1, 1.0), [](double h) { return std::exp(-h * h); }},
      {"gaussian_s2", kernels::gaussian(1, 2.0), [](double h) { return std::exp(-h * h / 4.0); }},
      {"sinc", kernels::sinc(), [](double h) { return h == 0.0 ? 1.0 : std::sin(h) / h; }},
      {"cosine", kernels::cosine({1.0, 0.5}, {{1.0}, {3.0}}),
       [](double h) { return std::cos(h) + 0.5 * std::cos(3.0 * h); }},
      {"imq", kernels::inverse_multiquadric(1, 1.5, 0.5),
       [](double h) { return 1.0 / std::sqrt(1.0 + h * h / 2.25); }},
      {"constant", kernels::constant(1, 2.0), [](double) { return 2.0; }},
  };
}

}  // namespace

TEST(Kernel, GaussianClosedFormExamples) {
  const auto k = kernels::gaussian();
  EXPECT_NEAR(k({0.0}, {1.0}).real(), std::exp(-1.0), 1e-15);
  const Point z{0.0};
  // d/dx d/dy exp(-(x - y)^2) = (2 - 4 (x - y)^2) exp(-(x - y)^2)
  EXPECT_NEAR(k.derivative(MultiIndex{1}, MultiIndex{1}, z, z).real(), 2.0, 1e-14);
  const Point a{0.3};
  const Point b{-0.4};
  EXPECT_NEAR(k.derivative(MultiIndex{1}, MultiIndex{1}, a, b).real(),
              (2.0 - 4.0 * 0.49) * std::exp(-0.49), 1e-14);
}

TEST(Kernel, AnalyticDerivativesMatchIndependentDifferences) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<unsigned> ord(0, 2);
  for (const auto& prof : smooth_profiles()) {
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned p = ord(rng);
      const unsigned q = ord(rng);
      const Point x{u(rng)};
      const Point y{u(rng)};
      // d^(p,q) psi(x - y) = (-1)^q psi^(p+q)(x - y)
      const double expected = ((q % 2) ? -1.0 : 1.0) *
                              (p + q == 0 ? prof.psi(x[0] - y[0])
                                          : richardson_derivative(prof.psi, x[0] - y[0], p + q));
      const Complex got = prof.kernel.derivative(MultiIndex{p}, MultiIndex{q}, x, y);
      EXPECT_LT(dtest::relative_error(got, expected), 1e-6)
          << prof.name << " p=" << p << " q=" << q << " x=" << x[0] << " y=" << y[0];
    }
  }
}

TEST(Kernel, SincNearDiagonalIsAccurate) {
  const auto k = kernels::sinc();
  // sinc''(0) = -1/3, sinc''''(0) = 1/5
  const Point z{0.0};
  EXPECT_NEAR(k.derivative(MultiIndex{1}, MultiIndex{1}, z, z).real(), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(k.derivative(MultiIndex{2}, MultiIndex{2}, z, z).real(), 1.0 / 5.0, 1e-14);
  const Point t{1e-9};
  EXPECT_NEAR(k(t, z).real(), 1.0, 1e-15);
}

TEST(Kernel, MultivariateGaussianMixedPartials) {
  const auto k = kernels::gaussian(2, 1.3);
  const Point x{0.2, -0.5};
  const Point y{-0.1, 0.4};
  auto slice = [&](double t) {
    const double h0 = t - y[0];
    const double h1 = x[1] - y[1];
    return std::exp(-(h0 * h0 + h1 * h1) / (1.3 * 1.3));
  };
  const double oracle = richardson_derivative(slice, x[0], 2);
  EXPECT_NEAR(k.derivative(MultiIndex{2, 0}, MultiIndex{0, 0}, x, y).real(), oracle, 1e-8);
  const Complex fd = finite_difference_derivative(k, MultiIndex{1, 1}, MultiIndex{0, 1}, x, y);
  EXPECT_LT(dtest::relative_error(k.derivative(MultiIndex{1, 1}, MultiIndex{0, 1}, x, y), fd), 1e-5);
}

TEST(Kernel, ImqInTwoDimensionsAgreesWithFiniteDifferences) {
  const auto k = kernels::inverse_multiquadric(2, 0.8, 1.5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Point x = dtest::random_point(rng, 2, 2.0);
    const Point y = dtest::random_point(rng, 2, 2.0);
    const MultiIndex p = dtest::random_multi_index(rng, 2, 2);
    const MultiIndex q = dtest::random_multi_index(rng, 2, 2);
    const Complex fd = finite_difference_derivative(k, p, q, x, y);
    EXPECT_LT(dtest::relative_error(k.derivative(p, q, x, y), fd), 1e-5);
  }
}

TEST(Kernel, HermitianSymmetry) {
  std::mt19937_64 rng(5);
  for (const auto& prof : smooth_profiles()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = dtest::random_point(rng, 1, 3.0);
      const Point y = dtest::random_point(rng, 1, 3.0);
      EXPECT_LT(std::abs(prof.kernel(x, y) - std::conj(prof.kernel(y, x))), 1e-14) << prof.name;
      // d^(p,q) k(x, y) = conj d^(q,p) k(y, x)
      const MultiIndex p{1};
      const MultiIndex q{2};
      EXPECT_LT(std::abs(prof.kernel.derivative(p, q, x, y) -
                         std::conj(prof.kernel.derivative(q, p, y, x))),
                1e-12)
          << prof.name;
    }
  }
}

TEST(Kernel, StationaryDerivativesCommute) {
  // d^(p,q) k(x, y) = (-1)^|q| d^(p+q,0) k(x - y, 0)
  const auto k = kernels::gaussian(2, 0.9);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Point x = dtest::random_point(rng, 2, 1.5);
    const Point y = dtest::random_point(rng, 2, 1.5);
    const MultiIndex p = dtest::random_multi_index(rng, 2, 2);
    const MultiIndex q = dtest::random_multi_index(rng, 2, 2);
    const Point h{x[0] - y[0], x[1] - y[1]};
    const Point zero{0.0, 0.0};
    const double sign = (q.order() % 2) ? -1.0 : 1.0;
    EXPECT_LT(std::abs(k.derivative(p, q, x, y) -
                       sign * k.derivative(p + q, MultiIndex::zero(2), h, zero)),
              1e-12);
  }
}

TEST(Kernel, SmoothnessLimitsAreEnforced) {
  const Point z{0.0};
  EXPECT_THROW((void)kernels::laplace().derivative(MultiIndex{1}, MultiIndex{0}, z, z),
               UnsupportedOrder);
  EXPECT_THROW((void)kernels::brownian().derivative(MultiIndex{0}, MultiIndex{1}, z, z),
               UnsupportedOrder);
  EXPECT_NO_THROW((void)kernels::laplace().derivative(MultiIndex{0}, MultiIndex{0}, z, z));
  EXPECT_THROW((void)kernels::gaussian(2)({0.0}, {0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(kernels::gaussian(1, 0.0), InvalidArgument);
  EXPECT_THROW(kernels::cosine({-1.0}, {{1.0}}), InvalidArgument);
}

TEST(Kernel, LaplaceAndBrownianValues) {
  EXPECT_NEAR(kernels::laplace(1, 2.0)({1.0}, {-1.0}).real(), std::exp(-1.0), 1e-15);
  EXPECT_EQ(kernels::brownian()({2.0}, {3.0}).real(), 2.0);
  EXPECT_EQ(kernels::brownian()({-2.0}, {3.0}).real(), 2.0);
  EXPECT_EQ(kernels::brownian()({-2.0}, {-3.0}).real(), 2.0);
}

TEST(Kernel, FiniteDifferenceFallbackForUserKernels) {
  Kernel k("user", 1, Smoothness::order(2),
           [](PointView x, PointView y) { return Complex(std::exp(x[0] * y[0])); }, nullptr);
  const Point x{0.3};
  const Point y{-0.7};
  // d_x d_y exp(x y) = (1 + x y) exp(x y)
  EXPECT_NEAR(k.derivative(MultiIndex{1}, MultiIndex{1}, x, y).real(),
              (1.0 + x[0] * y[0]) * std::exp(x[0] * y[0]), 1e-7);
}

TEST(Combinators, ShiftSumScale) {
  const auto g = kernels::gaussian();
  const auto s = kernels::sinc();
  const Point x{0.4};
  const Point y{-1.1};
  EXPECT_NEAR((shift(g, 3.0)(x, y) - g(x, y)).real(), 3.0, 1e-15);
  EXPECT_LT(std::abs(sum(g, s)(x, y) - g(x, y) - s(x, y)), 1e-15);
  EXPECT_LT(std::abs(scale(g, 2.5)(x, y) - 2.5 * g(x, y)), 1e-15);
  // the shift does not touch derivatives
  EXPECT_LT(std::abs(shift(g, 3.0).derivative(MultiIndex{1}, MultiIndex{0}, x, y) -
                     g.derivative(MultiIndex{1}, MultiIndex{0}, x, y)),
            1e-15);
  EXPECT_EQ(sum(g, kernels::laplace()).smoothness(), Smoothness::order(0));
  EXPECT_THROW(shift(g, -1.0), InvalidArgument);
  EXPECT_THROW(scale(g, 0.0), InvalidArgument);
  EXPECT_THROW(sum(g, kernels::gaussian(2)), InvalidArgument);
}

TEST(Combinators, CenteredKernelMatchesDefinition) {
  const auto k = kernels::gaussian();
  const auto nu0 = linear_combine({{0.5, point_mass({0.0})}, {0.5, point_mass({1.0})}});
  const auto k0 = center(k, nu0);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Point x = dtest::random_point(rng, 1, 2.0);
    const Point y = dtest::random_point(rng, 1, 2.0);
    // <delta_x - nu0, delta_y - nu0>_k written out by hand
    auto kk = [&](double a, double b) { return std::exp(-(a - b) * (a - b)); };
    const double expected = kk(x[0], y[0]) - 0.5 * (kk(x[0], 0.0) + kk(x[0], 1.0)) -
                            0.5 * (kk(0.0, y[0]) + kk(1.0, y[0])) +
                            0.25 * (kk(0, 0) + 2 * kk(0, 1) + kk(1, 1));
    EXPECT_NEAR(k0(x, y).real(), expected, 1e-14);
    const Complex fd = finite_difference_derivative(k0, MultiIndex{1}, MultiIndex{2}, x, y);
    EXPECT_LT(dtest::relative_error(k0.derivative(MultiIndex{1}, MultiIndex{2}, x, y), fd), 1e-6);
  }
  EXPECT_THROW(center(k, derivative(point_mass({0.0}), MultiIndex{1})), InvalidArgument);
}

TEST(Combinators, DerivativeKernelIsTheDerivativeEmbedding) {
  // k_p(x, y) = d^(p,p) k(x, y) and |D|_{k_p} = |d^p D|_k
  const auto k = kernels::gaussian(1, 1.2);
  const MultiIndex p{1};
  const auto kp = derivative_kernel(k, p);
  std::mt19937_64 rng(29);
  dtest::MeasureShape shape{1, 6, 1, 2.0, true};
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = dtest::random_measure(rng, shape);
    EXPECT_NEAR(norm_squared(kp, d), norm_squared(k, derivative(d, p)),
                1e-10 * (1.0 + norm_squared(kp, d)));
  }
  EXPECT_THROW(derivative_kernel(kernels::laplace(), p), UnsupportedOrder);
}

TEST(Combinators, DerivativeKernelSpectrum) {
  // spectrum of d^(p,p) k is xi^(2p) Lambda; its total mass equals d^(p,p) k(0, 0)
  const auto kp = derivative_kernel(kernels::gaussian(), MultiIndex{1});
  ASSERT_NE(kp.spectrum(), nullptr);
  EXPECT_NEAR(kp.spectrum()->total_mass(), 2.0, 1e-9);
  const auto kpp = derivative_kernel(kernels::sinc(), MultiIndex{2});
  ASSERT_NE(kpp.spectrum(), nullptr);
  EXPECT_NEAR(kpp.spectrum()->total_mass(), 0.2, 1e-12);
}

TEST(FiniteDifferences, ThirdOrderAgreementForSmoothKernels) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<unsigned> ord(0, 3);
  for (const auto& prof : smooth_profiles()) {
    for (int trial = 0; trial < 30; ++trial) {
      const Point x = dtest::random_point(rng, 1, 2.0);
      const Point y = dtest::random_point(rng, 1, 2.0);
      const MultiIndex p{ord(rng)};
      const MultiIndex q{ord(rng)};
      const Complex exact = prof.kernel.derivative(p, q, x, y);
      const Complex fd = finite_difference_derivative(prof.kernel, p, q, x, y);
      EXPECT_LE(std::abs(exact - fd), 1e-5 * (1.0 + std::abs(exact)))
          << prof.name << " p=" << p[0] << " q=" << q[0];
    }
  }
}

TEST(FiniteDifferences, ErrorShrinksWhenStepIsHalved) {
  const auto k = kernels::gaussian();
  const Point x{0.4};
  const Point y{-0.3};
  for (unsigned n = 1; n <= 3; ++n) {
    const MultiIndex p{n};
    const MultiIndex q{1};
    const Complex exact = k.derivative(p, q, x, y);
    const double coarse = std::abs(finite_difference_derivative(k, p, q, x, y, 0.1) - exact);
    const double fine = std::abs(finite_difference_derivative(k, p, q, x, y, 0.05) - exact);
    EXPECT_LT(fine, 0.5 * coarse) << n;
  }
}
