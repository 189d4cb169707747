#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "distembed/embedding.hpp"
#include "distembed/errors.hpp"
#include "distembed/kernel.hpp"
#include "distembed/spectral.hpp"
#include "test_support.hpp"

using namespace distembed;
using std::numbers::pi;

TEST(FourierTransform, DerivativeOfDirac) {
  const auto d = derivative(point_mass({0.0}), MultiIndex{1});
  const Point xi{2.0};
  const Complex ft = fourier_transform(d, xi);
  EXPECT_NEAR(ft.real(), 0.0, 1e-15);
  EXPECT_NEAR(ft.imag(), 2.0, 1e-15);
}

TEST(FourierTransform, MatchesDirectDefinition) {
  // FD(xi) = D(exp(-i <., xi>)), with d^p delta_x (f) = (-1)^|p| f^(p)(x)
  std::mt19937_64 rng(61);
  dtest::MeasureShape shape{1, 6, 3, 2.0, true};
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = dtest::random_measure(rng, shape);
    const double xi = std::uniform_real_distribution<double>(-4.0, 4.0)(rng);
    Complex direct = 0.0;
    for (const auto& a : d.atoms()) {
      const unsigned p = a.order[0];
      // d^p/dx^p exp(-i x xi) = (-i xi)^p exp(-i x xi)
      const Complex deriv = std::pow(Complex(0.0, -xi), static_cast<int>(p)) *
                            std::exp(Complex(0.0, -a.location[0] * xi));
      direct += a.weight * ((p % 2) ? -1.0 : 1.0) * deriv;
    }
    EXPECT_LT(std::abs(fourier_transform(d, Point{xi}) - direct), 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST(SpectralMeasures, TotalMassIsPsiAtZero) {
  EXPECT_NEAR(spectra::gaussian(1).total_mass(), 1.0, 1e-12);
  EXPECT_NEAR(spectra::gaussian(2, 0.5).total_mass(), 1.0, 1e-10);
  EXPECT_NEAR(spectra::sinc().total_mass(), 1.0, 1e-14);
  EXPECT_NEAR(spectra::cosine({1.0, 2.0}, {{1.0}, {0.5}}).total_mass(), 3.0, 1e-14);
  EXPECT_NEAR(spectra::constant(3, 4.0).total_mass(), 4.0, 1e-14);
  EXPECT_THROW(spectra::sinc().weighted_by_monomial(MultiIndex{1}), InvalidArgument);
}

TEST(SpectralMeasures, BochnerRepresentationReproducesProfile) {
  // psi(h) = int exp(-i h xi) dLambda(xi)
  for (double h : {0.0, 0.4, 1.7, 3.0}) {
    const auto g = integrate([&](double xi) { return std::cos(h * xi) * std::exp(-xi * xi / 4.0) /
                                                     (2.0 * std::sqrt(pi)); },
                             -16.0, 16.0);
    EXPECT_NEAR(g.value, kernels::gaussian()({h}, {0.0}).real(), 1e-12);
    const auto s = integrate([&](double xi) { return 0.5 * std::cos(h * xi); }, -1.0, 1.0);
    EXPECT_NEAR(s.value, kernels::sinc()({h}, {0.0}).real(), 1e-12);
  }
}

namespace {

void expect_gram_equals_spectral(const Kernel& k, std::uint64_t seed, std::size_t dim,
                                 unsigned max_order) {
  ASSERT_NE(k.spectrum(), nullptr) << k.name();
  std::mt19937_64 rng(seed);
  dtest::MeasureShape shape{dim, 5, max_order, 2.0, true};
  for (int trial = 0; trial < 15; ++trial) {
    const auto d = dtest::random_measure(rng, shape);
    const double gram = norm_squared(k, d);
    const double spec = spectral_norm_squared(*k.spectrum(), d);
    EXPECT_NEAR(spec, gram, 1e-6 * std::max(1.0, gram)) << k.name() << " trial " << trial;
  }
}

}  // namespace

TEST(SpectralNorm, AgreesWithGramRoute) {
  expect_gram_equals_spectral(kernels::gaussian(), 71, 1, 2);
  expect_gram_equals_spectral(kernels::gaussian(1, 0.5), 72, 1, 2);
  expect_gram_equals_spectral(kernels::sinc(), 73, 1, 2);
  expect_gram_equals_spectral(kernels::cosine({1.0, 0.3}, {{1.0}, {2.5}}), 74, 1, 2);
  expect_gram_equals_spectral(kernels::constant(1, 1.5), 75, 1, 2);
  expect_gram_equals_spectral(kernels::gaussian(2), 76, 2, 1);
  expect_gram_equals_spectral(shift(kernels::sinc(), 0.25), 77, 1, 1);
  expect_gram_equals_spectral(derivative_kernel(kernels::gaussian(), MultiIndex{1}), 78, 1, 1);
}

TEST(SpectralNorm, DimensionMismatch) {
  EXPECT_THROW(spectral_norm_squared(spectra::sinc(), point_mass({0.0, 1.0})), InvalidArgument);
}

TEST(PeriodicNull, VanishesOnTheLattice) {
  const double period = 2.0 * pi;
  const auto d = periodic_null_distribution(period, 16);
  EXPECT_NEAR(std::abs(total_mass(d)), 0.0, 1e-15);
  for (int n = -5; n <= 5; ++n) {
    EXPECT_LT(std::abs(fourier_transform(d, Point{2.0 * pi * n / period})), 1e-13) << n;
  }
  EXPECT_GT(std::abs(fourier_transform(d, Point{0.5})), 0.1);
  EXPECT_LT(norm(kernels::cosine({1.0}, {{1.0}}), d), 1e-7);
  EXPECT_GT(norm(kernels::gaussian(), d), 0.01);
  EXPECT_THROW(periodic_null_distribution(-1.0, 16), InvalidArgument);
  EXPECT_THROW(periodic_null_distribution(1.0, 1), InvalidArgument);
}

TEST(SincNull, SpectrumMissesTheBand) {
  const auto mu = sinc_null_measure(40.0 * pi, 8192);
  EXPECT_EQ(mu.size(), 8192u);
  EXPECT_LT(std::sqrt(spectral_norm_squared(spectra::sinc(), mu)), 1e-4);
  // Ff is a triangle of height pi centred at +-omega; probe away from its kinks
  EXPECT_NEAR(std::abs(fourier_transform(mu, Point{2.75})), 0.75 * pi, 1e-3);
  EXPECT_THROW(sinc_null_measure(10.0, 1024, 1.5), InvalidArgument);
}

TEST(Characteristic, FullSupport) {
  const auto v = diagnose_characteristic({SupportDescription::Kind::kFull, {}, {}}, 1);
  EXPECT_EQ(v.characteristic_class, CharacteristicClass::kCharacteristicToIntegrable);
  EXPECT_EQ(to_string(v.characteristic_class), "characteristic-to-DL1");
  EXPECT_FALSE(v.growth_constant.has_value());
}

TEST(Characteristic, BoundedBoxIsCompactOnly) {
  SupportDescription s{SupportDescription::Kind::kBoxes, {Box{{-1.0, 1.0}}}, {}};
  EXPECT_EQ(diagnose_characteristic(s, 1).characteristic_class,
            CharacteristicClass::kCharacteristicToCompactOnly);
  SupportDescription cover{SupportDescription::Kind::kBoxes,
                           {Box{{-INFINITY, 1.0}}, Box{{0.0, INFINITY}}},
                           {}};
  EXPECT_EQ(diagnose_characteristic(cover, 1).characteristic_class,
            CharacteristicClass::kCharacteristicToIntegrable);
  SupportDescription holes{SupportDescription::Kind::kBoxes,
                           {Box{{-INFINITY, 0.0}, {-INFINITY, INFINITY}},
                            Box{{0.0, INFINITY}, {-INFINITY, 0.0}}},
                           {}};
  EXPECT_EQ(diagnose_characteristic(holes, 2).characteristic_class,
            CharacteristicClass::kCharacteristicToCompactOnly);
}

TEST(Characteristic, AtomicSupport) {
  SupportDescription s{SupportDescription::Kind::kAtoms, {}, {{-1.0}, {1.0}, {0.0}, {3.0}}};
  const auto v = diagnose_characteristic(s, 1);
  EXPECT_EQ(v.characteristic_class, CharacteristicClass::kNotCharacteristicToCompact);
  ASSERT_TRUE(v.growth_constant.has_value());
  // radii 1, 1, 3: counts 2 at r = 1, 3 at r = 3
  EXPECT_DOUBLE_EQ(*v.growth_constant, 2.0);
  SupportDescription s2{SupportDescription::Kind::kAtoms, {}, {{1.0, 0.0}}};
  EXPECT_EQ(diagnose_characteristic(s2, 2).characteristic_class, CharacteristicClass::kInconclusive);
  EXPECT_THROW(diagnose_characteristic({SupportDescription::Kind::kAtoms, {}, {}}, 1),
               InvalidArgument);
}
