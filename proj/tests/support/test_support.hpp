#pragma once

// Shared generators and independent oracles for the test suites. Nothing in
// here calls into the library routines it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "distembed/measure.hpp"

namespace distembed::dtest {

struct MeasureShape {
  std::size_t dimension = 1;
  std::size_t max_atoms = 6;
  unsigned max_order = 0;  // per-atom total order bound
  double half_width = 2.0;
  bool complex_weights = true;
};

inline MultiIndex random_multi_index(std::mt19937_64& rng, std::size_t dim, unsigned max_order) {
  std::uniform_int_distribution<unsigned> total_dist(0, max_order);
  std::uniform_int_distribution<std::size_t> axis_dist(0, dim - 1);
  std::vector<unsigned> e(dim, 0);
  const unsigned total = total_dist(rng);
  for (unsigned i = 0; i < total; ++i) ++e[axis_dist(rng)];
  return MultiIndex(std::move(e));
}

inline Point random_point(std::mt19937_64& rng, std::size_t dim, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  Point x(dim);
  for (auto& v : x) v = u(rng);
  return x;
}

inline GeneralizedMeasure random_measure(std::mt19937_64& rng, const MeasureShape& shape) {
  std::uniform_int_distribution<std::size_t> count(1, shape.max_atoms);
  std::normal_distribution<double> w(0.0, 1.0);
  std::vector<Atom> atoms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex weight(w(rng), shape.complex_weights ? w(rng) : 0.0);
    atoms.push_back(Atom{weight, random_multi_index(rng, shape.dimension, shape.max_order),
                         random_point(rng, shape.dimension, shape.half_width)});
  }
  return GeneralizedMeasure(shape.dimension, std::move(atoms));
}

/// Real order-0 measure on the line with weights summing to zero exactly
/// (last weight absorbs the sum) and locations drawn from [lo, hi].
inline GeneralizedMeasure random_zero_mass(std::mt19937_64& rng, std::size_t atoms, double lo,
                                           double hi) {
  std::uniform_real_distribution<double> loc(lo, hi);
  std::normal_distribution<double> w(0.0, 1.0);
  std::vector<Atom> out;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < atoms; ++i) {
    const double v = w(rng);
    sum += v;
    out.push_back(Atom{v, MultiIndex{0}, Point{loc(rng)}});
  }
  out.push_back(Atom{-sum, MultiIndex{0}, Point{loc(rng)}});
  GeneralizedMeasure m(1, std::move(out));
  return m;
}

/// Central difference of order n in one variable with two Richardson levels.
inline double richardson_derivative(const std::function<double(double)>& f, double x, unsigned n,
                                    double h = 0.05) {
  auto stencil = [&](double step) {
    double acc = 0.0;
    double binom = 1.0;
    for (unsigned j = 0; j <= n; ++j) {
      acc += ((j % 2) ? -1.0 : 1.0) * binom * f(x + (0.5 * n - j) * step);
      binom = binom * (n - j) / (j + 1.0);
    }
    return acc / std::pow(step, static_cast<int>(n));
  };
  auto level1 = [&](double step) { return (4.0 * stencil(step / 2.0) - stencil(step)) / 3.0; };
  return (16.0 * level1(h / 2.0) - level1(h)) / 15.0;
}

/// |P_n|^2 for P_n uniform on [0, n] under exp(-(x - y)^2):
///   (sqrt(pi) n erf(n) + exp(-n^2) - 1) / n^2.
inline double uniform_gaussian_norm_sq(double n) {
  const double sqrt_pi = std::sqrt(3.14159265358979323846);
  return (sqrt_pi * n * std::erf(n) + std::exp(-n * n) - 1.0) / (n * n);
}

inline double relative_error(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / (1.0 + std::abs(b));
}

}  // namespace distembed::dtest
