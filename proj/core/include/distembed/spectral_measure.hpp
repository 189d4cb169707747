#pragma once

#include <functional>
#include <string>
#include <vector>

#include "distembed/measure.hpp"
#include "distembed/quadrature.hpp"

namespace distembed {

struct SpectralAtom {
  Point location;
  double weight = 0.0;
};

/// Nonnegative density restricted to a box; outside the box it is taken to
/// be zero (or negligible, for truncated infinite-support densities).
struct SpectralDensity {
  std::function<double(PointView)> density;
  Box box;
  std::string family;
};

/// Positive finite measure Lambda with psi(h) = int exp(-i <h, xi>) dLambda(xi).
class SpectralMeasure {
 public:
  explicit SpectralMeasure(std::size_t dimension);
  SpectralMeasure(std::size_t dimension, std::vector<SpectralAtom> atoms,
                  std::vector<SpectralDensity> densities = {});

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  [[nodiscard]] const std::vector<SpectralDensity>& densities() const { return densities_; }

  /// Atomic weights plus quadrature of every density part.
  [[nodiscard]] double total_mass(const QuadratureOptions& options = {}) const;

  /// xi^r Lambda. Requires every entry of r to be even so positivity holds.
  [[nodiscard]] SpectralMeasure weighted_by_monomial(const MultiIndex& r) const;
  [[nodiscard]] SpectralMeasure scaled(double factor) const;
  /// Adds an atom of weight c at the origin (spectrum of psi + c).
  [[nodiscard]] SpectralMeasure with_origin_atom(double c) const;

  friend SpectralMeasure operator+(const SpectralMeasure& a, const SpectralMeasure& b);

 private:
  std::size_t dimension_;
  std::vector<SpectralAtom> atoms_;
  std::vector<SpectralDensity> densities_;
};

namespace spectra {

/// Spectrum of exp(-|h|^2 / sigma^2): density (sigma / (2 sqrt(pi)))^d
/// exp(-sigma^2 |xi|^2 / 4), truncated to the box [-16/sigma, 16/sigma]^d.
SpectralMeasure gaussian(std::size_t dimension, double sigma = 1.0);

/// Spectrum of sin(h)/h: density 1/2 on [-1, 1].
SpectralMeasure sinc();

/// Spectrum of sum_j a_j cos(<omega_j, h>): atoms a_j / 2 at +-omega_j.
SpectralMeasure cosine(const std::vector<double>& amplitudes, const std::vector<Point>& frequencies);

/// Spectrum of the constant kernel c: a single atom c at the origin.
SpectralMeasure constant(std::size_t dimension, double c = 1.0);

}  // namespace spectra

}  // namespace distembed
