#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "distembed/measure.hpp"
#include "distembed/spectral_measure.hpp"

namespace distembed {

/// Declared differentiability order m of a kernel in C^(m,m); may be unbounded.
class Smoothness {
 public:
  static constexpr Smoothness unbounded() { return Smoothness(kUnbounded); }
  static constexpr Smoothness order(unsigned m) { return Smoothness(m); }

  [[nodiscard]] constexpr bool is_unbounded() const { return value_ == kUnbounded; }
  [[nodiscard]] constexpr unsigned value() const { return value_; }
  [[nodiscard]] constexpr bool admits(unsigned k) const { return is_unbounded() || k <= value_; }

  friend constexpr Smoothness min(Smoothness a, Smoothness b) {
    return Smoothness(a.value_ < b.value_ ? a.value_ : b.value_);
  }
  friend constexpr bool operator==(Smoothness, Smoothness) = default;

 private:
  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();
  constexpr explicit Smoothness(unsigned v) : value_(v) {}
  unsigned value_;
};

std::string to_string(Smoothness s);

/// k(x, y) = psi(x - y), optionally with the Bochner spectral measure of psi.
struct StationaryProfile {
  std::function<Complex(PointView)> psi;
  std::optional<SpectralMeasure> spectrum;
};

/// Positive definite kernel with mixed partial derivatives d^(p,q) k up to its
/// declared smoothness; p acts on the first argument, q on the second.
///
/// Kernels are immutable and cheap to copy (shared state).
class Kernel {
 public:
  using Evaluator = std::function<Complex(PointView x, PointView y)>;
  using DerivativeEvaluator =
      std::function<Complex(const MultiIndex& p, const MultiIndex& q, PointView x, PointView y)>;

  /// `derivative` may be empty, in which case derivatives fall back to
  /// Richardson-extrapolated finite differences of `evaluate`.
  Kernel(std::string name, std::size_t dimension, Smoothness smoothness, Evaluator evaluate,
         DerivativeEvaluator derivative,
         std::optional<StationaryProfile> stationary = std::nullopt);

  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] Smoothness smoothness() const;
  [[nodiscard]] bool is_stationary() const;
  [[nodiscard]] const std::optional<StationaryProfile>& stationary() const;
  /// Null when the kernel is not stationary or its spectrum is unknown.
  [[nodiscard]] const SpectralMeasure* spectrum() const;

  Complex operator()(PointView x, PointView y) const;
  Complex operator()(std::initializer_list<double> x, std::initializer_list<double> y) const {
    return (*this)(PointView(x.begin(), x.size()), PointView(y.begin(), y.size()));
  }

  /// Throws UnsupportedOrder when |p| or |q| exceeds the smoothness.
  Complex derivative(const MultiIndex& p, const MultiIndex& q, PointView x, PointView y) const;

  /// Throws UnsupportedOrder unless both orders are admissible.
  void require_order(unsigned p_order, unsigned q_order) const;

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

/// Central finite-difference stencil for d^(p,q) k built from kernel values
/// only. Truncation error O(h^2).
Complex finite_difference_derivative(const Kernel& k, const MultiIndex& p, const MultiIndex& q,
                                     PointView x, PointView y, double h);

struct FiniteDifferenceOptions {
  double initial_step = 0.5;
  double shrink = 1.4;
  unsigned levels = 16;
};

/// Richardson extrapolation of the stencil above over a geometric sequence of
/// steps (Ridders' scheme), returning the entry with the smallest error estimate.
Complex finite_difference_derivative(const Kernel& k, const MultiIndex& p, const MultiIndex& q,
                                     PointView x, PointView y,
                                     const FiniteDifferenceOptions& options = {});

/// k + c, c >= 0.
Kernel shift(const Kernel& k, double c);
/// k1 + k2.
Kernel sum(const Kernel& k1, const Kernel& k2);
/// a k, a > 0.
Kernel scale(const Kernel& k, double a);
/// k0(x, y) = <delta_x - nu0, delta_y - nu0>_k, for nu0 with only order-0 atoms.
Kernel center(const Kernel& k, const GeneralizedMeasure& nu0);
/// (x, y) -> d^(p,p) k(x, y), itself a positive definite kernel.
Kernel derivative_kernel(const Kernel& k, const MultiIndex& p);

namespace kernels {

/// exp(-|x - y|^2 / sigma^2), smooth to all orders.
Kernel gaussian(std::size_t dimension = 1, double sigma = 1.0);
/// exp(-|x - y| / sigma), continuous only.
Kernel laplace(std::size_t dimension = 1, double sigma = 1.0);
/// sin(x - y) / (x - y) on the real line.
Kernel sinc();
/// sum_j a_j cos(<omega_j, x - y>) with a_j >= 0; periodic, never characteristic.
Kernel cosine(std::vector<double> amplitudes, std::vector<Point> frequencies);
/// (1 + |x - y|^2 / c^2)^(-beta).
Kernel inverse_multiquadric(std::size_t dimension = 1, double c = 1.0, double beta = 0.5);
Kernel constant(std::size_t dimension = 1, double value = 1.0);
/// min(|x|, |y|) on the real line (Brownian motion covariance).
Kernel brownian();

}  // namespace kernels

}  // namespace distembed
