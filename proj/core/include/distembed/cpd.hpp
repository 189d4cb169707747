#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "distembed/measure.hpp"
#include "distembed/quadrature.hpp"

namespace distembed {

/// Data of the generalized Bochner representation
///   psi_c(h) = int (cos(h xi) - 1) / xi^2 dchi(xi) + P0(h),
/// with chi symmetric, positive and without atom at the origin, and
/// P0(h) = c0 + c2 h^2 with c2 <= 0.
struct GeneralizedBochnerData {
  /// Density of chi evaluated at xi >= 0 (chi is symmetric). May be empty.
  /// The tail estimate assumes density(xi) / xi^2 is nonincreasing on [1, inf).
  std::function<double(double)> density;
  /// Atoms of chi as (xi, weight) with xi != 0 and weight >= 0, full list.
  std::vector<std::pair<double, double>> atoms;
  double p0_constant = 0.0;
  double p0_quadratic = 0.0;
};

/// Real-valued stationary conditionally positive definite kernel
/// k_c(x, y) = psi_c(x - y) on the real line.
class CpdKernel {
 public:
  CpdKernel(std::function<double(double)> profile,
            std::optional<GeneralizedBochnerData> bochner = std::nullopt);

  double operator()(double x, double y) const { return profile_(x - y); }
  [[nodiscard]] double profile(double h) const { return profile_(h); }
  [[nodiscard]] const std::optional<GeneralizedBochnerData>& bochner() const { return bochner_; }

 private:
  std::function<double(double)> profile_;
  std::optional<GeneralizedBochnerData> bochner_;
};

namespace cpd_kernels {

/// psi_c(h) = -|h| with chi = Lebesgue / pi and P0 = 0.
CpdKernel negative_abs();

}  // namespace cpd_kernels

/// sum_ij mu_i mu_j psi_c(x_i - x_j) for a real, zero-mass, order-0 measure
/// on the line. Throws InvalidArgument otherwise.
double cpd_quadratic_form(const CpdKernel& kernel, const GeneralizedMeasure& mu);

struct CpdSpectralOptions {
  QuadratureOptions quadrature{};
  /// Stop once the oscillatory tail bound drops below this fraction of the
  /// accumulated value.
  double tail_fraction = 1e-6;
  double panel_width = 1.0;
};

/// int |F mu(xi)|^2 / xi^2 dchi(xi) + |C_mu|^2, the same quantity as
/// cpd_quadratic_form computed on the Fourier side. Requires Bochner data.
double cpd_spectral_form(const CpdKernel& kernel, const GeneralizedMeasure& mu,
                         const CpdSpectralOptions& options = {});

struct BrownianProbe {
  double min_form = 0.0;  // |mu|^2 under min(|x|, |y|)
  double cpd_form = 0.0;  // cpd_quadratic_form under -|h|
  double residual = 0.0;  // |min_form - c * cpd_form|
};

struct BrownianReport {
  double fitted_constant = 0.0;
  std::vector<BrownianProbe> probes;
  double max_residual = 0.0;
  bool consistent = false;
};

/// Compares the Brownian motion kernel with -|x - y| on zero-mass measures
/// supported on one closed half-line. The proportionality constant is fitted
/// on the first probe with a nonzero -|h| form and checked on all probes.
/// Mixed-sign supports raise UnsupportedConfiguration.
BrownianReport brownian_correspondence_check(std::span<const GeneralizedMeasure> probes, double tol);

}  // namespace distembed
