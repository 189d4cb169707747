#include "distembed/cpd.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "distembed/embedding.hpp"
#include "distembed/errors.hpp"
#include "distembed/kernel.hpp"
#include "distembed/summation.hpp"

namespace distembed {

namespace {

struct RealAtoms {
  std::vector<double> x;
  std::vector<double> w;
};

RealAtoms validate_zero_mass(const GeneralizedMeasure& mu, const char* what) {
  if (mu.dimension() != 1) {
    throw InvalidArgument(std::string(what) + ": only measures on the real line are supported");
  }
  RealAtoms out;
  double scale = 0.0;
  for (const auto& a : mu.atoms()) {
    if (!a.order.is_zero()) throw InvalidArgument(std::string(what) + ": derivative atoms");
    if (a.weight.imag() != 0.0) throw InvalidArgument(std::string(what) + ": complex weights");
    out.x.push_back(a.location[0]);
    out.w.push_back(a.weight.real());
    scale += std::abs(a.weight.real());
  }
  const double mass = pairwise_sum<double>(out.w);
  if (std::abs(mass) > 1e-12 * std::max(1.0, scale)) {
    throw InvalidArgument(std::string(what) + ": measure must have zero total mass (got " +
                          std::to_string(mass) + ")");
  }
  return out;
}

// |F mu(xi)|^2 / xi^2 via sum mu_j (exp(-i x_j xi) - 1) / xi, finite at 0.
double scaled_transform_sq(const RealAtoms& m, double xi) {
  double re = 0.0;
  double im = 0.0;
  if (xi == 0.0) {
    for (std::size_t j = 0; j < m.x.size(); ++j) im -= m.w[j] * m.x[j];
    return im * im;
  }
  for (std::size_t j = 0; j < m.x.size(); ++j) {
    const double theta = m.x[j] * xi;
    const double s = std::sin(0.5 * theta);
    re += m.w[j] * (-2.0 * s * s) / xi;
    im -= m.w[j] * std::sin(theta) / xi;
  }
  return re * re + im * im;
}

}  // namespace

CpdKernel::CpdKernel(std::function<double(double)> profile,
                     std::optional<GeneralizedBochnerData> bochner)
    : profile_(std::move(profile)), bochner_(std::move(bochner)) {
  if (!profile_) throw InvalidArgument("CpdKernel: profile required");
  if (bochner_) {
    for (const auto& [xi, w] : bochner_->atoms) {
      if (xi == 0.0 || !std::isfinite(xi)) {
        throw InvalidArgument("CpdKernel: chi must not have an atom at the origin");
      }
      if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("CpdKernel: chi atom weight");
    }
    if (bochner_->p0_quadratic > 0.0) {
      throw InvalidArgument("CpdKernel: P0 quadratic coefficient must be <= 0");
    }
  }
}

namespace cpd_kernels {

CpdKernel negative_abs() {
  // int_R (1 - cos(h xi)) / xi^2 dxi = pi |h|
  GeneralizedBochnerData data;
  data.density = [](double) { return 1.0 / std::numbers::pi; };
  return CpdKernel([](double h) { return -std::abs(h); }, std::move(data));
}

}  // namespace cpd_kernels

double cpd_quadratic_form(const CpdKernel& kernel, const GeneralizedMeasure& mu) {
  const auto m = validate_zero_mass(mu, "cpd_quadratic_form");
  std::vector<double> rows(m.x.size());
  std::vector<double> row(m.x.size());
  for (std::size_t i = 0; i < m.x.size(); ++i) {
    for (std::size_t j = 0; j < m.x.size(); ++j) {
      row[j] = m.w[i] * m.w[j] * kernel.profile(m.x[i] - m.x[j]);
    }
    rows[i] = pairwise_sum<double>(row);
  }
  return pairwise_sum<double>(rows);
}

double cpd_spectral_form(const CpdKernel& kernel, const GeneralizedMeasure& mu,
                         const CpdSpectralOptions& options) {
  if (!kernel.bochner()) {
    throw InvalidArgument("cpd_spectral_form: kernel has no generalized Bochner data");
  }
  const auto& data = *kernel.bochner();
  const auto m = validate_zero_mass(mu, "cpd_spectral_form");
  if (m.x.empty()) return 0.0;

  std::vector<double> parts;
  for (const auto& [xi, w] : data.atoms) parts.push_back(w * scaled_transform_sq(m, xi));

  // |C_mu|^2 = sum_ij mu_i mu_j P0(x_i - x_j)
  double c_term = 0.0;
  for (std::size_t i = 0; i < m.x.size(); ++i) {
    for (std::size_t j = 0; j < m.x.size(); ++j) {
      const double h = m.x[i] - m.x[j];
      c_term += m.w[i] * m.w[j] * (data.p0_constant + data.p0_quadratic * h * h);
    }
  }
  parts.push_back(c_term);

  if (data.density) {
    const auto& density = data.density;
    auto integrand = [&](double xi) {
      const double rho = density(std::abs(xi));
      if (rho < 0.0) throw NumericalInconsistency("chi density is negative");
      return rho * scaled_transform_sq(m, xi);
    };
    double abs_sum = 0.0;
    double sq_sum = 0.0;
    for (double w : m.w) {
      abs_sum += std::abs(w);
      sq_sum += w * w;
    }
    // the oscillatory part of |F mu|^2 is sum_{i != j} mu_i mu_j cos((x_i - x_j) xi)
    double osc_weight = 0.0;
    for (std::size_t i = 0; i < m.x.size(); ++i) {
      for (std::size_t j = 0; j < m.x.size(); ++j) {
        if (i != j) osc_weight += std::abs(m.w[i] * m.w[j]) / std::abs(m.x[i] - m.x[j]);
      }
    }

    QuadratureOptions panel = options.quadrature;
    panel.initial_panels = 1;
    panel.absolute_tolerance = std::max(options.quadrature.absolute_tolerance,
                                        1e-13 * abs_sum * abs_sum);
    std::size_t used = 0;
    auto spend = [&](const QuadratureResult& r) {
      used += r.evaluations;
      if (used > options.quadrature.max_evaluations) {
        throw QuadratureBudgetExceeded("cpd_spectral_form: evaluation budget exhausted");
      }
      return r.value;
    };
    auto remaining = [&] {
      QuadratureOptions o = panel;
      o.max_evaluations = options.quadrature.max_evaluations - used;
      return o;
    };

    std::vector<double> panels;
    panels.push_back(spend(integrate(integrand, 0.0, 1.0, remaining())));
    double accumulated = panels.back();
    double r = 1.0;
    while (true) {
      // second mean value theorem: |int_R^inf cos(a xi) w(xi) dxi| <= 2 w(R) / a
      const double w_r = density(r) / (r * r);
      const double osc_bound = 2.0 * w_r * osc_weight;
      if (osc_bound <= options.tail_fraction * std::abs(accumulated)) break;
      panels.push_back(spend(integrate(integrand, r, r + options.panel_width, remaining())));
      accumulated += panels.back();
      r += options.panel_width;
    }
    // mean part of the tail, sum mu_j^2 int_R^inf rho(xi) / xi^2 dxi, with xi = R / t
    const double mean_tail =
        sq_sum * spend(integrate([&](double t) { return density(r / t) / r; }, 0.0, 1.0,
                                 remaining()));
    panels.push_back(mean_tail);
    // chi is symmetric: double the half-line integral
    parts.push_back(2.0 * pairwise_sum<double>(panels));
  }
  return pairwise_sum<double>(parts);
}

BrownianReport brownian_correspondence_check(std::span<const GeneralizedMeasure> probes,
                                             double tol) {
  if (probes.empty()) throw InvalidArgument("brownian_correspondence_check: no probes");
  const Kernel bm = kernels::brownian();
  const CpdKernel abs_kernel = cpd_kernels::negative_abs();
  BrownianReport report;
  report.fitted_constant = std::numeric_limits<double>::quiet_NaN();
  for (const auto& mu : probes) {
    validate_zero_mass(mu, "brownian_correspondence_check");
    bool has_pos = false;
    bool has_neg = false;
    for (const auto& a : mu.atoms()) {
      has_pos |= a.location[0] > 0.0;
      has_neg |= a.location[0] < 0.0;
    }
    if (has_pos && has_neg) {
      throw UnsupportedConfiguration(
          "brownian_correspondence_check: atoms on both sides of the origin");
    }
    BrownianProbe probe;
    probe.min_form = inner(bm, mu, mu).real();
    probe.cpd_form = cpd_quadratic_form(abs_kernel, mu);
    if (std::isnan(report.fitted_constant) && std::abs(probe.cpd_form) > tol) {
      report.fitted_constant = probe.min_form / probe.cpd_form;
    }
    report.probes.push_back(probe);
  }
  const double c = std::isnan(report.fitted_constant) ? 0.0 : report.fitted_constant;
  for (auto& p : report.probes) {
    p.residual = std::abs(p.min_form - c * p.cpd_form);
    report.max_residual = std::max(report.max_residual, p.residual);
  }
  report.consistent = report.max_residual <= tol;
  return report;
}

}  // namespace distembed
