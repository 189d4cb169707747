#include "distembed/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "distembed/errors.hpp"
#include "distembed/summation.hpp"

namespace distembed {

namespace {

// i^n
Complex i_power(unsigned n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double squared_modulus(Complex z) { return std::norm(z); }

bool box_contains(const Box& box, PointView x) {
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (x[i] < box[i].lo || x[i] > box[i].hi) return false;
  }
  return true;
}

// Closed boxes cover R^d iff every cell of the grid induced by their finite
// endpoints has its representative point covered.
bool boxes_cover_space(const std::vector<Box>& boxes, std::size_t dim) {
  std::vector<std::vector<double>> reps(dim);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> ends;
    for (const auto& b : boxes) {
      if (std::isfinite(b[i].lo)) ends.push_back(b[i].lo);
      if (std::isfinite(b[i].hi)) ends.push_back(b[i].hi);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    if (ends.empty()) {
      reps[i] = {0.0};
    } else {
      reps[i].push_back(ends.front() - 1.0);
      for (std::size_t j = 0; j + 1 < ends.size(); ++j) {
        reps[i].push_back(0.5 * (ends[j] + ends[j + 1]));
      }
      reps[i].push_back(ends.back() + 1.0);
    }
    cells *= reps[i].size();
    if (cells > (std::size_t{1} << 22)) {
      throw InvalidArgument("diagnose_characteristic: too many boxes to check coverage");
    }
  }
  std::vector<std::size_t> idx(dim, 0);
  Point x(dim);
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t i = 0; i < dim; ++i) x[i] = reps[i][idx[i]];
    const bool covered =
        std::any_of(boxes.begin(), boxes.end(), [&](const Box& b) { return box_contains(b, x); });
    if (!covered) return false;
    for (std::size_t i = 0; i < dim && ++idx[i] == reps[i].size(); ++i) idx[i] = 0;
  }
  return true;
}

}  // namespace

Complex fourier_transform(const GeneralizedMeasure& d, PointView xi) {
  if (xi.size() != d.dimension()) throw InvalidArgument("fourier_transform: dimension mismatch");
  std::vector<Complex> terms;
  terms.reserve(d.size());
  for (const auto& a : d.atoms()) {
    double phase = 0.0;
    double mono = 1.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
      phase += a.location[i] * xi[i];
      mono *= std::pow(xi[i], static_cast<int>(a.order[i]));
    }
    // (-1)^|p| (-i)^|p| = i^|p|
    terms.push_back(a.weight * i_power(a.order.order()) * mono *
                    Complex(std::cos(phase), -std::sin(phase)));
  }
  return pairwise_sum<Complex>(terms);
}

double spectral_norm_squared(const SpectralMeasure& lambda, const GeneralizedMeasure& d,
                             const QuadratureOptions& options) {
  if (lambda.dimension() != d.dimension()) {
    throw InvalidArgument("spectral_norm_squared: dimension mismatch");
  }
  std::vector<double> parts;
  for (const auto& a : lambda.atoms()) {
    parts.push_back(a.weight * squared_modulus(fourier_transform(d, a.location)));
  }
  for (const auto& density : lambda.densities()) {
    auto integrand = [&](PointView xi) {
      const double rho = density.density(xi);
      if (rho < 0.0) throw NumericalInconsistency("spectral density is negative");
      return rho == 0.0 ? 0.0 : rho * squared_modulus(fourier_transform(d, xi));
    };
    parts.push_back(integrate(integrand, density.box, options).value);
  }
  return pairwise_sum<double>(parts);
}

std::string to_string(CharacteristicClass c) {
  switch (c) {
    case CharacteristicClass::kCharacteristicToIntegrable: return "characteristic-to-DL1";
    case CharacteristicClass::kCharacteristicToCompactOnly: return "characteristic-to-compact-only";
    case CharacteristicClass::kNotCharacteristicToCompact: return "not-characteristic-to-compact";
    case CharacteristicClass::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

CharacteristicVerdict diagnose_characteristic(const SupportDescription& support,
                                              std::size_t dimension) {
  if (dimension == 0) throw InvalidArgument("diagnose_characteristic: dimension must be positive");
  CharacteristicVerdict v;
  using Kind = SupportDescription::Kind;

  const auto full = [&](std::string support_type) {
    v.characteristic_class = CharacteristicClass::kCharacteristicToIntegrable;
    v.support_type = std::move(support_type);
    v.rule = "full-support criterion for stationary kernels";
    v.note = "spectral measure has full support: injective on integrable distributions";
    return v;
  };

  switch (support.kind) {
    case Kind::kFull:
      return full("full");

    case Kind::kBoxes: {
      if (support.boxes.empty()) throw InvalidArgument("diagnose_characteristic: no boxes given");
      for (const auto& b : support.boxes) {
        if (b.size() != dimension) throw InvalidArgument("diagnose_characteristic: box dimension");
        for (const auto& [lo, hi] : b) {
          if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
            throw InvalidArgument("diagnose_characteristic: boxes need nonempty interior");
          }
        }
      }
      if (boxes_cover_space(support.boxes, dimension)) return full("boxes covering the space");
      v.characteristic_class = CharacteristicClass::kCharacteristicToCompactOnly;
      v.support_type = "boxes";
      if (dimension == 1) {
        v.rule = "countable-support growth condition on the line";
        v.note = "support is uncountable, so no compactly supported distribution is lost; "
                 "support is not full, so integrable distributions are";
      } else {
        v.rule = "countable-support necessity in R^d";
        v.note = "uncountable support implies characteristic to compactly supported "
                 "distributions; support is not full, so integrable distributions are lost";
      }
      return v;
    }

    case Kind::kAtoms: {
      if (support.atoms.empty()) throw InvalidArgument("diagnose_characteristic: no atoms given");
      for (const auto& a : support.atoms) {
        if (a.size() != dimension) throw InvalidArgument("diagnose_characteristic: atom dimension");
        for (double c : a) {
          if (!std::isfinite(c)) throw InvalidArgument("diagnose_characteristic: non-finite atom");
        }
      }
      v.support_type = "atoms";
      if (dimension != 1) {
        v.characteristic_class = CharacteristicClass::kInconclusive;
        v.rule = "countable-support necessity in R^d";
        v.note = "countable support is necessary for failure but not known to be sufficient "
                 "beyond the real line";
        return v;
      }
      std::vector<double> radii;
      for (const auto& a : support.atoms) {
        if (a[0] != 0.0) radii.push_back(std::abs(a[0]));
      }
      std::sort(radii.begin(), radii.end());
      double m = 0.0;
      for (std::size_t k = 0; k < radii.size(); ++k) {
        // count all atoms with radius <= radii[k], ties included
        std::size_t count = k + 1;
        while (count < radii.size() && radii[count] == radii[k]) ++count;
        m = std::max(m, static_cast<double>(count) / radii[k]);
      }
      v.characteristic_class = CharacteristicClass::kNotCharacteristicToCompact;
      v.growth_constant = m;
      v.rule = "countable-support growth condition on the line";
      std::ostringstream note;
      note << "finite atomic support satisfies the growth bound with M = " << m
           << " (origin excluded); a compactly supported nonzero distribution has zero norm, "
              "hence the kernel is not characteristic to D_L1 either";
      v.note = note.str();
      return v;
    }
  }
  throw InvalidArgument("diagnose_characteristic: unknown support kind");
}

GeneralizedMeasure periodic_null_distribution(double period, std::size_t nodes) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvalidArgument("periodic_null_distribution: period must be positive");
  }
  if (nodes < 2) throw InvalidArgument("periodic_null_distribution: need at least 2 nodes");
  const auto first = discretize_uniform(Box{Interval{0.0, period}}, nodes, true);
  const auto second = discretize_uniform(Box{Interval{period, 2.0 * period}}, nodes, true);
  return first - second;
}

GeneralizedMeasure sinc_null_measure(double half_width, std::size_t nodes, double omega) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("sinc_null_measure: truncation must be positive");
  }
  if (nodes < 16) throw InvalidArgument("sinc_null_measure: need at least 16 nodes");
  if (!(omega > 2.0) || !std::isfinite(omega)) {
    throw InvalidArgument("sinc_null_measure: modulation must exceed 2 (spectrum would overlap)");
  }
  const double step = 2.0 * half_width / static_cast<double>(nodes);
  std::vector<Atom> atoms;
  atoms.reserve(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double x = -half_width + (static_cast<double>(j) + 0.5) * step;
    const double s = (x == 0.0) ? 1.0 : std::sin(x / 2.0) / (x / 2.0);
    atoms.push_back(Atom{step * std::cos(omega * x) * s * s, MultiIndex{0}, Point{x}});
  }
  return GeneralizedMeasure(1, std::move(atoms));
}

}  // namespace distembed
