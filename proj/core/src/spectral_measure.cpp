#include "distembed/spectral_measure.hpp"

#include <cmath>
#include <numbers>

#include "distembed/errors.hpp"

namespace distembed {

namespace {

double monomial(PointView xi, const MultiIndex& r) {
  double v = 1.0;
  for (std::size_t i = 0; i < xi.size(); ++i) v *= std::pow(xi[i], static_cast<int>(r[i]));
  return v;
}

}  // namespace

SpectralMeasure::SpectralMeasure(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw InvalidArgument("SpectralMeasure: dimension must be positive");
}

SpectralMeasure::SpectralMeasure(std::size_t dimension, std::vector<SpectralAtom> atoms,
                                 std::vector<SpectralDensity> densities)
    : SpectralMeasure(dimension) {
  for (const auto& a : atoms) {
    if (a.location.size() != dimension) {
      throw InvalidArgument("SpectralMeasure: atom dimension mismatch");
    }
    if (!std::isfinite(a.weight) || a.weight < 0.0) {
      throw InvalidArgument("SpectralMeasure: atom weights must be finite and nonnegative");
    }
  }
  for (const auto& d : densities) {
    if (!d.density) throw InvalidArgument("SpectralMeasure: empty density callable");
    if (d.box.size() != dimension) throw InvalidArgument("SpectralMeasure: density box dimension");
    for (const auto& [lo, hi] : d.box) {
      if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw InvalidArgument("SpectralMeasure: density box must be finite and nondegenerate");
      }
    }
  }
  atoms_ = std::move(atoms);
  densities_ = std::move(densities);
}

double SpectralMeasure::total_mass(const QuadratureOptions& options) const {
  double mass = 0.0;
  for (const auto& a : atoms_) mass += a.weight;
  for (const auto& d : densities_) mass += integrate(d.density, d.box, options).value;
  return mass;
}

SpectralMeasure SpectralMeasure::weighted_by_monomial(const MultiIndex& r) const {
  if (r.dimension() != dimension_) throw InvalidArgument("weighted_by_monomial: dimension");
  for (auto e : r.entries()) {
    if (e % 2 != 0) throw InvalidArgument("weighted_by_monomial: exponents must be even");
  }
  std::vector<SpectralAtom> atoms = atoms_;
  for (auto& a : atoms) a.weight *= monomial(a.location, r);
  std::vector<SpectralDensity> densities;
  for (const auto& d : densities_) {
    densities.push_back(SpectralDensity{
        [inner = d.density, r](PointView xi) { return monomial(xi, r) * inner(xi); }, d.box,
        d.family + "*monomial"});
  }
  return SpectralMeasure(dimension_, std::move(atoms), std::move(densities));
}

SpectralMeasure SpectralMeasure::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw InvalidArgument("SpectralMeasure::scaled: factor must be finite and nonnegative");
  }
  std::vector<SpectralAtom> atoms = atoms_;
  for (auto& a : atoms) a.weight *= factor;
  std::vector<SpectralDensity> densities;
  for (const auto& d : densities_) {
    densities.push_back(SpectralDensity{
        [inner = d.density, factor](PointView xi) { return factor * inner(xi); }, d.box,
        d.family});
  }
  return SpectralMeasure(dimension_, std::move(atoms), std::move(densities));
}

SpectralMeasure SpectralMeasure::with_origin_atom(double c) const {
  std::vector<SpectralAtom> atoms = atoms_;
  atoms.push_back(SpectralAtom{Point(dimension_, 0.0), c});
  return SpectralMeasure(dimension_, std::move(atoms), densities_);
}

SpectralMeasure operator+(const SpectralMeasure& a, const SpectralMeasure& b) {
  if (a.dimension_ != b.dimension_) throw InvalidArgument("SpectralMeasure +: dimension mismatch");
  std::vector<SpectralAtom> atoms = a.atoms_;
  atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
  std::vector<SpectralDensity> densities = a.densities_;
  densities.insert(densities.end(), b.densities_.begin(), b.densities_.end());
  return SpectralMeasure(a.dimension_, std::move(atoms), std::move(densities));
}

namespace spectra {

SpectralMeasure gaussian(std::size_t dimension, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("spectra::gaussian: sigma must be positive");
  const double norm =
      std::pow(sigma / (2.0 * std::sqrt(std::numbers::pi)), static_cast<double>(dimension));
  const double half_width = 16.0 / sigma;
  SpectralDensity density{
      [norm, sigma](PointView xi) {
        double r2 = 0.0;
        for (double v : xi) r2 += v * v;
        return norm * std::exp(-sigma * sigma * r2 / 4.0);
      },
      Box(dimension, Interval{-half_width, half_width}), "gaussian"};
  return SpectralMeasure(dimension, {}, {std::move(density)});
}

SpectralMeasure sinc() {
  SpectralDensity density{[](PointView) { return 0.5; }, Box{Interval{-1.0, 1.0}}, "box"};
  return SpectralMeasure(1, {}, {std::move(density)});
}

SpectralMeasure cosine(const std::vector<double>& amplitudes, const std::vector<Point>& frequencies) {
  if (amplitudes.empty() || amplitudes.size() != frequencies.size()) {
    throw InvalidArgument("spectra::cosine: need one frequency per amplitude");
  }
  const std::size_t dim = frequencies.front().size();
  std::vector<SpectralAtom> atoms;
  for (std::size_t j = 0; j < amplitudes.size(); ++j) {
    if (frequencies[j].size() != dim) throw InvalidArgument("spectra::cosine: dimension mismatch");
    Point neg = frequencies[j];
    for (auto& v : neg) v = -v;
    atoms.push_back(SpectralAtom{frequencies[j], amplitudes[j] / 2.0});
    atoms.push_back(SpectralAtom{std::move(neg), amplitudes[j] / 2.0});
  }
  return SpectralMeasure(dim, std::move(atoms));
}

SpectralMeasure constant(std::size_t dimension, double c) {
  return SpectralMeasure(dimension, {SpectralAtom{Point(dimension, 0.0), c}});
}

}  // namespace spectra

}  // namespace distembed
