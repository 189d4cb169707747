#include "distembed/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "distembed/errors.hpp"

namespace distembed {

namespace {

bool is_finite(Complex w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

bool all_finite(PointView x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

// Value order first; ties between numerically equal but bitwise different
// values (+0 / -0) are broken on the bit pattern so that "equivalent" in the
// sort means "bitwise identical".
std::strong_ordering compare_coordinate(double a, double b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::bit_cast<std::uint64_t>(a) <=> std::bit_cast<std::uint64_t>(b);
}

std::strong_ordering compare_location(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = compare_coordinate(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_key(const Atom& a, const Atom& b) {
  if (auto c = a.order <=> b.order; c != 0) return c;
  return compare_location(a.location, b.location);
}

void check_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<unsigned> entries)
    : MultiIndex(std::vector<unsigned>(entries)) {}

MultiIndex::MultiIndex(std::vector<unsigned> entries)
    : entries_(std::move(entries)),
      order_(std::accumulate(entries_.begin(), entries_.end(), 0u)) {}

MultiIndex MultiIndex::zero(std::size_t dim) { return MultiIndex(std::vector<unsigned>(dim, 0)); }

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis, unsigned count) {
  if (axis >= dim) throw InvalidArgument("MultiIndex::unit: axis out of range");
  std::vector<unsigned> e(dim, 0);
  e[axis] = count;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  check_same_dimension(dimension(), other.dimension(), "MultiIndex::operator+");
  std::vector<unsigned> e(entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return MultiIndex(std::move(e));
}

std::vector<Atom> canonicalize(std::vector<Atom> atoms) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return compare_key(a, b) < 0; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (auto& atom : atoms) {
    if (!merged.empty() && compare_key(merged.back(), atom) == 0) {
      merged.back().weight += atom.weight;
    } else {
      merged.push_back(std::move(atom));
    }
  }
  std::erase_if(merged, [](const Atom& a) { return a.weight == Complex(0.0, 0.0); });
  return merged;
}

GeneralizedMeasure::GeneralizedMeasure(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw InvalidArgument("GeneralizedMeasure: dimension must be positive");
}

GeneralizedMeasure::GeneralizedMeasure(std::size_t dimension, std::vector<Atom> atoms)
    : GeneralizedMeasure(dimension) {
  for (const auto& a : atoms) {
    if (a.location.size() != dimension || a.order.dimension() != dimension) {
      throw InvalidArgument("GeneralizedMeasure: atom dimension differs from measure dimension");
    }
    if (!is_finite(a.weight)) throw InvalidArgument("GeneralizedMeasure: non-finite atom weight");
    if (!all_finite(a.location)) {
      throw InvalidArgument("GeneralizedMeasure: non-finite atom location");
    }
  }
  atoms_ = canonicalize(std::move(atoms));
  for (const auto& a : atoms_) {
    // merging can overflow
    if (!is_finite(a.weight)) throw InvalidArgument("GeneralizedMeasure: merged weight overflow");
  }
}

unsigned GeneralizedMeasure::max_order() const {
  unsigned m = 0;
  for (const auto& a : atoms_) m = std::max(m, a.order.order());
  return m;
}

bool operator==(const GeneralizedMeasure& a, const GeneralizedMeasure& b) {
  if (a.dimension_ != b.dimension_ || a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
    const auto& x = a.atoms_[i];
    const auto& y = b.atoms_[i];
    if (x.weight != y.weight || compare_key(x, y) != 0) return false;
  }
  return true;
}

GeneralizedMeasure point_mass(PointView x, Complex weight) {
  if (x.empty()) throw InvalidArgument("point_mass: empty point");
  if (!all_finite(x) || !is_finite(weight)) throw InvalidArgument("point_mass: non-finite input");
  return GeneralizedMeasure(x.size(), {Atom{weight, MultiIndex::zero(x.size()),
                                            Point(x.begin(), x.end())}});
}

GeneralizedMeasure derivative(const GeneralizedMeasure& measure, const MultiIndex& p) {
  check_same_dimension(measure.dimension(), p.dimension(), "derivative");
  std::vector<Atom> atoms(measure.atoms().begin(), measure.atoms().end());
  for (auto& a : atoms) a.order = a.order + p;
  return GeneralizedMeasure(measure.dimension(), std::move(atoms));
}

GeneralizedMeasure linear_combine(std::span<const std::pair<Complex, GeneralizedMeasure>> terms) {
  if (terms.empty()) throw InvalidArgument("linear_combine: empty term list");
  const std::size_t dim = terms.front().second.dimension();
  std::vector<Atom> atoms;
  for (const auto& [coeff, measure] : terms) {
    check_same_dimension(dim, measure.dimension(), "linear_combine");
    if (!is_finite(coeff)) throw InvalidArgument("linear_combine: non-finite coefficient");
    for (const auto& a : measure.atoms()) {
      atoms.push_back(Atom{coeff * a.weight, a.order, a.location});
    }
  }
  return GeneralizedMeasure(dim, std::move(atoms));
}

GeneralizedMeasure linear_combine(
    std::initializer_list<std::pair<Complex, GeneralizedMeasure>> terms) {
  return linear_combine(std::span<const std::pair<Complex, GeneralizedMeasure>>(terms.begin(),
                                                                                terms.size()));
}

Complex total_mass(const GeneralizedMeasure& measure) {
  Complex mass = 0.0;
  for (const auto& a : measure.atoms()) {
    if (a.order.is_zero()) mass += a.weight;
  }
  return mass;
}

GeneralizedMeasure discretize_uniform(const Box& box, std::size_t nodes_per_axis, bool normalize) {
  if (box.empty()) throw InvalidArgument("discretize_uniform: empty box");
  if (nodes_per_axis == 0) throw InvalidArgument("discretize_uniform: nodes_per_axis must be >= 1");
  double volume = 1.0;
  for (const auto& [lo, hi] : box) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw InvalidArgument("discretize_uniform: degenerate box");
    }
    volume *= hi - lo;
  }
  const std::size_t dim = box.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= nodes_per_axis;
  const double weight = (normalize ? 1.0 : volume) / static_cast<double>(total);

  std::vector<Atom> atoms;
  atoms.reserve(total);
  std::vector<std::size_t> counter(dim, 0);
  for (std::size_t n = 0; n < total; ++n) {
    Point x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double step = (box[i].hi - box[i].lo) / static_cast<double>(nodes_per_axis);
      x[i] = box[i].lo + (static_cast<double>(counter[i]) + 0.5) * step;
    }
    atoms.push_back(Atom{weight, MultiIndex::zero(dim), std::move(x)});
    for (std::size_t i = 0; i < dim && ++counter[i] == nodes_per_axis; ++i) counter[i] = 0;
  }
  return GeneralizedMeasure(dim, std::move(atoms));
}

GeneralizedMeasure dipole_quotient(PointView x, std::size_t axis, double h) {
  if (x.empty() || axis >= x.size()) throw InvalidArgument("dipole_quotient: axis out of range");
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("dipole_quotient: h must be positive");
  Point shifted(x.begin(), x.end());
  shifted[axis] += h;
  return linear_combine({{1.0 / h, point_mass(shifted)}, {-1.0 / h, point_mass(x)}});
}

GeneralizedMeasure operator+(const GeneralizedMeasure& a, const GeneralizedMeasure& b) {
  return linear_combine({{1.0, a}, {1.0, b}});
}

GeneralizedMeasure operator-(const GeneralizedMeasure& a, const GeneralizedMeasure& b) {
  return linear_combine({{1.0, a}, {-1.0, b}});
}

GeneralizedMeasure operator*(Complex scale, const GeneralizedMeasure& measure) {
  return linear_combine({{scale, measure}});
}

}  // namespace distembed
