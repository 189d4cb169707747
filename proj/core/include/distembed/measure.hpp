#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace distembed {

using Complex = std::complex<double>;
using Point = std::vector<double>;
using PointView = std::span<const double>;

/// Multi-index p in N^d; |p| is order().
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<unsigned> entries);
  explicit MultiIndex(std::vector<unsigned> entries);

  static MultiIndex zero(std::size_t dim);
  static MultiIndex unit(std::size_t dim, std::size_t axis, unsigned count = 1);

  [[nodiscard]] std::size_t dimension() const { return entries_.size(); }
  [[nodiscard]] unsigned order() const { return order_; }
  [[nodiscard]] bool is_zero() const { return order_ == 0; }
  [[nodiscard]] std::span<const unsigned> entries() const { return entries_; }
  unsigned operator[](std::size_t i) const { return entries_[i]; }

  /// Componentwise sum; dimensions must agree.
  [[nodiscard]] MultiIndex operator+(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<unsigned> entries_;
  unsigned order_ = 0;
};

/// weight * d^order delta_location
struct Atom {
  Complex weight{1.0, 0.0};
  MultiIndex order;
  Point location;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Axis-aligned box, one interval per dimension.
using Box = std::vector<Interval>;

/// Finite linear combination of point masses and their partial derivatives,
///   D = sum_i w_i d^{p_i} delta_{x_i}.
///
/// Always held in canonical form: atoms sorted by (order, location), no two
/// atoms share the same (order, location) (locations compared bitwise), and
/// no atom has weight exactly zero.
class GeneralizedMeasure {
 public:
  explicit GeneralizedMeasure(std::size_t dimension);

  /// Validates every atom and canonicalizes.
  GeneralizedMeasure(std::size_t dimension, std::vector<Atom> atoms);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::span<const Atom> atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] bool empty() const { return atoms_.empty(); }

  /// Largest |p| among the atoms (0 for the zero measure).
  [[nodiscard]] unsigned max_order() const;

  friend bool operator==(const GeneralizedMeasure& a, const GeneralizedMeasure& b);

 private:
  std::size_t dimension_;
  std::vector<Atom> atoms_;
};

/// Sorts, merges coincident atoms and drops zero weights. Idempotent.
std::vector<Atom> canonicalize(std::vector<Atom> atoms);

GeneralizedMeasure point_mass(PointView x, Complex weight = 1.0);
inline GeneralizedMeasure point_mass(std::initializer_list<double> x, Complex weight = 1.0) {
  return point_mass(PointView(x.begin(), x.size()), weight);
}

/// d^p D: every atom's order is raised by p.
GeneralizedMeasure derivative(const GeneralizedMeasure& measure, const MultiIndex& p);

GeneralizedMeasure linear_combine(std::span<const std::pair<Complex, GeneralizedMeasure>> terms);
GeneralizedMeasure linear_combine(std::initializer_list<std::pair<Complex, GeneralizedMeasure>> terms);

/// D(1): only order-0 atoms contribute.
Complex total_mass(const GeneralizedMeasure& measure);

/// Tensor midpoint rule on `box` with `nodes_per_axis` nodes per axis. Total
/// mass is 1 when `normalize` is set, the box volume otherwise.
GeneralizedMeasure discretize_uniform(const Box& box, std::size_t nodes_per_axis, bool normalize);

/// (delta_{x + h e_axis} - delta_x) / h
GeneralizedMeasure dipole_quotient(PointView x, std::size_t axis, double h);

GeneralizedMeasure operator+(const GeneralizedMeasure& a, const GeneralizedMeasure& b);
GeneralizedMeasure operator-(const GeneralizedMeasure& a, const GeneralizedMeasure& b);
GeneralizedMeasure operator*(Complex scale, const GeneralizedMeasure& measure);

}  // namespace distembed
