#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "distembed/measure.hpp"
#include "distembed/quadrature.hpp"
#include "distembed/spectral_measure.hpp"

namespace distembed {

/// D applied to exp(-i <., xi>):
///   sum_atoms w (-1)^|p| (-i)^|p| xi^p exp(-i <x, xi>).
Complex fourier_transform(const GeneralizedMeasure& d, PointView xi);

/// int |FD(xi)|^2 dLambda(xi). For a stationary kernel whose (symmetric)
/// spectral measure is Lambda this equals |D|_k^2.
double spectral_norm_squared(const SpectralMeasure& lambda, const GeneralizedMeasure& d,
                             const QuadratureOptions& options = {});

/// Description of supp Lambda handed to the characteristicness diagnostic.
struct SupportDescription {
  enum class Kind { kFull, kBoxes, kAtoms };
  Kind kind = Kind::kFull;
  /// kBoxes: closed boxes with nonempty interior; bounds may be infinite.
  std::vector<Box> boxes;
  /// kAtoms: finite list of support points.
  std::vector<Point> atoms;
};

enum class CharacteristicClass {
  kCharacteristicToIntegrable,   // characteristic to D_{L1}^m (hence everything below)
  kCharacteristicToCompactOnly,  // characteristic to compactly supported, not to D_{L1}
  kNotCharacteristicToCompact,   // a compactly supported nonzero D has zero norm
  kInconclusive,
};

std::string to_string(CharacteristicClass c);

struct CharacteristicVerdict {
  CharacteristicClass characteristic_class = CharacteristicClass::kInconclusive;
  std::string support_type;
  std::string rule;
  std::string note;
  /// Smallest M with #{s : 0 < |s| <= r} <= M r, for atomic supports on the line.
  std::optional<double> growth_constant;
};

/// Classifies a stationary kernel from the support of its spectral measure:
///  - full support: characteristic to integrable distributions;
///  - support with interior that misses an open set: characteristic to
///    compactly supported distributions only;
///  - finite atomic support on the real line: not characteristic even to
///    compactly supported distributions (growth constant reported);
///  - atomic support in higher dimension: inconclusive.
CharacteristicVerdict diagnose_characteristic(const SupportDescription& support,
                                              std::size_t dimension);

/// delta-discretized uniform measure on [0, T] minus the one on [T, 2T], N
/// midpoints each. Zero total mass and FD(2 pi n / T) = 0 for every integer n.
GeneralizedMeasure periodic_null_distribution(double period, std::size_t nodes);

/// Midpoint quadrature (N nodes on [-L, L]) of f(x) dx with
/// f(x) = cos(omega x) sinc^2(x / 2); Ff is supported in +-[omega-1, omega+1],
/// which misses the sinc spectrum [-1, 1] when omega > 2.
GeneralizedMeasure sinc_null_measure(double half_width, std::size_t nodes, double omega = 2.5);

}  // namespace distembed
