#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "distembed/measure.hpp"

namespace distembed {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached; safe to call concurrently.
const GaussLegendreRule& gauss_legendre_rule(unsigned points);

struct QuadratureOptions {
  double relative_tolerance = 1e-8;
  double absolute_tolerance = 1e-14;
  std::size_t max_evaluations = std::size_t{1} << 20;
  unsigned rule_points = 16;
  unsigned initial_panels = 8;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive panel Gauss-Legendre. Each panel compares the rule on the
/// panel with the rule on its two halves; the worst panel is bisected until the
/// summed error estimate meets max(rtol * |I|, atol).
///
/// Throws QuadratureBudgetExceeded when max_evaluations would be exceeded.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Iterated adaptive integration over an axis-aligned box. The evaluation
/// budget is shared across all nesting levels.
QuadratureResult integrate(const std::function<double(PointView)>& f, const Box& box,
                           const QuadratureOptions& options = {});

}  // namespace distembed
