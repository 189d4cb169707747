#include "distembed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "distembed/errors.hpp"
#include "distembed/summation.hpp"

namespace distembed {

namespace {

GaussLegendreRule compute_rule(unsigned n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const unsigned half = (n + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (unsigned j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = 0.0;
    for (unsigned j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void spend(std::size_t n) {
    if (used_ + n > limit_) {
      throw QuadratureBudgetExceeded("adaptive quadrature exceeded " + std::to_string(limit_) +
                                     " integrand evaluations");
    }
    used_ += n;
  }
  [[nodiscard]] std::size_t used() const { return used_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

double apply_rule(const std::function<double(double)>& f, double a, double b,
                  const GaussLegendreRule& rule, Budget& budget) {
  budget.spend(rule.nodes.size());
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

struct Panel {
  double a;
  double b;
  double left;
  double right;
  double error;
  [[nodiscard]] double value() const { return left + right; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double coarse,
                 const GaussLegendreRule& rule, Budget& budget) {
  const double m = 0.5 * (a + b);
  const double left = apply_rule(f, a, m, rule, budget);
  const double right = apply_rule(f, m, b, rule, budget);
  return Panel{a, b, left, right, std::abs(left + right - coarse)};
}

QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              const QuadratureOptions& options, Budget& budget) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("integrate: interval bounds must be finite");
  }
  if (a == b) return {};
  if (options.rule_points == 0 || options.initial_panels == 0) {
    throw InvalidArgument("integrate: rule_points and initial_panels must be positive");
  }
  const auto& rule = gauss_legendre_rule(options.rule_points);
  const std::size_t start = budget.used();

  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  std::vector<Panel> done;

  double total = 0.0;
  double error = 0.0;
  const double width = (b - a) / options.initial_panels;
  for (unsigned i = 0; i < options.initial_panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == options.initial_panels) ? b : a + (i + 1) * width;
    const double coarse = apply_rule(f, lo, hi, rule, budget);
    Panel p = make_panel(f, lo, hi, coarse, rule, budget);
    total += p.value();
    error += p.error;
    queue.push(p);
  }

  std::size_t since_resum = 0;
  while (error > std::max(options.relative_tolerance * std::abs(total),
                          options.absolute_tolerance)) {
    Panel worst = queue.top();
    queue.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(worst.a < m && m < worst.b)) {
      // panel cannot be split further in floating point
      done.push_back(worst);
      if (queue.empty()) break;
      continue;
    }
    Panel lo = make_panel(f, worst.a, m, worst.left, rule, budget);
    Panel hi = make_panel(f, m, worst.b, worst.right, rule, budget);
    total += lo.value() + hi.value() - worst.value();
    error += lo.error + hi.error - worst.error;
    queue.push(lo);
    queue.push(hi);
    if (++since_resum == 64) {
      // refresh running sums to avoid drift
      since_resum = 0;
      auto copy = queue;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value();
        error += copy.top().error;
        copy.pop();
      }
      for (const auto& p : done) {
        total += p.value();
        error += p.error;
      }
    }
  }

  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<double> values(done.size());
  std::vector<double> errors(done.size());
  for (std::size_t i = 0; i < done.size(); ++i) {
    values[i] = done[i].value();
    errors[i] = done[i].error;
  }
  return QuadratureResult{pairwise_sum<double>(values), pairwise_sum<double>(errors),
                          budget.used() - start};
}

QuadratureResult integrate_nested(const std::function<double(PointView)>& f, const Box& box,
                                  std::size_t axis, std::vector<double>& point,
                                  const QuadratureOptions& options, Budget& budget) {
  const auto& [lo, hi] = box[axis];
  if (axis + 1 == box.size()) {
    return integrate_1d(
        [&](double t) {
          point[axis] = t;
          return f(point);
        },
        lo, hi, options, budget);
  }
  QuadratureOptions inner = options;
  inner.relative_tolerance = options.relative_tolerance * 0.1;
  inner.absolute_tolerance = options.absolute_tolerance * 0.1;
  double inner_error = 0.0;
  auto result = integrate_1d(
      [&](double t) {
        point[axis] = t;
        auto r = integrate_nested(f, box, axis + 1, point, inner, budget);
        inner_error = std::max(inner_error, r.error_estimate);
        return r.value;
      },
      lo, hi, options, budget);
  result.error_estimate += inner_error * (hi - lo);
  return result;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(unsigned points) {
  if (points == 0) throw InvalidArgument("gauss_legendre_rule: need at least one node");
  static std::mutex mutex;
  static std::map<unsigned, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) it = cache.emplace(points, compute_rule(points)).first;
  return it->second;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  Budget budget(options.max_evaluations);
  return integrate_1d(f, a, b, options, budget);
}

QuadratureResult integrate(const std::function<double(PointView)>& f, const Box& box,
                           const QuadratureOptions& options) {
  if (box.empty()) throw InvalidArgument("integrate: empty box");
  Budget budget(options.max_evaluations);
  std::vector<double> point(box.size(), 0.0);
  auto result = integrate_nested(f, box, 0, point, options, budget);
  result.evaluations = budget.used();
  return result;
}

}  // namespace distembed
