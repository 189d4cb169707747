#include "distembed/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "distembed/errors.hpp"

namespace distembed {

struct Kernel::State {
  std::string name;
  std::size_t dimension;
  Smoothness smoothness;
  Evaluator evaluate;
  DerivativeEvaluator derivative;
  std::optional<StationaryProfile> stationary;
};

namespace {

/// Fixed-capacity scratch buffer that spills to the heap for large sizes.
template <typename T, std::size_t N = 16>
class Scratch {
 public:
  explicit Scratch(std::size_t n) : size_(n) {
    if (n > N) heap_.resize(n);
  }
  std::span<T> span() { return {size_ > N ? heap_.data() : stack_.data(), size_}; }

 private:
  std::size_t size_;
  std::array<T, N> stack_{};
  std::vector<T> heap_;
};

void check_dimension(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (expected " +
                          std::to_string(expected) + ", got " + std::to_string(got) + ")");
  }
}

double binomial(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// cos(theta + n pi / 2) without rounding the phase shift.
double shifted_cos(double theta, unsigned n) {
  switch (n % 4) {
    case 0: return std::cos(theta);
    case 1: return -std::sin(theta);
    case 2: return -std::cos(theta);
    default: return std::sin(theta);
  }
}

// sin(theta + n pi / 2)
double shifted_sin(double theta, unsigned n) {
  switch (n % 4) {
    case 0: return std::sin(theta);
    case 1: return std::cos(theta);
    case 2: return -std::sin(theta);
    default: return -std::cos(theta);
  }
}

Complex fd_stencil(const Kernel::Evaluator& f, const MultiIndex& p, const MultiIndex& q,
                   PointView x, PointView y, double h) {
  struct Axis {
    bool second;
    std::size_t index;
    unsigned order;
  };
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] > 0) axes.push_back({false, i, p[i]});
  }
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    if (q[i] > 0) axes.push_back({true, i, q[i]});
  }
  if (axes.empty()) return f(x, y);

  Point xs(x.begin(), x.end());
  Point ys(y.begin(), y.end());
  std::vector<unsigned> j(axes.size(), 0);
  Complex acc = 0.0;
  while (true) {
    double coeff = 1.0;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const auto& ax = axes[a];
      coeff *= ((j[a] % 2) ? -1.0 : 1.0) * binomial(ax.order, j[a]);
      const double offset = (0.5 * ax.order - j[a]) * h;
      if (ax.second) {
        ys[ax.index] = y[ax.index] + offset;
      } else {
        xs[ax.index] = x[ax.index] + offset;
      }
    }
    acc += coeff * f(xs, ys);
    std::size_t a = 0;
    while (a < axes.size() && ++j[a] > axes[a].order) j[a++] = 0;
    if (a == axes.size()) break;
  }
  return acc / std::pow(h, static_cast<int>(p.order() + q.order()));
}

using ProfileValue = std::function<double(PointView h)>;
using ProfileDerivative = std::function<double(std::span<const unsigned> r, PointView h)>;

/// k(x, y) = psi(x - y): d^(p,q) k(x, y) = (-1)^|q| psi^(p+q)(x - y).
Kernel make_stationary(std::string name, std::size_t dim, Smoothness smoothness, ProfileValue psi,
                       ProfileDerivative dpsi, std::optional<SpectralMeasure> spectrum) {
  auto evaluate = [psi](PointView x, PointView y) -> Complex {
    Scratch<double> buf(x.size());
    auto h = buf.span();
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = x[i] - y[i];
    return psi(h);
  };
  auto derivative = [psi, dpsi](const MultiIndex& p, const MultiIndex& q, PointView x,
                                PointView y) -> Complex {
    Scratch<double> buf(x.size());
    Scratch<unsigned> ord(x.size());
    auto h = buf.span();
    auto r = ord.span();
    for (std::size_t i = 0; i < h.size(); ++i) {
      h[i] = x[i] - y[i];
      r[i] = p[i] + q[i];
    }
    if (p.is_zero() && q.is_zero()) return psi(h);
    const double sign = (q.order() % 2) ? -1.0 : 1.0;
    return sign * dpsi(r, h);
  };
  StationaryProfile profile{[psi](PointView h) -> Complex { return psi(h); }, std::move(spectrum)};
  return Kernel(std::move(name), dim, smoothness, std::move(evaluate), std::move(derivative),
                std::move(profile));
}

/// d^n/dt^n exp(-t^2) = (-1)^n H_n(t) exp(-t^2), H_n the physicists' Hermite polynomial.
double gaussian_profile_derivative(unsigned n, double t) {
  double h_prev = 1.0;
  double h = 2.0 * t;
  if (n == 0) {
    h = 1.0;
  } else {
    for (unsigned k = 1; k < n; ++k) {
      const double next = 2.0 * t * h - 2.0 * k * h_prev;
      h_prev = h;
      h = next;
    }
  }
  return ((n % 2) ? -1.0 : 1.0) * h * std::exp(-t * t);
}

double sinc_derivative(unsigned n, double h) {
  const double a = std::abs(h);
  if (a < 2.0 + n) {
    // term-wise derivative of sum_k (-1)^k h^(2k) / (2k+1)!:
    //   sum_{2k >= n} (-1)^k h^(2k-n) / ((2k+1) (2k-n)!)
    unsigned k = (n + 1) / 2;
    unsigned m = 2 * k - n;
    double power_over_fact = (m == 0) ? 1.0 : h;  // h^m / m!
    double sum = 0.0;
    for (int iter = 0; iter < 400; ++iter) {
      const double term = ((k % 2) ? -1.0 : 1.0) * power_over_fact / (2.0 * k + 1.0);
      sum += term;
      if (m > a && std::abs(term) <= 1e-18 * std::max(1.0, std::abs(sum))) break;
      power_over_fact *= h * h / ((m + 1.0) * (m + 2.0));
      m += 2;
      ++k;
    }
    return sum;
  }
  // Leibniz rule on sin(h) * h^-1
  double sum = 0.0;
  double inv_power = 1.0 / h;  // (-1)^k k! / h^(k+1)
  for (unsigned k = 0; k <= n; ++k) {
    sum += binomial(n, k) * shifted_sin(h, n - k) * inv_power;
    inv_power *= -(k + 1.0) / h;
  }
  return sum;
}

/// Truncated multivariate Taylor polynomial over the multi-indices alpha <= r.
class BoxJet {
 public:
  explicit BoxJet(std::span<const unsigned> r) : r_(r.begin(), r.end()) {
    std::size_t size = 1;
    for (auto e : r_) size *= e + 1;
    coeff_.assign(size, 0.0);
    index_.resize(size);
    for (std::size_t flat = 0; flat < size; ++flat) {
      std::vector<unsigned> alpha(r_.size());
      std::size_t rest = flat;
      for (std::size_t i = 0; i < r_.size(); ++i) {
        alpha[i] = static_cast<unsigned>(rest % (r_[i] + 1));
        rest /= r_[i] + 1;
      }
      index_[flat] = std::move(alpha);
    }
  }

  [[nodiscard]] std::size_t flat(std::span<const unsigned> alpha) const {
    std::size_t f = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < r_.size(); ++i) {
      f += alpha[i] * stride;
      stride *= r_[i] + 1;
    }
    return f;
  }

  double& operator[](std::size_t f) { return coeff_[f]; }
  [[nodiscard]] double top() const { return coeff_.back(); }

  [[nodiscard]] BoxJet times(const BoxJet& other) const {
    BoxJet out(r_);
    std::vector<unsigned> diff(r_.size());
    for (std::size_t g = 0; g < coeff_.size(); ++g) {
      double acc = 0.0;
      for (std::size_t a = 0; a < coeff_.size(); ++a) {
        if (coeff_[a] == 0.0) continue;
        bool below = true;
        for (std::size_t i = 0; i < r_.size() && below; ++i) {
          below = index_[a][i] <= index_[g][i];
          if (below) diff[i] = index_[g][i] - index_[a][i];
        }
        if (below) acc += coeff_[a] * other.coeff_[flat(diff)];
      }
      out.coeff_[g] = acc;
    }
    return out;
  }

  void axpy(double a, const BoxJet& x) {
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += a * x.coeff_[i];
  }

 private:
  std::vector<unsigned> r_;
  std::vector<double> coeff_;
  std::vector<std::vector<unsigned>> index_;
};

double imq_derivative(std::span<const unsigned> r, PointView h, double c, double beta) {
  double s0 = 0.0;
  for (double v : h) s0 += v * v / (c * c);
  unsigned total = 0;
  for (auto e : r) total += e;
  const double base = 1.0 + s0;
  if (total == 0) return std::pow(base, -beta);

  // u(t) = s(h + t) - s(h) = sum_i (2 h_i t_i + t_i^2) / c^2
  BoxJet u(r);
  std::vector<unsigned> alpha(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] >= 1) {
      alpha[i] = 1;
      u[u.flat(alpha)] = 2.0 * h[i] / (c * c);
    }
    if (r[i] >= 2) {
      alpha[i] = 2;
      u[u.flat(alpha)] = 1.0 / (c * c);
    }
    alpha[i] = 0;
  }
  // g(s0 + u) = sum_k g^(k)(s0) / k! u^k with g(s) = (1 + s)^-beta
  double gk = std::pow(base, -beta);
  BoxJet result(r);
  BoxJet power = u;
  for (unsigned k = 1; k <= total; ++k) {
    gk *= (-beta - (k - 1.0)) / (k * base);
    result.axpy(gk, power);
    if (k < total) power = power.times(u);
  }
  double rfact = 1.0;
  for (auto e : r) rfact *= factorial(e);
  return rfact * result.top();
}

}  // namespace

std::string to_string(Smoothness s) {
  return s.is_unbounded() ? std::string("inf") : std::to_string(s.value());
}

Kernel::Kernel(std::string name, std::size_t dimension, Smoothness smoothness, Evaluator evaluate,
               DerivativeEvaluator derivative, std::optional<StationaryProfile> stationary) {
  if (dimension == 0) throw InvalidArgument("Kernel: dimension must be positive");
  if (!evaluate) throw InvalidArgument("Kernel: evaluator required");
  if (stationary && stationary->spectrum && stationary->spectrum->dimension() != dimension) {
    throw InvalidArgument("Kernel: spectral measure dimension mismatch");
  }
  state_ = std::make_shared<const State>(State{std::move(name), dimension, smoothness,
                                               std::move(evaluate), std::move(derivative),
                                               std::move(stationary)});
}

const std::string& Kernel::name() const { return state_->name; }
std::size_t Kernel::dimension() const { return state_->dimension; }
Smoothness Kernel::smoothness() const { return state_->smoothness; }
bool Kernel::is_stationary() const { return state_->stationary.has_value(); }
const std::optional<StationaryProfile>& Kernel::stationary() const { return state_->stationary; }

const SpectralMeasure* Kernel::spectrum() const {
  if (!state_->stationary || !state_->stationary->spectrum) return nullptr;
  return &*state_->stationary->spectrum;
}

Complex Kernel::operator()(PointView x, PointView y) const {
  check_dimension(state_->dimension, x.size(), "kernel evaluation");
  check_dimension(state_->dimension, y.size(), "kernel evaluation");
  return state_->evaluate(x, y);
}

void Kernel::require_order(unsigned p_order, unsigned q_order) const {
  if (!state_->smoothness.admits(p_order) || !state_->smoothness.admits(q_order)) {
    throw UnsupportedOrder("kernel '" + state_->name + "' has smoothness " +
                           to_string(state_->smoothness) + ", derivative of order (" +
                           std::to_string(p_order) + ", " + std::to_string(q_order) +
                           ") requested");
  }
}

Complex Kernel::derivative(const MultiIndex& p, const MultiIndex& q, PointView x,
                           PointView y) const {
  check_dimension(state_->dimension, p.dimension(), "kernel derivative");
  check_dimension(state_->dimension, q.dimension(), "kernel derivative");
  check_dimension(state_->dimension, x.size(), "kernel derivative");
  check_dimension(state_->dimension, y.size(), "kernel derivative");
  require_order(p.order(), q.order());
  if (p.is_zero() && q.is_zero()) return state_->evaluate(x, y);
  if (!state_->derivative) return finite_difference_derivative(*this, p, q, x, y);
  return state_->derivative(p, q, x, y);
}

Complex finite_difference_derivative(const Kernel& k, const MultiIndex& p, const MultiIndex& q,
                                     PointView x, PointView y, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("finite difference step must be > 0");
  check_dimension(k.dimension(), p.dimension(), "finite_difference_derivative");
  check_dimension(k.dimension(), q.dimension(), "finite_difference_derivative");
  check_dimension(k.dimension(), x.size(), "finite_difference_derivative");
  check_dimension(k.dimension(), y.size(), "finite_difference_derivative");
  return fd_stencil([&k](PointView a, PointView b) { return k(a, b); }, p, q, x, y, h);
}

Complex finite_difference_derivative(const Kernel& k, const MultiIndex& p, const MultiIndex& q,
                                     PointView x, PointView y, const FiniteDifferenceOptions& opts) {
  if (p.order() + q.order() == 0) return k(x, y);
  if (!(opts.initial_step > 0.0) || !(opts.shrink > 1.0) || opts.levels < 2) {
    throw InvalidArgument("finite_difference_derivative: bad options");
  }
  // Neville tableau over h, h/c, h/c^2, ... in powers of h^2, at most
  // kMaxDepth eliminations deep. Each column keeps its entry with the smallest
  // observed change; a column is scored by that change and by its distance to
  // the next column, so a lucky coincidence at one step size is not trusted.
  constexpr unsigned kMaxDepth = 4;
  const double c2 = opts.shrink * opts.shrink;
  std::vector<std::vector<Complex>> a(kMaxDepth + 1, std::vector<Complex>(opts.levels));
  std::vector<Complex> column_best(opts.levels);
  std::vector<double> column_err(opts.levels, std::numeric_limits<double>::infinity());
  double step = opts.initial_step;
  a[0][0] = finite_difference_derivative(k, p, q, x, y, step);
  for (unsigned i = 1; i < opts.levels; ++i) {
    step /= opts.shrink;
    a[0][i] = finite_difference_derivative(k, p, q, x, y, step);
    double fac = c2;
    for (unsigned j = 1; j <= std::min(i, kMaxDepth); ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= c2;
      const double err =
          std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (err <= column_err[i]) {
        column_err[i] = err;
        column_best[i] = a[j][i];
      }
    }
  }
  Complex best = column_best[1];
  double best_score = std::numeric_limits<double>::infinity();
  for (unsigned i = 1; i + 1 < opts.levels; ++i) {
    const double score =
        std::max({column_err[i], column_err[i + 1], std::abs(column_best[i] - column_best[i + 1])});
    if (score < best_score) {
      best_score = score;
      best = column_best[i];
    }
  }
  return best;
}

Kernel shift(const Kernel& k, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw InvalidArgument("shift: constant must be finite and nonnegative");
  }
  auto evaluate = [k, c](PointView x, PointView y) { return k(x, y) + c; };
  auto derivative = [k, c](const MultiIndex& p, const MultiIndex& q, PointView x, PointView y) {
    const Complex v = k.derivative(p, q, x, y);
    return (p.is_zero() && q.is_zero()) ? v + c : v;
  };
  std::optional<StationaryProfile> profile;
  if (const auto& s = k.stationary()) {
    std::optional<SpectralMeasure> spectrum;
    if (s->spectrum) spectrum = s->spectrum->with_origin_atom(c);
    profile = StationaryProfile{[psi = s->psi, c](PointView h) { return psi(h) + c; },
                                std::move(spectrum)};
  }
  return Kernel(k.name() + "+shift", k.dimension(), k.smoothness(), std::move(evaluate),
                std::move(derivative), std::move(profile));
}

Kernel sum(const Kernel& k1, const Kernel& k2) {
  check_dimension(k1.dimension(), k2.dimension(), "sum");
  auto evaluate = [k1, k2](PointView x, PointView y) { return k1(x, y) + k2(x, y); };
  auto derivative = [k1, k2](const MultiIndex& p, const MultiIndex& q, PointView x, PointView y) {
    return k1.derivative(p, q, x, y) + k2.derivative(p, q, x, y);
  };
  std::optional<StationaryProfile> profile;
  if (k1.is_stationary() && k2.is_stationary()) {
    const auto& s1 = *k1.stationary();
    const auto& s2 = *k2.stationary();
    std::optional<SpectralMeasure> spectrum;
    if (s1.spectrum && s2.spectrum) spectrum = *s1.spectrum + *s2.spectrum;
    profile = StationaryProfile{
        [a = s1.psi, b = s2.psi](PointView h) { return a(h) + b(h); }, std::move(spectrum)};
  }
  return Kernel(k1.name() + "+" + k2.name(), k1.dimension(),
                min(k1.smoothness(), k2.smoothness()), std::move(evaluate), std::move(derivative),
                std::move(profile));
}

Kernel scale(const Kernel& k, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("scale: factor must be positive");
  auto evaluate = [k, a](PointView x, PointView y) { return a * k(x, y); };
  auto derivative = [k, a](const MultiIndex& p, const MultiIndex& q, PointView x, PointView y) {
    return a * k.derivative(p, q, x, y);
  };
  std::optional<StationaryProfile> profile;
  if (const auto& s = k.stationary()) {
    std::optional<SpectralMeasure> spectrum;
    if (s->spectrum) spectrum = s->spectrum->scaled(a);
    profile = StationaryProfile{[psi = s->psi, a](PointView h) { return a * psi(h); },
                                std::move(spectrum)};
  }
  return Kernel(std::to_string(a) + "*" + k.name(), k.dimension(), k.smoothness(),
                std::move(evaluate), std::move(derivative), std::move(profile));
}

Kernel center(const Kernel& k, const GeneralizedMeasure& nu0) {
  check_dimension(k.dimension(), nu0.dimension(), "center");
  for (const auto& a : nu0.atoms()) {
    if (!a.order.is_zero()) {
      throw InvalidArgument("center: the centering measure must have only order-0 atoms");
    }
  }
  // |nu0|_k^2 = sum_ij w_i conj(w_j) k(z_j, z_i)
  Complex self = 0.0;
  for (const auto& a : nu0.atoms()) {
    for (const auto& b : nu0.atoms()) self += a.weight * std::conj(b.weight) * k(b.location, a.location);
  }
  const double norm_sq = self.real();

  auto evaluate = [k, nu0, norm_sq](PointView x, PointView y) {
    Complex v = k(x, y) + norm_sq;
    for (const auto& a : nu0.atoms()) {
      v -= a.weight * k(x, a.location);
      v -= std::conj(a.weight) * k(a.location, y);
    }
    return v;
  };
  auto derivative = [k, nu0, norm_sq](const MultiIndex& p, const MultiIndex& q, PointView x,
                                      PointView y) {
    Complex v = k.derivative(p, q, x, y);
    const auto zero = MultiIndex::zero(x.size());
    if (q.is_zero()) {
      for (const auto& a : nu0.atoms()) v -= a.weight * k.derivative(p, zero, x, a.location);
    }
    if (p.is_zero()) {
      for (const auto& a : nu0.atoms()) {
        v -= std::conj(a.weight) * k.derivative(zero, q, a.location, y);
      }
    }
    if (p.is_zero() && q.is_zero()) v += norm_sq;
    return v;
  };
  return Kernel(k.name() + "|centered", k.dimension(), k.smoothness(), std::move(evaluate),
                std::move(derivative));
}

Kernel derivative_kernel(const Kernel& k, const MultiIndex& p) {
  check_dimension(k.dimension(), p.dimension(), "derivative_kernel");
  k.require_order(p.order(), p.order());
  const Smoothness s = k.smoothness().is_unbounded()
                           ? Smoothness::unbounded()
                           : Smoothness::order(k.smoothness().value() - p.order());
  auto evaluate = [k, p](PointView x, PointView y) { return k.derivative(p, p, x, y); };
  auto derivative = [k, p](const MultiIndex& a, const MultiIndex& b, PointView x, PointView y) {
    return k.derivative(a + p, b + p, x, y);
  };
  std::optional<StationaryProfile> profile;
  if (const auto& st = k.stationary()) {
    std::optional<SpectralMeasure> spectrum;
    if (st->spectrum) spectrum = st->spectrum->weighted_by_monomial(p + p);
    const Point origin(k.dimension(), 0.0);
    profile = StationaryProfile{
        [k, p, origin](PointView h) { return k.derivative(p, p, h, origin); },
        std::move(spectrum)};
  }
  std::string name = "d(";
  for (std::size_t i = 0; i < p.dimension(); ++i) name += (i ? "," : "") + std::to_string(p[i]);
  name += ")" + k.name();
  return Kernel(std::move(name), k.dimension(), s, std::move(evaluate), std::move(derivative),
                std::move(profile));
}

namespace kernels {

Kernel gaussian(std::size_t dimension, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("gaussian: sigma must be positive");
  }
  auto psi = [sigma](PointView h) {
    double r2 = 0.0;
    for (double v : h) r2 += v * v;
    return std::exp(-r2 / (sigma * sigma));
  };
  auto dpsi = [sigma](std::span<const unsigned> r, PointView h) {
    double v = 1.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      v *= gaussian_profile_derivative(r[i], h[i] / sigma) / std::pow(sigma, static_cast<int>(r[i]));
    }
    return v;
  };
  return make_stationary("gaussian", dimension, Smoothness::unbounded(), psi, dpsi,
                         spectra::gaussian(dimension, sigma));
}

Kernel laplace(std::size_t dimension, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("laplace: sigma must be positive");
  }
  auto psi = [sigma](PointView h) {
    double r2 = 0.0;
    for (double v : h) r2 += v * v;
    return std::exp(-std::sqrt(r2) / sigma);
  };
  auto dpsi = [](std::span<const unsigned>, PointView) -> double {
    throw UnsupportedOrder("laplace kernel is not differentiable");
  };
  return make_stationary("laplace", dimension, Smoothness::order(0), psi, dpsi, std::nullopt);
}

Kernel sinc() {
  auto psi = [](PointView h) { return sinc_derivative(0, h[0]); };
  auto dpsi = [](std::span<const unsigned> r, PointView h) { return sinc_derivative(r[0], h[0]); };
  return make_stationary("sinc", 1, Smoothness::unbounded(), psi, dpsi, spectra::sinc());
}

Kernel cosine(std::vector<double> amplitudes, std::vector<Point> frequencies) {
  if (amplitudes.empty() || amplitudes.size() != frequencies.size()) {
    throw InvalidArgument("cosine: need one frequency per amplitude");
  }
  for (double a : amplitudes) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw InvalidArgument("cosine: amplitudes must be >= 0");
  }
  const std::size_t dim = frequencies.front().size();
  if (dim == 0) throw InvalidArgument("cosine: empty frequency");
  auto spectrum = spectra::cosine(amplitudes, frequencies);
  auto psi = [amplitudes, frequencies](PointView h) {
    double v = 0.0;
    for (std::size_t j = 0; j < amplitudes.size(); ++j) {
      double theta = 0.0;
      for (std::size_t i = 0; i < h.size(); ++i) theta += frequencies[j][i] * h[i];
      v += amplitudes[j] * std::cos(theta);
    }
    return v;
  };
  auto dpsi = [amplitudes, frequencies](std::span<const unsigned> r, PointView h) {
    unsigned total = 0;
    for (auto e : r) total += e;
    double v = 0.0;
    for (std::size_t j = 0; j < amplitudes.size(); ++j) {
      double theta = 0.0;
      double mono = 1.0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        theta += frequencies[j][i] * h[i];
        mono *= std::pow(frequencies[j][i], static_cast<int>(r[i]));
      }
      v += amplitudes[j] * mono * shifted_cos(theta, total);
    }
    return v;
  };
  return make_stationary("cosine", dim, Smoothness::unbounded(), psi, dpsi, std::move(spectrum));
}

Kernel inverse_multiquadric(std::size_t dimension, double c, double beta) {
  if (!(c > 0.0) || !(beta > 0.0) || !std::isfinite(c) || !std::isfinite(beta)) {
    throw InvalidArgument("inverse_multiquadric: c and beta must be positive");
  }
  auto psi = [c, beta](PointView h) {
    double s = 0.0;
    for (double v : h) s += v * v / (c * c);
    return std::pow(1.0 + s, -beta);
  };
  auto dpsi = [c, beta](std::span<const unsigned> r, PointView h) {
    return imq_derivative(r, h, c, beta);
  };
  return make_stationary("imq", dimension, Smoothness::unbounded(), psi, dpsi, std::nullopt);
}

Kernel constant(std::size_t dimension, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidArgument("constant: value must be finite and nonnegative");
  }
  auto psi = [value](PointView) { return value; };
  auto dpsi = [](std::span<const unsigned>, PointView) { return 0.0; };
  return make_stationary("constant", dimension, Smoothness::unbounded(), psi, dpsi,
                         spectra::constant(dimension, value));
}

Kernel brownian() {
  auto evaluate = [](PointView x, PointView y) -> Complex {
    return std::min(std::abs(x[0]), std::abs(y[0]));
  };
  return Kernel("brownian", 1, Smoothness::order(0), std::move(evaluate), nullptr);
}

}  // namespace kernels

}  // namespace distembed
