#include "distembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "distembed/errors.hpp"
#include "distembed/summation.hpp"

namespace distembed {

namespace {

constexpr std::size_t kParallelThreshold = std::size_t{1} << 16;

struct Accumulated {
  Complex value;
  double magnitude;  // sum of |entries|, the scale against which roundoff is judged
};

template <typename RowFn>
void for_each_row(std::size_t rows, std::size_t work, RowFn&& row) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (work < kParallelThreshold || hw == 1 || rows < 2) {
    for (std::size_t i = 0; i < rows; ++i) row(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(hw, rows);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows; i += workers) row(i);
    });
  }
}

void check_dims(const Kernel& k, const GeneralizedMeasure& d, const char* what) {
  if (k.dimension() != d.dimension()) {
    throw InvalidArgument(std::string(what) + ": kernel and measure dimensions differ");
  }
}

Accumulated accumulate(const Kernel& k, const GeneralizedMeasure& d, const GeneralizedMeasure& t) {
  check_dims(k, d, "inner");
  check_dims(k, t, "inner");
  k.require_order(t.max_order(), d.max_order());
  const auto a = d.atoms();
  const auto b = t.atoms();
  std::vector<Complex> row_sums(a.size());
  std::vector<double> row_magnitudes(a.size());
  // exceptions must not escape worker threads
  std::vector<std::exception_ptr> errors(a.size());
  for_each_row(a.size(), a.size() * b.size(), [&](std::size_t i) {
    try {
      std::vector<Complex> entries(b.size());
      std::vector<double> magnitudes(b.size());
      for (std::size_t j = 0; j < b.size(); ++j) {
        entries[j] = gram_entry(k, a[i], b[j]);
        magnitudes[j] = std::abs(entries[j]);
      }
      row_sums[i] = pairwise_sum<Complex>(entries);
      row_magnitudes[i] = pairwise_sum<double>(magnitudes);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return {pairwise_sum<Complex>(row_sums), pairwise_sum<double>(row_magnitudes)};
}

}  // namespace

Complex gram_entry(const Kernel& k, const Atom& a, const Atom& b) {
  const unsigned total = a.order.order() + b.order.order();
  const double sign = (total % 2) ? -1.0 : 1.0;
  return a.weight * std::conj(b.weight) * sign *
         k.derivative(b.order, a.order, b.location, a.location);
}

Complex inner(const Kernel& k, const GeneralizedMeasure& d, const GeneralizedMeasure& t) {
  return accumulate(k, d, t).value;
}

double norm_squared(const Kernel& k, const GeneralizedMeasure& d) {
  const auto [value, magnitude] = accumulate(k, d, d);
  const double scale = 1.0 + magnitude;
  if (std::abs(value.imag()) > 1e-10 * scale) {
    throw NumericalInconsistency("self inner product has imaginary part " +
                                 std::to_string(value.imag()) + " (real part " +
                                 std::to_string(value.real()) + ")");
  }
  if (value.real() < 0.0) {
    if (value.real() < -1e-10 * scale) {
      throw NumericalInconsistency("self inner product is negative: " +
                                   std::to_string(value.real()));
    }
    return 0.0;
  }
  return value.real();
}

double norm(const Kernel& k, const GeneralizedMeasure& d) { return std::sqrt(norm_squared(k, d)); }

double distance(const Kernel& k, const GeneralizedMeasure& d, const GeneralizedMeasure& t) {
  return norm(k, d - t);
}

Complex embed_eval(const Kernel& k, const GeneralizedMeasure& d, PointView y) {
  return embed_eval_derivative(k, d, MultiIndex::zero(d.dimension()), y);
}

Complex embed_eval_derivative(const Kernel& k, const GeneralizedMeasure& d, const MultiIndex& q,
                              PointView y) {
  check_dims(k, d, "embed_eval");
  if (y.size() != k.dimension() || q.dimension() != k.dimension()) {
    throw InvalidArgument("embed_eval: point or multi-index dimension mismatch");
  }
  std::vector<Complex> terms;
  terms.reserve(d.size());
  for (const auto& atom : d.atoms()) {
    if (!k.smoothness().admits(atom.order.order() + q.order())) {
      throw UnsupportedOrder("embed_eval: atom order plus derivative order exceeds smoothness " +
                             to_string(k.smoothness()));
    }
    const double sign = (atom.order.order() % 2) ? -1.0 : 1.0;
    terms.push_back(atom.weight * sign * k.derivative(q, atom.order, y, atom.location));
  }
  return pairwise_sum<Complex>(terms);
}

EmbeddedFunction::EmbeddedFunction(Kernel kernel, GeneralizedMeasure source)
    : kernel_(std::move(kernel)), source_(std::move(source)) {
  check_dims(kernel_, source_, "EmbeddedFunction");
  kernel_.require_order(source_.max_order(), 0);
}

std::string to_string(SpdVerdict verdict) {
  switch (verdict) {
    case SpdVerdict::kPositiveDefinite: return "positive-definite";
    case SpdVerdict::kSemidefiniteDegenerate: return "semidefinite-degenerate";
    case SpdVerdict::kIndefiniteNumerical: return "indefinite-numerical";
  }
  return "unknown";
}

Eigen::MatrixXcd gram_matrix(const Kernel& k, std::span<const Atom> atoms) {
  const auto n = static_cast<Eigen::Index>(atoms.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (atoms[i].location.size() != k.dimension()) {
      throw InvalidArgument("gram_matrix: atom dimension mismatch");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const Atom a{1.0, atoms[i].order, atoms[i].location};
      const Atom b{1.0, atoms[j].order, atoms[j].location};
      g(i, j) = gram_entry(k, a, b);
    }
  }
  return g;
}

SpdDiagnostic spd_check(const Kernel& k, std::span<const Atom> atoms, double tol) {
  if (atoms.empty()) throw InvalidArgument("spd_check: empty atom list");
  if (!(tol > 0.0)) throw InvalidArgument("spd_check: tolerance must be positive");
  const Eigen::MatrixXcd g = gram_matrix(k, atoms);
  // symmetrize away roundoff before the Hermitian solver
  const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalInconsistency("spd_check: eigensolver failed to converge");
  }
  SpdDiagnostic out;
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.gram_size = atoms.size();
  if (out.min_eigenvalue > tol) {
    out.verdict = SpdVerdict::kPositiveDefinite;
  } else if (out.min_eigenvalue >= -tol) {
    out.verdict = SpdVerdict::kSemidefiniteDegenerate;
  } else {
    out.verdict = SpdVerdict::kIndefiniteNumerical;
  }
  return out;
}

}  // namespace distembed
