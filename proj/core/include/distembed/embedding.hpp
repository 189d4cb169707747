#pragma once

#include <cstddef>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "distembed/kernel.hpp"
#include "distembed/measure.hpp"

namespace distembed {

/// RKHS inner product of the embeddings of two single atoms,
///   <Phi(w_a d^p delta_x), Phi(w_b d^q delta_y)>
///     = w_a conj(w_b) (-1)^(|p|+|q|) d^(q,p) k(y, x).
/// Linear in the first slot, antilinear in the second.
Complex gram_entry(const Kernel& k, const Atom& a, const Atom& b);

/// <Phi(D), Phi(T)>_k summed over all atom pairs. Row sums and the final
/// reduction use pairwise summation over the canonical atom order, so the
/// result is deterministic even when rows are computed concurrently.
Complex inner(const Kernel& k, const GeneralizedMeasure& d, const GeneralizedMeasure& t);

/// |D|_k^2 = Re <D, D>. Tiny negative values from roundoff are clamped to 0;
/// larger negativity or a non-negligible imaginary part raise
/// NumericalInconsistency.
double norm_squared(const Kernel& k, const GeneralizedMeasure& d);
double norm(const Kernel& k, const GeneralizedMeasure& d);
/// Kernel (semi-)metric |Phi(D) - Phi(T)|_k.
double distance(const Kernel& k, const GeneralizedMeasure& d, const GeneralizedMeasure& t);

/// Pointwise value of Phi(D) at y: sum w (-1)^|p| d^(0,p) k(y, x).
Complex embed_eval(const Kernel& k, const GeneralizedMeasure& d, PointView y);

/// q-th partial derivative of Phi(D) at y: sum w (-1)^|p| d^(q,p) k(y, x).
Complex embed_eval_derivative(const Kernel& k, const GeneralizedMeasure& d, const MultiIndex& q,
                              PointView y);

/// Phi_k(D) as a function, checked at construction against the kernel's
/// smoothness.
class EmbeddedFunction {
 public:
  EmbeddedFunction(Kernel kernel, GeneralizedMeasure source);

  [[nodiscard]] const Kernel& kernel() const { return kernel_; }
  [[nodiscard]] const GeneralizedMeasure& source() const { return source_; }

  Complex operator()(PointView y) const { return embed_eval(kernel_, source_, y); }
  [[nodiscard]] Complex derivative(const MultiIndex& q, PointView y) const {
    return embed_eval_derivative(kernel_, source_, q, y);
  }

 private:
  Kernel kernel_;
  GeneralizedMeasure source_;
};

enum class SpdVerdict { kPositiveDefinite, kSemidefiniteDegenerate, kIndefiniteNumerical };

std::string to_string(SpdVerdict verdict);

struct SpdDiagnostic {
  double min_eigenvalue = 0.0;
  std::size_t gram_size = 0;
  SpdVerdict verdict = SpdVerdict::kSemidefiniteDegenerate;
};

/// Hermitian Gram matrix G_ij = gram_entry(unit a_i, unit a_j); input weights
/// are ignored.
Eigen::MatrixXcd gram_matrix(const Kernel& k, std::span<const Atom> atoms);

/// Smallest eigenvalue of the unit-weight Gram matrix, classified against tol:
/// > tol positive definite, within +-tol degenerate, < -tol indefinite (which
/// for a genuine p.d. kernel points at an implementation error).
SpdDiagnostic spd_check(const Kernel& k, std::span<const Atom> atoms, double tol);

}  // namespace distembed
