/** @file localsolve.hpp
 *  @brief Local solubility of Q(x) = s over Z_ℓ and local bases of norm-s vectors.
 */
#pragma once

#include <optional>
#include <vector>

#include "quatlat/lattice.hpp"

namespace quatlat {

/// Integral quadratic form Q(x) = x·A·xᵀ with A ∈ ½M_n(Z).
class QForm {
 public:
  explicit QForm(GramMatrix g);
  static QForm diagonal(const std::vector<Integer>& d);

  std::size_t rank() const { return g_.rank(); }
  const GramMatrix& gram() const { return g_; }
  /// A has integer entries (otherwise only the diagonal is guaranteed integral).
  bool integer_matrix() const { return integer_matrix_; }
  /// 2A, always integral.
  const IntegerMatrix& twice() const { return twice_; }

  Integer value(const IntegerVector& x) const;
  /// 2Ax, the gradient of Q at x.
  IntegerVector gradient(const IntegerVector& x) const;

 private:
  GramMatrix g_;
  IntegerMatrix twice_;
  bool integer_matrix_ = true;
};

int tau_ell(const Integer& ell);

/// Q(x) ≡ s (mod ℓ^k) and 2·v_ℓ(2Ax) + 1 ≤ k: x lifts to an exact ℓ-adic solution.
bool hensel_liftable(const QForm& q, const IntegerVector& x, const Integer& s, const Integer& ell, int k);

struct StrongResult {
  bool holds = false;
  std::optional<IntegerVector> witness;  ///< mod ℓ^{τ_ℓ}
};

/// ∃ x mod ℓ^{τ_ℓ} with Q(x) ≡ s and ℓ ∤ Ax; (2s, 2Q) when A is not integral.
StrongResult strong_lsc(const QForm& q, const Integer& s, const Integer& ell);

enum class Solubility { Soluble, Insoluble, Undecided };

struct WeakResult {
  Solubility status = Solubility::Undecided;
  std::optional<IntegerVector> witness;  ///< Hensel-liftable at modulus ℓ^depth
  int depth = 0;
};

/// Q(x) = s over Z_ℓ. Exact for odd ℓ; a bounded lifting search at ℓ = 2.
WeakResult weak_lsc(const QForm& q, const Integer& s, const Integer& ell);

/// One stage of the odd-ℓ descent: the listed diagonal coordinates are forced into ℓZ_ℓ.
struct DescentStep {
  int stage = 0;                   ///< solutions are examined mod ℓ^{stage}
  std::vector<std::size_t> forced; ///< indices in the diagonalizing basis
};

struct Descent {
  std::vector<DescentStep> steps;
  bool soluble = false;
  /// Diagonalizing basis P over Z_(ℓ): Q(yP) = Σ d_i y_i².
  RationalMatrix basis;
  std::vector<Rational> diagonal;
};

/// Reduction of Q(x) = s at odd ℓ by forcing coordinates of the non-isotropic unit part.
Descent descent_chain(const QForm& q, const Integer& s, const Integer& ell);

struct LocalBasis {
  std::vector<IntegerVector> vectors;  ///< rows, invertible mod ℓ
  int depth = 0;                       ///< each is Hensel-liftable mod ℓ^depth
};

/// n norm-s witnesses at depth τ_ℓ (3 at ℓ = 2) spanning Z_ℓⁿ, or none.
std::optional<LocalBasis> local_norm_basis(const QForm& q, const Integer& s, const Integer& ell);

/// Rank of integer vectors reduced mod a prime.
std::size_t rank_mod(const std::vector<IntegerVector>& rows, const Integer& ell);

}  // namespace quatlat
