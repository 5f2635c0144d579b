/** @file theta.hpp
 *  @brief Theta series by enumeration, and their splitting along fibres of τ.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quatlat/lattice.hpp"
#include "quatlat/quat.hpp"

namespace quatlat {

struct ThetaSeries {
  long n = 0;                         ///< truncation order
  std::vector<std::int64_t> coeffs;   ///< c_0..c_n

  std::int64_t operator[](long k) const { return coeffs.at(k); }
  friend bool operator==(const ThetaSeries& a, const ThetaSeries& b) { return a.coeffs == b.coeffs; }
};

ThetaSeries theta_coeffs(const GramMatrix& g, long n);
ThetaSeries theta_coeffs(const ExactLattice& l, long n);

/// θ₀ = Σ q^{m²}, θ₁ = Σ q^{m²+m}, truncated at n.
std::pair<ThetaSeries, ThetaSeries> theta01(long n);

struct TauDecomposition {
  std::vector<std::int64_t> f;  ///< f_k = #{β ∈ τ(L) : N(β) = 4k}
  std::vector<std::int64_t> g;  ///< g_k = #{β ∈ τ(L) : N(β) = 4k − 1}
};

/// L is a lattice of quaternions (ambient coordinates t, x, y, z) containing 1.
TauDecomposition decompose_by_tau(const AlgebraRef& alg, const ExactLattice& l, long n);

/// Σ f_k q^k θ₀ + Σ g_k q^k θ₁ truncated at n.
ThetaSeries recombine(const TauDecomposition& d, long n);

bool theta_equal(const ExactLattice& a, const ExactLattice& b, long n);

}  // namespace quatlat
