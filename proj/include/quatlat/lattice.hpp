/** @file lattice.hpp
 *  @brief Exact integral lattices: HNF spans, enumeration, minima, isometry.
 *
 *  Coordinates are row vectors. A lattice vector with coordinates x has
 *  ambient position x·B and norm Q(x) = x·A·xᵀ where A is the Gram matrix.
 */
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "quatlat/arith.hpp"
#include "quatlat/matrix.hpp"

namespace quatlat {

class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(RationalMatrix m);

  std::size_t rank() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Rational det() const { return determinant(m_); }
  bool is_positive_definite() const;
  /// Q(x) ∈ Z for integral x: integral diagonal, half-integral off-diagonal.
  bool is_integral() const;

  Rational norm(const IntegerVector& x) const;
  Rational norm(const RationalVector& x) const;
  Rational inner(const IntegerVector& x, const IntegerVector& y) const;
  Rational inner(const RationalVector& x, const RationalVector& y) const;

  /// U·A·Uᵀ.
  GramMatrix transformed(const IntegerMatrix& u) const;
  GramMatrix scaled(const Rational& s) const;

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }

 private:
  RationalMatrix m_;
};

class ExactLattice {
 public:
  ExactLattice() = default;
  /// basis: n×m rows; form: m×m symmetric ambient inner product.
  ExactLattice(RationalMatrix basis, RationalMatrix form);
  static ExactLattice from_gram(const GramMatrix& g);
  static ExactLattice standard(std::size_t n);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return form_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const RationalMatrix& form() const { return form_; }
  const GramMatrix& gram() const { return gram_; }

  RationalVector embed(const IntegerVector& coords) const;
  RationalVector embed(const RationalVector& coords) const;
  /// Coordinates of an ambient vector in this basis (rational), if in the span.
  std::optional<RationalVector> coordinates(const RationalVector& ambient) const;
  bool contains(const RationalVector& ambient) const;
  Rational ambient_inner(const RationalVector& x, const RationalVector& y) const;

  friend bool operator==(const ExactLattice& a, const ExactLattice& b) {
    return a.basis_ == b.basis_ && a.form_ == b.form_;
  }

 private:
  RationalMatrix basis_;
  RationalMatrix form_;
  GramMatrix gram_;
};

struct SpanResult {
  ExactLattice sublattice;
  RationalMatrix coords;         ///< HNF basis in ambient-lattice coordinates
  std::size_t rank = 0;
  std::optional<Rational> index;  ///< nullopt: rank deficient ("infinite")
};

/// Z-span of vectors given in coordinates of the ambient lattice's basis.
SpanResult hnf_span(const ExactLattice& ambient, const std::vector<RationalVector>& vectors);
SpanResult hnf_span(const ExactLattice& ambient, const std::vector<IntegerVector>& vectors);

/// Z-span of ambient vectors (no enclosing lattice). Basis in HNF.
ExactLattice span_ambient(const std::vector<RationalVector>& vectors, const RationalMatrix& form);

struct DetDisc {
  Rational det;
  Rational disc;
};
DetDisc det_and_disc(const ExactLattice& l);

/// [super : sub] when sub ⊆ super and both have the same rank and span.
std::optional<Integer> relative_index(const ExactLattice& super, const ExactLattice& sub);

/// Intersection of two full-rank lattices in the same ambient space.
ExactLattice intersect(const ExactLattice& a, const ExactLattice& b);

/// Dual with respect to the ambient standard dot product (full rank only).
RationalMatrix dual_basis(const RationalMatrix& basis);

struct LatticeVector {
  IntegerVector coords;
  Rational norm;
};

/// Exact LLL reduction: returns U with reduced Gram U·A·Uᵀ.
struct LllResult {
  IntegerMatrix transform;
  GramMatrix gram;
};
LllResult lll_reduce(const GramMatrix& g);

/// All x with 0 < Q(x) ≤ bound, sorted by (norm, coordinates).
std::vector<LatticeVector> enumerate_up_to(const GramMatrix& g, const Rational& bound);
std::vector<LatticeVector> enumerate_up_to(const ExactLattice& l, const Rational& bound);

/// All x with Q(x) = s exactly, sorted by coordinates.
std::vector<LatticeVector> vectors_of_norm(const GramMatrix& g, const Rational& s);

/// All integer x with Q(x − center) ≤ bound; the norm field holds Q(x − center).
std::vector<LatticeVector> enumerate_near(const GramMatrix& g, const RationalVector& center,
                                          const Rational& bound);

/// Counts c_0..c_n of vectors of each integral norm (lattice must be integral).
std::vector<std::int64_t> norm_counts(const GramMatrix& g, long n);

struct Minima {
  std::vector<Rational> values;
  std::vector<IntegerVector> vectors;
};
Minima successive_minima(const GramMatrix& g);
Minima successive_minima(const ExactLattice& l);

/// X with X·A₂·Xᵀ = A₁ and det X = ±1 (rows: images of L1's basis in L2
/// coordinates), or nullopt when no isometry exists.
std::optional<IntegerMatrix> isometry(const GramMatrix& g1, const GramMatrix& g2);
std::optional<IntegerMatrix> isometry(const ExactLattice& l1, const ExactLattice& l2);

/// Four lattice points (coordinates) forming a translated fundamental
/// parallelogram around v such that every other w has Q(v−w) ≥ c + λ.
std::array<IntegerVector, 4> separating_set(const GramMatrix& g, const RationalVector& v);

/// Lagrange–Gauss reduction of a rank-2 form: U with |2u₁·u₂| ≤ Q(u₁) ≤ Q(u₂), u₁·u₂ ≥ 0.
IntegerMatrix acute_reduce(const GramMatrix& g);

}  // namespace quatlat
