/** @file orders.hpp
 *  @brief Orders in definite quaternion algebras and their Gross lattices.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quatlat/lattice.hpp"
#include "quatlat/quat.hpp"

namespace quatlat {

enum class OrderErrorKind { NotFullRank, NotUnital, NotIntegral, NotClosed };

class OrderError : public std::runtime_error {
 public:
  OrderError(OrderErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  OrderErrorKind kind() const { return kind_; }

 private:
  OrderErrorKind kind_;
};

class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Z-span (HNF basis) of quaternions, with the norm form as inner product.
ExactLattice quat_lattice(const AlgebraRef& alg, const std::vector<Quat>& gens);
std::vector<Quat> lattice_quats(const AlgebraRef& alg, const ExactLattice& l);
Quat to_quat(const AlgebraRef& alg, const RationalVector& coords);

/// Representatives of the points of P^{dim−1}(F_ℓ), first nonzero entry 1.
std::vector<IntegerVector> projective_points(long ell, std::size_t dim);

class Order {
 public:
  /// Validates unital, integral, closed; throws OrderError.
  static Order from_basis(const AlgebraRef& alg, const std::vector<Quat>& basis);
  /// Same, from any full-rank generating set of the lattice.
  static Order from_generators(const AlgebraRef& alg, const std::vector<Quat>& gens);

  const AlgebraRef& algebra() const { return alg_; }
  const ExactLattice& lattice() const { return lattice_; }
  std::vector<Quat> basis() const { return lattice_quats(alg_, lattice_); }
  const Integer& discriminant() const { return disc_; }
  bool contains(const Quat& x) const { return lattice_.contains(x.coords()); }

  friend bool operator==(const Order& a, const Order& b) { return a.lattice_ == b.lattice_; }

 private:
  Order(AlgebraRef alg, ExactLattice lattice, Integer disc)
      : alg_(std::move(alg)), lattice_(std::move(lattice)), disc_(std::move(disc)) {}
  AlgebraRef alg_;
  ExactLattice lattice_;
  Integer disc_;
};

Order order_from_basis(const AlgebraRef& alg, const std::vector<Quat>& basis);

/// |det(Tr(v_i v_j))|.
Rational trace_discriminant(const std::vector<Quat>& basis);

Order saturate(const Order& o, const Integer& p);
Order maximal_order(const Integer& p);

struct GrossLattice {
  Order parent;
  ExactLattice lattice;  ///< rank 3, trace-zero, ambient coordinates (t, x, y, z)
};

GrossLattice gross(const Order& o);

/// Trace-zero sublattice O⁰.
ExactLattice trace_zero_part(const Order& o);

struct IndexChain {
  Integer o_over_z_plus_o0;  ///< [O : Z ⊥ O⁰]
  Integer o0_over_ot;        ///< [O⁰ : O^T]
  Integer ot_over_2o0;       ///< [O^T : 2O⁰]
};
IndexChain index_chain(const Order& o);

/// #{β ∈ O^T : N(β) = D}, primitive only when optimal.
std::size_t embedding_count(const Order& o, const Integer& d, bool optimal);

struct EichlerResult {
  Order order;
  Integer index;
};
EichlerResult eichler_intersect(const Order& o1, const Order& o2);

/// The unique α ∈ O with τ(α) = β and Tr(α) ∈ {0, 1}.
Quat min_trace_lift(const GrossLattice& g, const Quat& beta);

}  // namespace quatlat
