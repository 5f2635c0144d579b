/** @file classes.hpp
 *  @brief Right ideals, left orders and isomorphism classes of maximal orders.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatlat/orders.hpp"
#include "quatlat/theta.hpp"

namespace quatlat {

struct RightIdeal {
  Order order;          ///< right order
  ExactLattice lattice; ///< HNF basis
  Integer norm;         ///< reduced norm
};

/// Right ideal generated by gens as a lattice; checks I·O ⊆ I and that the two
/// reduced-norm formulas agree.
RightIdeal make_right_ideal(const Order& o, const std::vector<Quat>& gens);

/// Nrd from det(I)/det(O) = Nrd⁴.
Integer nrd_by_det(const ExactLattice& ideal, const Order& o);
/// Nrd as gcd of norms over the lattice.
Integer nrd_by_gcd(const AlgebraRef& alg, const ExactLattice& ideal);

/// Gram of inner(x_i, x_j)/Nrd(I) for a given basis.
GramMatrix normalized_gram(const std::vector<Quat>& basis, const Integer& nrd);

std::vector<RightIdeal> right_ideals_norm_ell(const Order& o, long ell);

/// {x : xI ⊆ I}.
Order left_order(const RightIdeal& i);

bool isomorphic_orders(const Order& a, const Order& b);

/// Lexicographically least Gram among bases of the Gross lattice attaining its minima.
GramMatrix canonical_gross_gram(const Order& o);

struct ClassSet {
  long p = 0;
  long ell = 0;
  std::vector<Order> representatives;           ///< sorted by canonical Gross Gram
  std::vector<GramMatrix> canonical_grams;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< ℓ-neighbour graph (with multiplicity)
};

/// BFS over ℓ-neighbours from maximal_order(p). ell = 0 picks 2 (3 when p = 2).
ClassSet class_enumerate(long p, long ell = 0);

/// Index of the class of o in the set, or nullopt.
std::optional<std::size_t> find_class(const ClassSet& cs, const Order& o);

/// Type-number bounds [(p−1)/24, (p+13)/12].
std::pair<Rational, Rational> type_number_bounds(long p);

struct P151Report {
  bool order_valid = false;
  Integer order_disc;
  Integer nrd1_det, nrd1_gcd, nrd2_det, nrd2_gcd;
  bool ideals_right_stable = false;
  GramMatrix gram1, gram2;
  bool gram1_matches = false, gram2_matches = false;
  Rational det1, det2;
  ThetaSeries theta1, theta2;
  bool isospectral = false;
  bool printed_prefix_matches = false;
  std::vector<std::pair<long, std::int64_t>> slot_between_12_and_15;  ///< recomputed terms
  bool isometric = true;
  bool orth_3_6_lattice1 = false, orth_3_6_lattice2 = false;
  bool left_orders_isomorphic = true;
  Integer left_disc1, left_disc2;

  bool ok() const;
};

P151Report repro_p151();

}  // namespace quatlat
