#include "quatlat/classes.hpp"

#include <gtest/gtest.h>

#include <set>

namespace quatlat {
namespace {

Quat inverse_of(const Quat& g) { return g.conj() / g.norm(); }

TEST(Ideals, CountAndNorms) {
  Order o = maximal_order(11);
  for (long ell : {2, 3}) {
    auto ideals = right_ideals_norm_ell(o, ell);
    ASSERT_EQ(ideals.size(), static_cast<std::size_t>(ell + 1));
    std::set<std::vector<Rational>> hnfs;
    for (const auto& i : ideals) {
      EXPECT_EQ(i.norm, ell);
      EXPECT_EQ(nrd_by_det(i.lattice, o), ell);
      EXPECT_EQ(nrd_by_gcd(o.algebra(), i.lattice), ell);
      // Right stability over all basis products.
      for (const auto& x : lattice_quats(o.algebra(), i.lattice))
        for (const auto& b : o.basis()) EXPECT_TRUE(i.lattice.contains((x * b).coords()));
      hnfs.insert(std::vector<Rational>(i.lattice.basis().data().begin(), i.lattice.basis().data().end()));
      EXPECT_EQ(left_order(i).discriminant(), 121);
    }
    EXPECT_EQ(hnfs.size(), ideals.size());
  }
}

TEST(Ideals, UnitIdealLeftOrder) {
  Order o = maximal_order(13);
  RightIdeal unit = make_right_ideal(o, o.basis());
  EXPECT_EQ(unit.norm, 1);
  EXPECT_EQ(left_order(unit), o);
}

TEST(Ideals, RejectsNonIdeal) {
  Order o = maximal_order(11);
  auto alg = o.algebra();
  // Z + 2O is a lattice but not a right O-ideal.
  std::vector<Quat> gens{Quat(alg, 1)};
  for (const auto& b : o.basis()) gens.push_back(b * Rational(2));
  EXPECT_ANY_THROW(make_right_ideal(o, gens));
}

TEST(Classes, ConjugateIsIsomorphic) {
  Order o = maximal_order(23);
  auto alg = o.algebra();
  Quat g(alg, 1, 1, 1, 0);
  std::vector<Quat> conj;
  for (const auto& b : o.basis()) conj.push_back(inverse_of(g) * b * g);
  Order oc = Order::from_generators(alg, conj);
  EXPECT_EQ(oc.discriminant(), 23 * 23);
  EXPECT_TRUE(isomorphic_orders(o, oc));
  EXPECT_EQ(canonical_gross_gram(o), canonical_gross_gram(oc));
}

TEST(Classes, SmallPrimes) {
  for (long p : {2, 3, 5, 7, 13}) EXPECT_EQ(class_enumerate(p).representatives.size(), 1u) << p;
  ClassSet c11 = class_enumerate(11);
  ASSERT_EQ(c11.representatives.size(), 2u);
  EXPECT_FALSE(isomorphic_orders(c11.representatives[0], c11.representatives[1]));
  auto [lo, hi] = type_number_bounds(11);
  EXPECT_EQ(lo, make_rational(10, 24));
  EXPECT_EQ(hi, Rational(2));
}

TEST(Classes, NeighbourClosure) {
  for (long p : {37, 43}) {
    ClassSet cs = class_enumerate(p);
    for (const auto& o : cs.representatives)
      for (const auto& i : right_ideals_norm_ell(o, 2)) EXPECT_TRUE(find_class(cs, left_order(i)).has_value());
    // Different walk prime, same classes.
    ClassSet c3 = class_enumerate(p, 3);
    ASSERT_EQ(c3.representatives.size(), cs.representatives.size());
    EXPECT_EQ(c3.canonical_grams, cs.canonical_grams);
  }
}

TEST(Classes, ThetaSeparatesSmallPrimes) {
  for (long p : {37, 41, 43, 47}) {
    ClassSet cs = class_enumerate(p);
    long n = (p + 5) / 6 + 2;
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& o : cs.representatives) seen.insert(theta_coeffs(o.lattice(), n).coeffs);
    EXPECT_EQ(seen.size(), cs.representatives.size()) << p;
  }
}

TEST(Eichler, NormTwoNeighbour) {
  Order o = maximal_order(11);
  for (const auto& i : right_ideals_norm_ell(o, 2)) {
    Order left = left_order(i);
    EichlerResult e = eichler_intersect(o, left);
    EXPECT_EQ(e.index, 2);
    EXPECT_EQ(e.order.discriminant(), 4 * 121);
  }
}

TEST(Repro, P151) {
  P151Report r = repro_p151();
  EXPECT_TRUE(r.order_valid);
  EXPECT_EQ(r.order_disc, 151 * 151);
  EXPECT_EQ(r.nrd1_det, 512);
  EXPECT_EQ(r.nrd1_gcd, 512);
  EXPECT_EQ(r.nrd2_det, 512);
  EXPECT_EQ(r.nrd2_gcd, 512);
  EXPECT_TRUE(r.gram1_matches);
  EXPECT_TRUE(r.gram2_matches);
  EXPECT_EQ(r.det1, Rational(151 * 151, 16));
  EXPECT_EQ(r.det2, Rational(151 * 151, 16));
  EXPECT_TRUE(r.isospectral);
  EXPECT_TRUE(r.printed_prefix_matches);
  EXPECT_FALSE(r.isometric);
  EXPECT_FALSE(r.orth_3_6_lattice1);
  EXPECT_TRUE(r.orth_3_6_lattice2);
  EXPECT_FALSE(r.left_orders_isomorphic);
  EXPECT_TRUE(r.ok());
}

}  // namespace
}  // namespace quatlat
