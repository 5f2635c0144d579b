#include "quatlat/orders.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace quatlat {
namespace {

std::vector<Quat> hurwitz_basis(const AlgebraRef& B) {
  return {Quat(B, 1), Quat(B, 0, 1), Quat(B, 0, 0, 1),
          Quat(B, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))};
}

std::vector<Quat> standard_basis(const AlgebraRef& B) {
  return {Quat(B, 1), Quat(B, 0, 1), Quat(B, 0, 0, 1), Quat(B, 0, 0, 0, 1)};
}

// Independent discriminant oracle: trace matrix determinant over the given basis.
Integer trace_det_oracle(const std::vector<Quat>& b) {
  RationalMatrix t(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = 2 * (b[i] * b[j])[0];
  return Rational(abs(determinant(t))).get_num();
}

TEST(Order, Validation) {
  auto B = make_algebra(-1, -1);
  Order h = order_from_basis(B, hurwitz_basis(B));
  EXPECT_EQ(h.discriminant(), 4);
  Order z = order_from_basis(B, standard_basis(B));
  EXPECT_EQ(z.discriminant(), 16);
  EXPECT_EQ(z.discriminant(), trace_det_oracle(standard_basis(B)));
  try {
    order_from_basis(B, {Quat(B, 1), Quat(B, 0, Rational(1, 2)), Quat(B, 0, 0, 1), Quat(B, 0, 0, 0, 1)});
    FAIL();
  } catch (const OrderError& e) {
    EXPECT_EQ(e.kind(), OrderErrorKind::NotIntegral);
  }
  try {
    order_from_basis(B, {Quat(B, 2), Quat(B, 0, 1), Quat(B, 0, 0, 1), Quat(B, 0, 0, 0, 1)});
    FAIL();
  } catch (const OrderError& e) {
    EXPECT_EQ(e.kind(), OrderErrorKind::NotUnital);
  }
  try {
    order_from_basis(B, {Quat(B, 1), Quat(B, 0, 1), Quat(B, 0, 0, 2), Quat(B, 0, 0, 0, 1)});
    FAIL();
  } catch (const OrderError& e) {
    EXPECT_EQ(e.kind(), OrderErrorKind::NotClosed);
    EXPECT_NE(std::string(e.what()).find("b"), std::string::npos);
  }
}

TEST(Order, Saturate) {
  auto B = make_algebra(-1, -1);
  Order s = saturate(order_from_basis(B, standard_basis(B)), 2);
  EXPECT_EQ(s.discriminant(), 4);
  EXPECT_EQ(s, order_from_basis(B, hurwitz_basis(B)));
  EXPECT_EQ(saturate(s, 2), s);
  auto B3 = make_algebra(-1, -3);
  Order s3 = saturate(order_from_basis(B3, standard_basis(B3)), 3);
  EXPECT_EQ(s3.discriminant(), 9);
  bool half = false;
  for (const auto& b : s3.basis())
    for (int c = 0; c < 4; ++c)
      if (!is_integer(b[c])) half = true;
  EXPECT_TRUE(half);
  EXPECT_THROW(saturate(s3, 5), SaturationError);
}

TEST(Order, MaximalOrders) {
  for (long p : {2, 3, 5, 7, 11, 13, 17, 101, 151}) {
    Order o = maximal_order(p);
    EXPECT_EQ(o.discriminant(), p * p) << p;
    EXPECT_EQ(trace_det_oracle(o.basis()), p * p);
    // Any basis of a maximal order has two elements of norm prime to p.
    int coprime = 0;
    for (const auto& b : o.basis())
      if (b.norm().get_num() % p != 0) ++coprime;
    EXPECT_GE(coprime, 2);
    auto ch = index_chain(o);
    EXPECT_EQ(ch.o_over_z_plus_o0, 2);
    EXPECT_EQ(ch.o0_over_ot, 4);
    EXPECT_EQ(ch.ot_over_2o0, 2);
    GrossLattice g = gross(o);
    EXPECT_EQ(g.lattice.rank(), 3u);
    EXPECT_EQ(g.lattice.gram().det(), 4 * p * p);
    for (const auto& b : lattice_quats(o.algebra(), g.lattice)) {
      EXPECT_EQ(b.trace(), 0);
      Integer r = mod(b.norm().get_num(), 4);
      EXPECT_TRUE(r == 0 || r == 3);
    }
  }
}

TEST(Order, NoSmallSuperorders) {
  for (long p : {5, 11, 13}) {
    Order o = maximal_order(p);
    auto b = o.basis();
    for (long ell : {2L, 3L}) {
      for (const auto& c : projective_points(ell, 4)) {
        Quat v(o.algebra());
        for (int i = 0; i < 4; ++i) v = v + b[i] * Rational(c[i]);
        auto gens = b;
        gens.push_back(v / Rational(ell));
        EXPECT_THROW(Order::from_generators(o.algebra(), gens), OrderError);
      }
    }
  }
}

TEST(Gross, Hurwitz) {
  auto B = make_algebra(-1, -1);
  Order h = order_from_basis(B, hurwitz_basis(B));
  GrossLattice g = gross(h);
  EXPECT_EQ(successive_minima(g.lattice).values, (std::vector<Rational>{3, 3, 3}));
  EXPECT_EQ(embedding_count(h, 3, true), 8u);
  // Oracle: box count of norm-3 vectors.
  EXPECT_EQ(oracle::box_counts(g.lattice.gram(), 3)[3], 8);
  EXPECT_EQ(embedding_count(h, 5, false), 0u);
  EXPECT_EQ(embedding_count(h, 6, false), 0u);
  // Minimal D with a nonzero count is D₁.
  Rational d1 = successive_minima(g.lattice).values[0];
  for (long d = 1; d < d1; ++d) EXPECT_EQ(embedding_count(h, d, false), 0u);
}

TEST(Gross, TauOfExampleLattice) {
  auto B = make_algebra(-1, -3);
  std::vector<Quat> l1{Quat(B, 1), Quat(B, 0, 1), Quat(B, Rational(1, 2), 0, Rational(1, 2)), Quat(B, 0, 0, 0, 1)};
  std::vector<Quat> t;
  for (const auto& x : l1) t.push_back(tau(x));
  ExactLattice tl = quat_lattice(B, t);
  ExactLattice expect = quat_lattice(B, {Quat(B, 0, 2), Quat(B, 0, 0, 1), Quat(B, 0, 0, 0, 2)});
  EXPECT_EQ(tl, expect);
}

TEST(Gross, MinTraceLift) {
  for (long p : {2, 3, 11, 13}) {
    Order o = maximal_order(p);
    GrossLattice g = gross(o);
    for (const auto& v : enumerate_up_to(g.lattice, 60)) {
      Quat beta(o.algebra(), g.lattice.embed(v.coords));
      Quat alpha = min_trace_lift(g, beta);
      EXPECT_EQ(tau(alpha), beta);
      Integer n = beta.norm().get_num();
      if (n % 4 == 0) {
        EXPECT_EQ(alpha.trace(), 0);
        EXPECT_EQ(alpha.norm(), Rational(n) / 4);
      } else {
        EXPECT_EQ(n % 4, 3);
        EXPECT_EQ(alpha.trace(), 1);
        EXPECT_EQ(alpha.norm(), Rational(n + 1) / 4);
      }
    }
    EXPECT_THROW(min_trace_lift(g, Quat(o.algebra(), 0, Rational(1, 3))), std::domain_error);
  }
}

// Lifts of Gross-lattice minima with 1 attain the minima of O, with the trace side condition.
TEST(Gross, MinimaLiftToOrderMinima) {
  for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 101}) {
    Order o = maximal_order(p);
    GrossLattice g = gross(o);
    Minima mt = successive_minima(g.lattice);
    std::vector<Quat> alphas{Quat(o.algebra(), 1)};
    for (const auto& v : mt.vectors) alphas.push_back(min_trace_lift(g, Quat(o.algebra(), g.lattice.embed(v))));
    Minima mo = successive_minima(o.lattice());
    for (int i = 0; i < 4; ++i) EXPECT_EQ(mo.values[i], alphas[i].norm()) << p;
    // Odd p: minima of the order attained by a basis.
    IntegerMatrix bm(4, 4);
    for (int i = 0; i < 4; ++i) bm.set_row(i, mo.vectors[i]);
    EXPECT_EQ(abs(determinant(bm)), 1) << p;
    auto all = enumerate_up_to(o.lattice(), alphas.back().norm());
    for (int i = 1; i < 4; ++i) {
      if (alphas[i].trace() != 0) continue;
      RationalMatrix prev(0, 4);
      for (int j = 0; j < i; ++j) prev.append_row(alphas[j].coords());
      for (const auto& w : all) {
        if (w.norm != alphas[i].norm()) continue;
        RationalMatrix ext = prev;
        RationalVector wc = o.lattice().embed(w.coords);
        ext.append_row(wc);
        if (rank(ext) == static_cast<std::size_t>(i + 1)) EXPECT_EQ(Quat(o.algebra(), wc).trace(), 0);
      }
    }
  }
}

TEST(Eichler, SelfIntersection) {
  Order o = maximal_order(11);
  auto e = eichler_intersect(o, o);
  EXPECT_EQ(e.index, 1);
  EXPECT_EQ(e.order, o);
}

}  // namespace
}  // namespace quatlat
