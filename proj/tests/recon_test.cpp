#include "quatlat/recon.hpp"

#include <gtest/gtest.h>

#include "quatlat/classes.hpp"
#include "quatlat/orders.hpp"

namespace quatlat {
namespace {

std::vector<Quat> gross_vectors(const Order& o, const Rational& bound) {
  GrossLattice g = gross(o);
  std::vector<Quat> out;
  for (const auto& v : enumerate_up_to(g.lattice.gram(), bound)) out.push_back(to_quat(o.algebra(), g.lattice.embed(v.coords)));
  return out;
}

TEST(Kaneko, HurwitzNormThreePairs) {
  Order h = maximal_order(2);
  auto vs = gross_vectors(h, 3);
  ASSERT_EQ(vs.size(), 8u);
  for (const auto& a : vs)
    for (const auto& b : vs) {
      Rational t = inner(a, b);
      if (t * t == 9) {
        EXPECT_THROW(kaneko_check(a, b, 2), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(t * t, 1);
      EXPECT_EQ(kaneko_check(a, b, 2), 1);
    }
}

TEST(Kaneko, DivisibilityAcrossClasses) {
  for (long p : {11, 23, 37}) {
    for (const auto& o : class_enumerate(p).representatives) {
      auto vs = gross_vectors(o, Rational(2 * p));
      for (std::size_t i = 0; i < vs.size() && i < 40; ++i)
        for (std::size_t j = i + 1; j < vs.size() && j < 40; ++j) {
          Rational t = inner(vs[i], vs[j]);
          if (t * t == vs[i].norm() * vs[j].norm()) continue;
          EXPECT_GE(kaneko_check(vs[i], vs[j], p), 1);
        }
    }
  }
}

TEST(Kaneko, RejectsNonMultiple) {
  auto B = make_algebra(-1, -1);
  EXPECT_THROW(kaneko_check(Quat(B, 0, 1), Quat(B, 0, 0, 1), 2), ConstraintViolated);
}

TEST(Bounds, Succmin) {
  SuccminBounds b = succmin_bounds(151, 1, 0);
  EXPECT_EQ(b.d1_max, 56);
  for (long d1 = 1; d1 <= 56; ++d1) {
    SuccminBounds c = succmin_bounds(151, 1, d1);
    EXPECT_GE(c.d2_min * d1, 4 * 151);
    EXPECT_LT((c.d2_min - 1) * d1, 4 * 151);
    EXPECT_LE(c.d2_max * c.d2_max * d1, 8 * 151 * 151);
    EXPECT_GT((c.d2_max + 1) * (c.d2_max + 1) * d1, 8 * 151 * 151);
  }
}

TEST(Bounds, HoldForClasses) {
  for (long p = 11; p <= 80; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& o : class_enumerate(p).representatives) {
      Minima m = successive_minima(gross(o).lattice.gram());
      Integer d1 = m.values[0].get_num(), d2 = m.values[1].get_num(), d3 = m.values[2].get_num();
      SuccminBounds b = succmin_bounds(p, 1, d1);
      EXPECT_LE(d1, b.d1_max);
      EXPECT_GE(d2, b.d2_min);
      EXPECT_LE(d2, b.d2_max);
      EXPECT_LE(d1 * d2 * d3, 8 * p * p);
    }
  }
}

TEST(Trace, Examples) {
  for (long p : {13, 17, 101}) EXPECT_EQ(unique_trace(3, 12, p), 6);
  EXPECT_EQ(unique_trace(11, 22, 11), 0);
  EXPECT_EQ(unique_trace(4, 9, 37), 6);
  EXPECT_THROW(unique_trace(2, 1, 11), ConstraintViolated);
  EXPECT_THROW(unique_trace(20, 1, 11), std::invalid_argument);
  for (long p : {11, 13, 29})
    for (long a = 1; a <= p; ++a)
      for (long b = 1; b <= 40; ++b) {
        Integer t;
        try {
          t = unique_trace(a, b, p);
        } catch (const ConstraintViolated&) {
          continue;
        }
        EXPECT_LE(2 * t, p);
        EXPECT_EQ(mod(t * t - a * b, p), 0);
      }
}

TEST(Trace, MatchesGrossInnerProduct) {
  for (const auto& o : class_enumerate(11).representatives) {
    Minima m = successive_minima(gross(o).lattice.gram());
    GramMatrix g = gross(o).lattice.gram();
    Rational t = g.inner(m.vectors[0], m.vectors[1]);
    EXPECT_EQ(unique_trace(m.values[0].get_num(), m.values[1].get_num(), 11), abs(t));
  }
}

TEST(Cases, TableFromSyntheticSeries) {
  auto [t0, t1] = theta01(10);
  ThetaSeries s = t0;
  s.coeffs[3] += 2;
  EXPECT_EQ(d1_from_theta(s).value, 12);
  s.coeffs[3] += 2;
  EXPECT_EQ(d1_from_theta(s).value, 11);
  s.coeffs[3] += 2;
  DStep six = d1_from_theta(s);
  EXPECT_EQ(six.value, 11);
  EXPECT_EQ(*six.next, 12);
  s.coeffs[3] += 2;
  EXPECT_THROW(d1_from_theta(s), CaseViolation);
  EXPECT_THROW(d1_from_theta(t0), InsufficientTerms);
}

TEST(Cases, QuadraticOrderGram) {
  GramMatrix g = quadratic_order_gram(19);
  EXPECT_EQ(g(0, 1), Rational(1, 2));
  EXPECT_EQ(g(1, 1), 5);
  GramMatrix e = quadratic_order_gram(20);
  EXPECT_EQ(e(0, 1), 0);
  EXPECT_EQ(e(1, 1), 5);
}

TEST(Rank3, PositiveDefiniteAndEmbeds) {
  for (long p : {61, 101}) {
    for (const auto& o : class_enumerate(p).representatives) {
      Minima m = successive_minima(gross(o).lattice.gram());
      Integer d1 = m.values[0].get_num(), d2 = m.values[1].get_num();
      if (d1 < 15) continue;
      GramMatrix l = rank3_gram(d1, d2, p);
      EXPECT_TRUE(l.is_positive_definite());
      EXPECT_GT(l.det(), 0);
      // Its theta series is dominated by the order's.
      ThetaSeries tl = theta_coeffs(l, 30), to = theta_coeffs(o.lattice(), 30);
      for (long k = 0; k <= 30; ++k) EXPECT_LE(tl[k], to[k]);
    }
  }
}

TEST(SignChoice, DeterminantGap) {
  Integer p = 101;
  for (auto [d1, d2, d3] : std::vector<std::array<long, 3>>{{20, 23, 43}, {23, 27, 35}, {19, 24, 31}}) {
    Integer t12, t13, t23;
    try {
      t12 = unique_trace(d1, d2, p);
      t13 = unique_trace(d1, d3, p);
      t23 = unique_trace(d2, d3, p);
    } catch (const ConstraintViolated&) {
      continue;
    }
    RationalMatrix ap(3, 3), am(3, 3);
    for (auto* m : {&ap, &am}) {
      (*m)(0, 0) = d1;
      (*m)(1, 1) = d2;
      (*m)(2, 2) = d3;
      (*m)(0, 1) = (*m)(1, 0) = t12;
      (*m)(1, 2) = (*m)(2, 1) = t23;
    }
    ap(0, 2) = ap(2, 0) = t13;
    am(0, 2) = am(2, 0) = -t13;
    // Flipping the (1,3) sign moves the determinant by 4·T12·T23·T13, which p does not divide.
    EXPECT_EQ(determinant(ap) - determinant(am), Rational(4 * t12 * t23 * t13));
    EXPECT_NE(mod(4 * t12 * t23 * t13, p), 0);
  }
}

TEST(Pipeline, SmallPrimesAreUnique) {
  for (long p : {2, 3, 5, 7}) {
    Order o = maximal_order(p);
    PipelineResult r = full_pipeline([&](long n) { return theta_coeffs(o.lattice(), n); }, Integer(p));
    EXPECT_EQ(r.kind, PipelineKind::UniqueClass);
  }
}

TEST(Pipeline, MatchesOracle) {
  int full = 0, small = 0;
  for (long p = 11; p <= 110; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& o : class_enumerate(p).representatives) {
      GrossLattice g = gross(o);
      Minima m = successive_minima(g.lattice.gram());
      PipelineResult r = full_pipeline([&](long n) { return theta_coeffs(o.lattice(), n); }, Integer(p));
      EXPECT_EQ(r.d1, m.values[0]);
      EXPECT_LE(r.terms_used, pipeline_terms_bound(p));
      if (r.kind == PipelineKind::SmallCase) {
        ++small;
        EXPECT_LT(r.d1, 15);
        continue;
      }
      ++full;
      ASSERT_EQ(r.kind, PipelineKind::Full);
      EXPECT_EQ(r.triple->d2, m.values[1]) << p;
      EXPECT_EQ(r.triple->d3, m.values[2]) << p;
      EXPECT_TRUE(isometry(r.gram->gram, g.lattice.gram()).has_value()) << p;
      EXPECT_EQ(mod(Rational(16 * r.gram->gram.det()).get_num(), Integer(p * p)), 0);
    }
  }
  EXPECT_GT(full, 0);
  EXPECT_GT(small, 0);
}

TEST(Pipeline, FixedSeriesTooShort) {
  Order o = class_enumerate(151).representatives.back();
  EXPECT_THROW(full_pipeline(theta_coeffs(o.lattice(), 3), 151), InsufficientTerms);
  PipelineResult r = full_pipeline(theta_coeffs(o.lattice(), pipeline_terms_bound(151)), 151);
  EXPECT_NE(r.kind, PipelineKind::UniqueClass);
}

}  // namespace
}  // namespace quatlat
