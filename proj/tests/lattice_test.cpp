#include "quatlat/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

namespace quatlat {
namespace {

GramMatrix diag_gram(std::initializer_list<long> d) {
  RationalMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = x;
    ++i;
  }
  return GramMatrix(m);
}

TEST(Hnf, SpanExamples) {
  auto z4 = ExactLattice::standard(4);
  auto r = hnf_span(z4, std::vector<IntegerVector>{{1, 2, 0, 0}, {-1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}});
  ASSERT_TRUE(r.index);
  EXPECT_EQ(*r.index, 16);
  auto id = hnf_span(z4, std::vector<IntegerVector>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(*id.index, 1);
  auto z2 = ExactLattice::standard(2);
  auto t = hnf_span(z2, std::vector<IntegerVector>{{2, 0}, {0, 2}, {1, 1}});
  EXPECT_EQ(*t.index, 2);
  auto deficient = hnf_span(z2, std::vector<IntegerVector>{{2, 4}, {1, 2}});
  EXPECT_EQ(deficient.rank, 1u);
  EXPECT_FALSE(deficient.index);
  auto empty = hnf_span(z2, std::vector<IntegerVector>{});
  EXPECT_EQ(empty.rank, 0u);
  EXPECT_FALSE(empty.index);
}

TEST(Hnf, Idempotent) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  auto z3 = ExactLattice::standard(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntegerVector> vs(4, IntegerVector(3));
    for (auto& v : vs)
      for (auto& c : v) c = d(rng);
    auto r = hnf_span(z3, vs);
    if (!r.index) continue;
    EXPECT_EQ(*r.index, abs(determinant(to_integer(r.coords))));
    auto again = hnf_span(r.sublattice, std::vector<IntegerVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(*again.index, 1);
    EXPECT_EQ(relative_index(ExactLattice::standard(3), r.sublattice), Integer(r.index->get_num()));
  }
}

TEST(Hnf, LeftKernel) {
  IntegerMatrix m{{1, 2}, {2, 4}, {3, 1}};
  IntegerMatrix k = left_kernel(m);
  ASSERT_EQ(k.rows(), 1u);
  auto prod = row_times(k.row(0), m);
  EXPECT_EQ(prod, (IntegerVector{0, 0}));
}

TEST(Lattice, DetAndDisc) {
  auto l = ExactLattice::standard(4);
  auto dd = det_and_disc(l);
  EXPECT_EQ(dd.det, 1);
  EXPECT_EQ(dd.disc, 16);
}

TEST(Lattice, Intersection) {
  auto form = RationalMatrix::identity(2);
  ExactLattice a(RationalMatrix{{2, 0}, {0, 1}}, form), b(RationalMatrix{{1, 0}, {0, 3}}, form);
  auto c = intersect(a, b);
  EXPECT_EQ(*relative_index(ExactLattice::standard(2), c), 6);
  ExactLattice h(RationalMatrix{{Rational(1, 2), Rational(1, 2)}, {0, 1}}, form);
  auto d = intersect(h, ExactLattice::standard(2));
  EXPECT_EQ(*relative_index(ExactLattice::standard(2), d), 1);
}

TEST(Enumerate, UnitBall) {
  auto v = enumerate_up_to(diag_gram({1, 1, 1, 1}), 1);
  EXPECT_EQ(v.size(), 8u);
  EXPECT_THROW(enumerate_up_to(diag_gram({1}), -1), std::invalid_argument);
}

TEST(Enumerate, MatchesBoxOracle) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      GramMatrix g = oracle::random_gram(rng, n, trial % 2 == 1);
      const long bound = 50;
      auto fast = norm_counts(g, bound);
      auto slow = oracle::box_counts(g, bound);
      ASSERT_EQ(fast, slow) << "n=" << n << " trial=" << trial;
      auto vs = enumerate_up_to(g, bound);
      std::int64_t total = 0;
      for (long k = 1; k <= bound; ++k) total += slow[k];
      EXPECT_EQ(static_cast<std::int64_t>(vs.size()), total);
      EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end(), [](const LatticeVector& a, const LatticeVector& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.coords < b.coords;
      }));
      for (const auto& v : vs) EXPECT_EQ(g.norm(v.coords), v.norm);
      for (long s : {1L, 7L, 20L}) EXPECT_EQ(static_cast<std::int64_t>(vectors_of_norm(g, s).size()), slow[s]);
    }
}

TEST(Enumerate, SkewedBasisAndLargeNorm) {
  GramMatrix g(RationalMatrix{{1, 0}, {0, 21}});
  auto v = vectors_of_norm(g, 361);
  std::set<IntegerVector> got;
  for (auto& x : v) got.insert(x.coords);
  EXPECT_TRUE(got.count({19, 0}));
  EXPECT_TRUE(got.count({-5, 4}));
  EXPECT_TRUE(got.count({5, -4}));
  // A skewed basis of Z² with the standard form.
  GramMatrix s(RationalMatrix{{1, 1000}, {1000, 1000001}});
  EXPECT_EQ(vectors_of_norm(s, 25).size(), 12u);
}

TEST(Minima, GaussExamples) {
  // Trace-zero images τ(L₁), τ(L₂) in (−1,−3): ⟨2i, j, 2k⟩ and ⟨2i, i+j, 2k⟩.
  GramMatrix t1(RationalMatrix{{4, 0, 0}, {0, 3, 0}, {0, 0, 12}});
  GramMatrix t2(RationalMatrix{{4, 2, 0}, {2, 4, 0}, {0, 0, 12}});
  EXPECT_EQ(successive_minima(t1).values, (std::vector<Rational>{3, 4, 12}));
  EXPECT_EQ(successive_minima(t2).values, (std::vector<Rational>{4, 4, 12}));
}

TEST(Minima, AttainingVectorsFormBasisRankAtMost3) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      GramMatrix g = oracle::random_gram(rng, n, trial % 2 == 0);
      Minima m = successive_minima(g);
      IntegerMatrix b(n, n);
      for (std::size_t i = 0; i < n; ++i) b.set_row(i, m.vectors[i]);
      EXPECT_EQ(abs(determinant(b)), 1);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(g.norm(m.vectors[i]), m.values[i]);
      // Oracle: D_i is the least norm at which vectors of norm ≤ D_i reach rank i.
      auto vs = enumerate_up_to(g, m.values.back());
      for (std::size_t i = 0; i < n; ++i) {
        RationalMatrix below(0, n);
        for (const auto& v : vs)
          if (v.norm < m.values[i]) below.append_row(to_rational(v.coords));
        EXPECT_LT(below.rows() ? rank(below) : 0, i + 1);
      }
    }
}

TEST(Isometry, SelfAndPermuted) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    GramMatrix g = oracle::random_gram(rng, n, trial % 2 == 0);
    auto self = isometry(g, g);
    ASSERT_TRUE(self);
    EXPECT_EQ(g.transformed(*self), g);
    IntegerMatrix perm(n, n);
    for (std::size_t i = 0; i < n; ++i) perm(i, (i + 1) % n) = 1;
    GramMatrix h = g.transformed(perm);
    auto x = isometry(g, h);
    ASSERT_TRUE(x);
    EXPECT_EQ(h.transformed(*x), g);
    // Random unimodular change of basis.
    IntegerMatrix u = IntegerMatrix::identity(n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 1; i < n; ++i) u(i, 0) = d(rng);
    u(0, n - 1) = d(rng);
    if (abs(determinant(u)) != 1) continue;
    GramMatrix k = g.transformed(u);
    auto y = isometry(k, g);
    ASSERT_TRUE(y);
    EXPECT_EQ(g.transformed(*y), k);
  }
}

TEST(Isometry, CertifiedNone) {
  GramMatrix a(RationalMatrix{{2, 1}, {1, 2}}), b(RationalMatrix{{1, 0}, {0, 3}});
  EXPECT_FALSE(isometry(a, b));
  GramMatrix t1(RationalMatrix{{4, 0, 0}, {0, 3, 0}, {0, 0, 12}});
  GramMatrix t2(RationalMatrix{{4, 2, 0}, {2, 4, 0}, {0, 0, 12}});
  EXPECT_FALSE(isometry(t1, t2));
}

// Checks the separating-set postcondition by exhaustive enumeration.
void check_separating(const GramMatrix& g, const RationalVector& v) {
  auto p = separating_set(g, v);
  IntegerVector e1(2), e2(2);
  for (int i = 0; i < 2; ++i) {
    e1[i] = p[1][i] - p[0][i];
    e2[i] = p[2][i] - p[0][i];
    ASSERT_EQ(p[3][i], p[0][i] + e1[i] + e2[i]);
  }
  ASSERT_EQ(abs(e1[0] * e2[1] - e1[1] * e2[0]), 1);
  Rational lambda = successive_minima(g).values[0];
  Rational upper = g.norm(RationalVector{v[0] - Rational(p[0][0]), v[1] - Rational(p[0][1])});
  auto near = enumerate_near(g, v, upper);
  ASSERT_FALSE(near.empty());
  Rational c = near.front().norm;
  auto close = enumerate_near(g, v, c + lambda);
  std::set<IntegerVector> ps(p.begin(), p.end());
  for (const auto& w : close)
    if (w.norm < c + lambda) EXPECT_TRUE(ps.count(w.coords)) << "outside P at norm " << w.norm.get_str();
}

TEST(SeparatingSet, Examples) {
  GramMatrix z2(RationalMatrix{{1, 0}, {0, 1}});
  auto p = separating_set(z2, {Rational(1, 2), Rational(1, 2)});
  std::set<IntegerVector> got(p.begin(), p.end());
  EXPECT_EQ(got, (std::set<IntegerVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  check_separating(z2, {0, 0});
  auto q = separating_set(z2, {0, 0});
  EXPECT_TRUE(std::set<IntegerVector>(q.begin(), q.end()).count({0, 0}));
  // Acute basis, v inside the triangle (0, u₁, u₂) near the orthocentre.
  GramMatrix acute(RationalMatrix{{2, 1}, {1, 2}});
  auto r = separating_set(acute, {Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(std::set<IntegerVector>(r.begin(), r.end()), (std::set<IntegerVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST(SeparatingSet, RandomInstances) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int trial = 0; trial < 150; ++trial) {
    GramMatrix g = oracle::random_gram(rng, 2, trial % 2 == 0);
    check_separating(g, {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))});
  }
}

}  // namespace
}  // namespace quatlat
