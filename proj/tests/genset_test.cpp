#include "quatlat/genset.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "quatlat/orders.hpp"

namespace quatlat {
namespace {

GramMatrix diag_gram(std::initializer_list<long> d) {
  RationalMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) m(i, i) = v, ++i;
  return GramMatrix(m);
}

std::vector<Integer> range_norms(long lo, long hi, long step = 1) {
  std::vector<Integer> out;
  for (long s = lo; s <= hi; s += step) out.push_back(s);
  return out;
}

TEST(ElementsOfNorm, TwoSquaresExample) {
  auto v = elements_of_norm(diag_gram({1, 21}), 361);
  std::set<IntegerVector> got(v.begin(), v.end());
  for (IntegerVector w : std::vector<IntegerVector>{{19, 0}, {-19, 0}, {5, 4}, {-5, 4}, {5, -4}, {-5, -4}})
    EXPECT_TRUE(got.count(w));
  EXPECT_EQ(got.size(), 6u);
  EXPECT_TRUE(elements_of_norm(diag_gram({1, 21}), 3).empty());
}

TEST(ElementsOfNorm, HurwitzUnits) {
  EXPECT_EQ(elements_of_norm(maximal_order(2).lattice(), 1).size(), 24u);
  EXPECT_EQ(elements_of_norm(maximal_order(3).lattice(), 1).size(), 12u);
}

TEST(ElementsOfNorm, MatchesBox) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    GramMatrix g = oracle::random_gram(rng, 2 + trial % 3, trial % 2);
    auto counts = oracle::box_counts(g, 30);
    for (long s = 0; s <= 30; ++s) {
      auto v = elements_of_norm(g, s);
      EXPECT_EQ(static_cast<std::int64_t>(v.size()), counts[s]);
      for (const auto& x : v) EXPECT_EQ(g.norm(x), Rational(s));
    }
  }
}

TEST(SpanIndex, Basics) {
  EXPECT_EQ(span_index({{2, 0}, {0, 3}}, 2), Integer(6));
  EXPECT_EQ(span_index({{2, 1}, {1, 2}}, 2), Integer(3));
  EXPECT_FALSE(span_index({{1, 1}, {2, 2}}, 2));
  EXPECT_EQ(span_index({{4, 6}, {6, 9}, {1, 0}, {0, 1}}, 2), Integer(1));
}

TEST(SpanIndex, MatchesDeterminantOfGcd) {
  // Index of a span equals the gcd of its maximal minors; check on random triples in Z².
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntegerVector> v(3, IntegerVector(2));
    for (auto& x : v) x = {d(rng), d(rng)};
    Integer g = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) g = gcd(g, Integer(v[i][0] * v[j][1] - v[i][1] * v[j][0]));
    auto idx = span_index(v, 2);
    if (g == 0)
      EXPECT_FALSE(idx);
    else
      EXPECT_EQ(idx, Integer(abs(g)));
  }
}

TEST(SpanByNorms, TrajectoryNonIncreasing) {
  for (long p : {11, 23, 37}) {
    NormSpanReport r = span_by_norms(maximal_order(p).lattice(), range_norms(1, 20));
    std::optional<Integer> prev;
    for (const auto& step : r.trajectory) {
      if (prev) {
        ASSERT_TRUE(step.index);
        EXPECT_EQ(mod(*prev, *step.index), 0);
      }
      if (step.index) prev = step.index;
    }
    EXPECT_EQ(r.final_index, Integer(1));
    EXPECT_EQ(r.span, IntegerMatrix::identity(4));
  }
}

TEST(SpanByNorms, SupersetRefines) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    GramMatrix g = oracle::random_gram(rng, 3);
    auto small = span_by_norms(g, {3, 5, 7});
    auto big = span_by_norms(g, {3, 5, 7, 2, 11});
    if (small.final_index) {
      ASSERT_TRUE(big.final_index);
      EXPECT_EQ(mod(*small.final_index, *big.final_index), 0);
    }
  }
}

TEST(SpanByNorms, PDivisibleNormsMissTwoDirections) {
  for (long p : {11, 13, 17, 19, 23}) {
    std::vector<Integer> norms;
    for (long k = 1; k <= 12; ++k) norms.push_back(p * k);
    auto r = span_by_norms(maximal_order(p).lattice(), norms);
    if (r.final_index) EXPECT_EQ(mod(*r.final_index, p * p), 0) << p;
  }
}

TEST(NormGeneration, SmallPrimes) {
  for (auto [p, ell] : std::vector<std::pair<long, long>>{{11, 2}, {13, 3}, {17, 2}}) {
    NormGenerationReport r = verify_norm_generation(p, ell, 6);
    EXPECT_TRUE(r.all_generated()) << p;
    for (const auto& c : r.classes) {
      ASSERT_TRUE(c.minimal_k);
      EXPECT_LE(*c.minimal_k, 6);
      EXPECT_EQ(c.span.final_index, Integer(1));
    }
  }
}

TEST(Counterexamples, AllReproduce) {
  for (const auto& name : counterexample_names()) {
    CounterexampleReport r = verify_counterexample(name);
    EXPECT_TRUE(r.reproduced) << name;
    EXPECT_FALSE(r.facts.empty());
  }
  EXPECT_THROW(verify_counterexample("nope"), std::invalid_argument);
}

TEST(Counterexamples, TwoSquaresIndexFour) {
  CounterexampleReport r = verify_counterexample("ex19");
  ASSERT_FALSE(r.spans.empty());
  EXPECT_EQ(r.spans.front().final_index, Integer(4));
  for (std::size_t i = 0; i < r.spans.front().span.rows(); ++i) EXPECT_EQ(mod(r.spans.front().span(i, 1), 4), 0);
}

TEST(Eichler, IndexCoprimeToSixIsGenerated) {
  Order o = maximal_order(11);
  for (long ell : {5, 7}) {
    EichlerResult e = eichler_intersect(o, left_order(right_ideals_norm_ell(o, ell).front()));
    EXPECT_EQ(e.index, ell);
    auto r = span_by_norms(e.order.lattice(), range_norms(1, 60));
    EXPECT_EQ(r.final_index, Integer(1)) << ell;
    std::vector<Integer> odd = range_norms(1, 61, 2);
    EXPECT_EQ(span_by_norms(e.order.lattice(), odd).final_index, Integer(1)) << ell;
  }
}

}  // namespace
}  // namespace quatlat
