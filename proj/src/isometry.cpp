#include <map>
#include <stdexcept>

#include "quatlat/lattice.hpp"

namespace quatlat {

namespace {

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) { return to_integer(inverse(to_rational(u))); }

struct Candidate {
  IntegerVector coords;
  RationalVector times_gram;  // w·A₂
};

class IsometrySearch {
 public:
  IsometrySearch(const GramMatrix& target, std::map<Rational, std::vector<Candidate>> by_norm)
      : target_(target), by_norm_(std::move(by_norm)), n_(target.rank()), chosen_(n_) {}

  bool run() { return step(0); }
  IntegerMatrix result() const {
    IntegerMatrix x(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) x.set_row(i, chosen_[i]->coords);
    return x;
  }

 private:
  bool step(std::size_t i) {
    if (i == n_) return true;
    auto it = by_norm_.find(target_(i, i));
    if (it == by_norm_.end()) return false;
    for (const auto& w : it->second) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = dot(w.times_gram, to_rational(chosen_[j]->coords)) == target_(i, j);
      if (!ok) continue;
      chosen_[i] = &w;
      if (step(i + 1)) return true;
    }
    return false;
  }

  const GramMatrix& target_;
  std::map<Rational, std::vector<Candidate>> by_norm_;
  std::size_t n_;
  std::vector<const Candidate*> chosen_;
};

}  // namespace

std::optional<IntegerMatrix> isometry(const GramMatrix& g1, const GramMatrix& g2) {
  const std::size_t n = g1.rank();
  if (n != g2.rank()) return std::nullopt;
  if (n == 0) return IntegerMatrix(0, 0);
  if (g1.det() != g2.det()) return std::nullopt;
  LllResult red = lll_reduce(g1);
  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, red.gram(i, i));
  auto v1 = enumerate_up_to(g1, bound);
  auto v2 = enumerate_up_to(g2, bound);
  if (v1.size() != v2.size()) return std::nullopt;
  for (std::size_t i = 0; i < v1.size(); ++i)
    if (v1[i].norm != v2[i].norm) return std::nullopt;
  std::map<Rational, std::vector<Candidate>> by_norm;
  for (const auto& v : v2)
    by_norm[v.norm].push_back({v.coords, row_times(to_rational(v.coords), g2.matrix())});
  IsometrySearch search(red.gram, std::move(by_norm));
  if (!search.run()) return std::nullopt;
  IntegerMatrix x = unimodular_inverse(red.transform) * search.result();
  if (!(g2.transformed(x) == g1)) throw std::logic_error("isometry: verification failed");
  return x;
}

std::optional<IntegerMatrix> isometry(const ExactLattice& l1, const ExactLattice& l2) {
  return isometry(l1.gram(), l2.gram());
}

IntegerMatrix acute_reduce(const GramMatrix& g) {
  if (g.rank() != 2) throw std::invalid_argument("acute_reduce needs rank 2");
  IntegerMatrix u = IntegerMatrix::identity(2);
  auto swap_rows = [&]() {
    for (std::size_t c = 0; c < 2; ++c) std::swap(u(0, c), u(1, c));
  };
  while (true) {
    GramMatrix h = g.transformed(u);
    if (h(1, 1) < h(0, 0)) {
      swap_rows();
      continue;
    }
    if (2 * abs(h(0, 1)) <= h(0, 0)) break;
    Integer r = floor_q(h(0, 1) / h(0, 0) + Rational(1, 2));
    for (std::size_t c = 0; c < 2; ++c) u(1, c) -= r * u(0, c);
  }
  GramMatrix h = g.transformed(u);
  if (h(0, 1) < 0)
    for (std::size_t c = 0; c < 2; ++c) u(1, c) = -u(1, c);
  return u;
}

std::array<IntegerVector, 4> separating_set(const GramMatrix& g, const RationalVector& v) {
  if (g.rank() != 2 || v.size() != 2) throw std::invalid_argument("separating_set needs rank 2");
  if (!g.is_positive_definite()) throw std::domain_error("separating_set needs a definite form");
  IntegerMatrix u = acute_reduce(g);
  GramMatrix h = g.transformed(u);
  RationalVector w = row_times(v, inverse(to_rational(u)));
  Integer a0 = floor_q(w[0]), b0 = floor_q(w[1]);
  Rational fx = w[0] - Rational(a0), fy = w[1] - Rational(b0);
  using P = std::array<Integer, 2>;
  std::array<P, 3> tri;
  if (fx + fy <= 1)
    tri = {P{a0, b0}, P{a0 + 1, b0}, P{a0, b0 + 1}};
  else
    tri = {P{a0 + 1, b0 + 1}, P{a0, b0 + 1}, P{a0 + 1, b0}};
  auto in_reduced = [&](const P& pnt) { return RationalVector{Rational(pnt[0]), Rational(pnt[1])}; };
  for (int k = 0; k < 3; ++k) {
    const P& apex = tri[k];
    const P& pi = tri[(k + 1) % 3];
    const P& pj = tri[(k + 2) % 3];
    RationalVector e1{Rational(pi[0] - apex[0]), Rational(pi[1] - apex[1])};
    RationalVector e2{Rational(pj[0] - apex[0]), Rational(pj[1] - apex[1])};
    RationalVector d{w[0] - Rational(apex[0]), w[1] - Rational(apex[1])};
    Rational t = h.inner(e1, e2);
    Rational s1 = h.inner(d, e1), s2 = h.inner(d, e2);
    if (t <= s1 && s1 <= h.norm(e1) && t <= s2 && s2 <= h.norm(e2)) {
      std::array<IntegerVector, 4> out;
      RationalVector ap = in_reduced(apex);
      std::array<RationalVector, 4> pts = {
          ap,
          RationalVector{ap[0] + e1[0], ap[1] + e1[1]},
          RationalVector{ap[0] + e2[0], ap[1] + e2[1]},
          RationalVector{ap[0] + e1[0] + e2[0], ap[1] + e1[1] + e2[1]}};
      for (int q = 0; q < 4; ++q) {
        RationalVector orig = row_times(pts[q], to_rational(u));
        out[q] = IntegerVector{orig[0].get_num(), orig[1].get_num()};
      }
      return out;
    }
  }
  throw std::logic_error("separating_set: no vertex region contains the point");
}

}  // namespace quatlat
