#include <algorithm>
#include <stdexcept>

#include "quatlat/lattice.hpp"

namespace quatlat {

namespace {

Integer round_q(const Rational& q) { return floor_q(q + Rational(1, 2)); }

// Gram–Schmidt data from a Gram matrix: b*[i] norms and μ coefficients.
void gso(const RationalMatrix& h, std::vector<Rational>& bstar, RationalMatrix& mu) {
  const std::size_t n = h.rows();
  bstar.assign(n, 0);
  mu = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = h(i, j);
      for (std::size_t l = 0; l < j; ++l) s -= mu(j, l) * mu(i, l) * bstar[l];
      mu(i, j) = s / bstar[j];
    }
    Rational s = h(i, i);
    for (std::size_t l = 0; l < i; ++l) s -= mu(i, l) * mu(i, l) * bstar[l];
    bstar[i] = s;
    if (bstar[i] <= 0) throw std::domain_error("Gram matrix is not positive definite");
  }
}

// Q(x) = Σ_i d_i (x_i + Σ_{j>i} m_ij x_j)².
struct Ldl {
  std::vector<Rational> d;
  RationalMatrix m;
};

Ldl ldl(const GramMatrix& g) {
  const std::size_t n = g.rank();
  RationalMatrix q = g.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw std::domain_error("Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  Ldl r;
  r.d.resize(n);
  r.m = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    r.d[i] = q(i, i);
    for (std::size_t j = i + 1; j < n; ++j) r.m(i, j) = q(i, j);
  }
  return r;
}

// Fincke–Pohst over all integer x with Q(x − v) ≤ bound. With exact_target set,
// the last level is solved for Q(x − v) = bound exactly.
class Enumerator {
 public:
  using Visit = std::function<void(const IntegerVector&, const Rational&)>;

  Enumerator(const GramMatrix& g, RationalVector center, Rational bound, bool exact_target, Visit visit)
      : ldl_(ldl(g)), n_(g.rank()), v_(std::move(center)), bound_(std::move(bound)),
        exact_(exact_target), visit_(std::move(visit)), x_(n_) {}

  void run() {
    if (bound_ < 0) return;
    if (n_ == 0) {
      if (!exact_ || bound_ == 0) visit_(x_, 0);
      return;
    }
    level(n_ - 1, bound_);
  }

 private:
  void level(std::size_t i, const Rational& remaining) {
    Rational c = v_[i];
    for (std::size_t j = i + 1; j < n_; ++j) c -= ldl_.m(i, j) * (Rational(x_[j]) - v_[j]);
    Rational t = remaining / ldl_.d[i];
    if (i == 0 && exact_) {
      Integer rn, rd;
      if (!is_square(t.get_num(), &rn) || !is_square(t.get_den(), &rd)) return;
      Rational r = make_rational(rn, rd);
      for (int sgn : {-1, 1}) {
        Rational xr = c + sgn * r;
        if (!is_integer(xr)) continue;
        x_[0] = xr.get_num();
        visit_(x_, bound_);
        if (r == 0) break;
      }
      return;
    }
    const Integer cn = c.get_num(), cd = c.get_den();
    Integer s = isqrt(floor_q(t * Rational(cd * cd)));
    Integer lo = ceil_q(make_rational(cn - s, cd));
    Integer hi = floor_q(make_rational(cn + s, cd));
    for (Integer xi = lo; xi <= hi; ++xi) {
      Rational diff = Rational(xi) - c;
      Rational rem = remaining - ldl_.d[i] * diff * diff;
      if (rem < 0) continue;
      x_[i] = xi;
      if (i == 0)
        visit_(x_, bound_ - rem);
      else
        level(i - 1, rem);
    }
    x_[i] = 0;
  }

  Ldl ldl_;
  std::size_t n_;
  RationalVector v_;
  Rational bound_;
  bool exact_;
  Visit visit_;
  IntegerVector x_;
};

bool by_norm_then_coords(const LatticeVector& a, const LatticeVector& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.coords < b.coords;
}

bool is_zero(const IntegerVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; });
}

}  // namespace

LllResult lll_reduce(const GramMatrix& g) {
  const std::size_t n = g.rank();
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n <= 1) return {u, g};
  const Rational delta(3, 4);
  auto current = [&]() { return g.transformed(u).matrix(); };
  RationalMatrix h = current();
  std::vector<Rational> bstar;
  RationalMatrix mu;
  gso(h, bstar, mu);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer r = round_q(mu(k, jj));
      if (r == 0) continue;
      for (std::size_t c = 0; c < n; ++c) u(k, c) -= r * u(jj, c);
      h = current();
      gso(h, bstar, mu);
    }
    if (bstar[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      for (std::size_t c = 0; c < n; ++c) std::swap(u(k, c), u(k - 1, c));
      h = current();
      gso(h, bstar, mu);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return {u, GramMatrix(h)};
}

namespace {

// Runs the enumerator on the LLL-reduced form and maps results back.
std::vector<LatticeVector> run_reduced(const GramMatrix& g, const RationalVector& center,
                                       const Rational& bound, bool exact) {
  LllResult red = lll_reduce(g);
  const std::size_t n = g.rank();
  RationalVector vc(n);
  if (!center.empty()) {
    RationalMatrix uinv = inverse(to_rational(red.transform));
    vc = row_times(center, uinv);
  }
  std::vector<LatticeVector> out;
  Enumerator e(red.gram, vc, bound, exact, [&](const IntegerVector& x, const Rational& q) {
    out.push_back({row_times(x, red.transform), q});
  });
  e.run();
  return out;
}

}  // namespace

std::vector<LatticeVector> enumerate_up_to(const GramMatrix& g, const Rational& bound) {
  if (bound < 0) throw std::invalid_argument("enumerate_up_to: negative bound");
  auto all = run_reduced(g, {}, bound, false);
  std::vector<LatticeVector> out;
  out.reserve(all.size());
  for (auto& v : all)
    if (!is_zero(v.coords)) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), by_norm_then_coords);
  return out;
}

std::vector<LatticeVector> enumerate_up_to(const ExactLattice& l, const Rational& bound) {
  return enumerate_up_to(l.gram(), bound);
}

std::vector<LatticeVector> vectors_of_norm(const GramMatrix& g, const Rational& s) {
  if (s < 0) return {};
  if (s == 0) return {{IntegerVector(g.rank()), 0}};
  auto out = run_reduced(g, {}, s, true);
  std::sort(out.begin(), out.end(), by_norm_then_coords);
  return out;
}

std::vector<LatticeVector> enumerate_near(const GramMatrix& g, const RationalVector& center,
                                          const Rational& bound) {
  if (center.size() != g.rank()) throw std::invalid_argument("enumerate_near: center dimension");
  auto out = run_reduced(g, center, bound, false);
  std::sort(out.begin(), out.end(), by_norm_then_coords);
  return out;
}

std::vector<std::int64_t> norm_counts(const GramMatrix& g, long n) {
  if (!g.is_integral()) throw std::domain_error("norm_counts needs an integral lattice");
  std::vector<std::int64_t> c(n + 1, 0);
  if (n < 0) return c;
  LllResult red = lll_reduce(g);
  Enumerator e(red.gram, RationalVector(g.rank()), Rational(n), false,
               [&](const IntegerVector&, const Rational& q) { ++c[q.get_num().get_si()]; });
  e.run();
  return c;
}

Minima successive_minima(const GramMatrix& g) {
  const std::size_t n = g.rank();
  Minima m;
  if (n == 0) return m;
  LllResult red = lll_reduce(g);
  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, red.gram(i, i));
  auto vs = enumerate_up_to(g, bound);
  RationalMatrix chosen(0, n);
  for (const auto& v : vs) {
    RationalMatrix trial = chosen;
    trial.append_row(to_rational(v.coords));
    if (rank(trial) > chosen.rows()) {
      chosen = trial;
      m.values.push_back(v.norm);
      m.vectors.push_back(v.coords);
      if (chosen.rows() == n) break;
    }
  }
  if (m.values.size() != n) throw std::logic_error("successive_minima: enumeration incomplete");
  return m;
}

Minima successive_minima(const ExactLattice& l) { return successive_minima(l.gram()); }

}  // namespace quatlat
