#include "quatlat/localsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatlat {

namespace {

constexpr long kMaxTableEll = 10'000'000;

void require_prime(const Integer& ell) {
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime: " + to_string(ell));
}

/// q mod m for q with denominator prime to m.
Integer mod_unit(const Rational& q, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("mod_unit: denominator not invertible");
  return mod(q.get_num() * inv, m);
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not a unit");
  return inv;
}

int min_valuation(const IntegerVector& v, const Integer& ell, int cap) {
  int best = cap;
  for (const auto& c : v)
    if (c != 0) best = std::min(best, valuation(c, ell));
  return best;
}

struct LocalDiag {
  RationalMatrix basis;       ///< rows e_i with Q(Σ y_i e_i) = Σ d_i y_i²
  std::vector<Rational> d;
};

/// Congruence diagonalization over Z_(ℓ), ℓ odd. Basis is unimodular over Z_(ℓ).
LocalDiag diagonalize_local(const GramMatrix& g, const Integer& ell) {
  const std::size_t n = g.rank();
  RationalMatrix a = g.matrix();
  RationalMatrix p = RationalMatrix::identity(n);
  std::vector<bool> done(n, false);
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t step = 0; step < n; ++step) {
    int best = 0;
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (done[j] || a(i, j) == 0) continue;
        int v = valuation(a(i, j), ell);
        bool better = bi == n || v < best || (v == best && i == j && bi != bj);
        if (better) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == n) break;
    std::size_t piv = bi;
    if (bi != bj) {
      // e_i ← e_i + e_j lifts the off-diagonal valuation onto the diagonal.
      for (std::size_t c = 0; c < n; ++c) p(bi, c) += p(bj, c);
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
    }
    Rational pv = a(piv, piv);
    for (std::size_t m = 0; m < n; ++m) {
      if (done[m] || m == piv || a(m, piv) == 0) continue;
      Rational c = a(m, piv) / pv;
      for (std::size_t k = 0; k < n; ++k) p(m, k) -= c * p(piv, k);
      for (std::size_t k = 0; k < n; ++k) a(m, k) -= c * a(piv, k);
      for (std::size_t r = 0; r < n; ++r) a(r, m) -= c * a(r, piv);
    }
    done[piv] = true;
    d[piv] = pv;
  }
  return {p, d};
}

/// Square roots mod a small odd prime: root[a] or -1.
std::vector<long> sqrt_table(long ell) {
  std::vector<long> root(ell, -1);
  for (long b = 0; b < ell; ++b) {
    long a = b * b % ell;
    if (root[a] < 0) root[a] = b;
  }
  return root;
}

long small_ell(const Integer& ell) {
  if (ell > kMaxTableEll) throw std::invalid_argument("ell too large for residue tables");
  return ell.get_si();
}

/// Points z ∈ F_ℓ^r with Σ u_i z_i² = t (z ≠ 0), visited in lexicographic order of z_1..z_{r−1}.
/// The callback returns false to stop.
template <class F>
void for_each_point(const std::vector<long>& u, long t, long ell, const std::vector<long>& root, F&& visit) {
  const std::size_t r = u.size();
  if (r == 0) return;
  long inv_last = inverse_mod(Integer(u[r - 1]), Integer(ell)).get_si();
  std::vector<long> z(r, 0);
  while (true) {
    long acc = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) acc = (acc + u[i] * (z[i] * z[i] % ell)) % ell;
    long rhs = ((t - acc) % ell + ell) % ell * inv_last % ell;
    long w = root[rhs];
    if (w >= 0) {
      for (long cand : {w, (ell - w) % ell}) {
        z[r - 1] = cand;
        bool nonzero = std::any_of(z.begin(), z.end(), [](long c) { return c != 0; });
        if (nonzero && !visit(z)) return;
        if (w == 0) break;
      }
    }
    z[r - 1] = 0;
    std::size_t i = 0;
    while (i + 1 < r && z[i] == ell - 1) z[i++] = 0;
    if (i + 1 >= r) return;
    ++z[i];
  }
}

bool is_square_mod(long a, long ell, const std::vector<long>& root) { return root[((a % ell) + ell) % ell] >= 0; }

/// Maps diagonal coordinates y to an integer vector x = yP mod m.
IntegerVector to_original(const std::vector<Integer>& y, const RationalMatrix& p, const Integer& m) {
  const std::size_t n = y.size();
  IntegerVector x(n);
  for (std::size_t c = 0; c < n; ++c) {
    Integer acc = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (y[r] != 0) acc += y[r] * mod_unit(p(r, c), m);
    x[c] = mod(acc, m);
  }
  return x;
}

template <class F>
void for_each_residue(std::size_t n, long m, F&& visit) {
  IntegerVector x(n);
  std::vector<long> cur(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = cur[i];
    if (!visit(x)) return;
    std::size_t i = 0;
    while (i < n && cur[i] == m - 1) cur[i++] = 0;
    if (i == n) return;
    ++cur[i];
  }
}

void require_small_rank_at_two(const QForm& q) {
  if (q.rank() > 7) throw std::invalid_argument("residue search at ell = 2 limited to rank 7");
}

}  // namespace

QForm::QForm(GramMatrix g) : g_(std::move(g)) {
  if (!g_.is_integral()) throw std::domain_error("QForm: form is not integral");
  const std::size_t n = g_.rank();
  twice_ = IntegerMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = 2 * g_(i, j);
      twice_(i, j) = t.get_num();
      if (!is_integer(g_(i, j))) integer_matrix_ = false;
    }
}

QForm QForm::diagonal(const std::vector<Integer>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return QForm(GramMatrix(m));
}

Integer QForm::value(const IntegerVector& x) const { return g_.norm(x).get_num(); }

IntegerVector QForm::gradient(const IntegerVector& x) const {
  const std::size_t n = rank();
  IntegerVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += twice_(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

int tau_ell(const Integer& ell) {
  require_prime(ell);
  return ell == 2 ? 3 : 1;
}

bool hensel_liftable(const QForm& q, const IntegerVector& x, const Integer& s, const Integer& ell, int k) {
  if (k < 1) return false;
  Integer m = pow(ell, k);
  if (mod(q.value(x) - s, m) != 0) return false;
  int v = min_valuation(q.gradient(x), ell, k);
  return 2 * v + 1 <= k;
}

StrongResult strong_lsc(const QForm& q, const Integer& s, const Integer& ell) {
  require_prime(ell);
  const std::size_t n = q.rank();
  StrongResult res;
  if (ell == 2) {
    require_small_rank_at_two(q);
    // (2s, 2Q) when A has half-integral entries; ℓ ∤ Ax then reads ℓ ∤ 2Ax.
    const bool doubled = !q.integer_matrix();
    for_each_residue(n, 8, [&](const IntegerVector& x) {
      Integer val = q.value(x), target = s;
      if (doubled) {
        val *= 2;
        target *= 2;
      }
      if (mod(val - target, 8) != 0) return true;
      IntegerVector g = q.gradient(x);
      bool unit = std::any_of(g.begin(), g.end(), [&](const Integer& c) {
        return doubled ? mod(c, 2) != 0 : mod(c / 2, 2) != 0;
      });
      if (!unit) return true;
      res.holds = true;
      res.witness = x;
      return false;
    });
    return res;
  }
  long l = small_ell(ell);
  LocalDiag diag = diagonalize_local(q.gram(), ell);
  std::vector<std::size_t> e0;
  std::vector<long> u;
  for (std::size_t i = 0; i < n; ++i)
    if (diag.d[i] != 0 && valuation(diag.d[i], ell) == 0) {
      e0.push_back(i);
      u.push_back(mod_unit(diag.d[i], ell).get_si());
    }
  auto root = sqrt_table(l);
  long t = mod(s, ell).get_si();
  for_each_point(u, t, l, root, [&](const std::vector<long>& z) {
    std::vector<Integer> y(n, 0);
    for (std::size_t k = 0; k < e0.size(); ++k) y[e0[k]] = z[k];
    IntegerVector x = to_original(y, diag.basis, ell);
    if (!hensel_liftable(q, x, s, ell, 1)) throw std::logic_error("strong_lsc: witness failed verification");
    res.holds = true;
    res.witness = x;
    return false;
  });
  return res;
}

Descent descent_chain(const QForm& q, const Integer& s, const Integer& ell) {
  require_prime(ell);
  if (ell == 2) throw std::invalid_argument("descent_chain: odd ell only");
  if (s <= 0) throw std::invalid_argument("descent_chain: s must be positive");
  long l = small_ell(ell);
  auto root = sqrt_table(l);
  LocalDiag diag = diagonalize_local(q.gram(), ell);
  Descent out;
  out.basis = diag.basis;
  out.diagonal = diag.d;
  const std::size_t n = q.rank();
  std::vector<int> e(n, -1);
  std::vector<long> u(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (diag.d[i] != 0) {
      e[i] = valuation(diag.d[i], ell);
      u[i] = mod_unit(diag.d[i] / Rational(pow(ell, e[i])), ell).get_si();
    }
  Integer cur = s;
  int stage = 1;
  while (true) {
    std::vector<std::size_t> e0;
    std::vector<long> ue;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] == 0) {
        e0.push_back(i);
        ue.push_back(u[i]);
      }
    const bool unit_target = mod(cur, ell) != 0;
    const std::size_t r = e0.size();
    if (unit_target) {
      out.soluble = r >= 2 || (r == 1 && is_square_mod(mod(cur, ell).get_si() * inverse_mod(ue[0], ell).get_si(), l, root));
      return out;
    }
    bool isotropic = r >= 3 || (r == 2 && is_square_mod(-ue[0] * ue[1], l, root));
    if (isotropic) {
      out.soluble = true;
      return out;
    }
    if (!e0.empty()) out.steps.push_back({stage, e0});
    for (std::size_t i : e0) e[i] += 2;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) --e[i];
    cur /= ell;
    ++stage;
  }
}

WeakResult weak_lsc(const QForm& q, const Integer& s, const Integer& ell) {
  require_prime(ell);
  if (s <= 0) throw std::invalid_argument("weak_lsc: s must be positive");
  const std::size_t n = q.rank();
  WeakResult res;
  if (ell != 2) {
    // Replay the descent while tracking the substitution exponents, then lift a witness.
    long l = small_ell(ell);
    auto root = sqrt_table(l);
    LocalDiag diag = diagonalize_local(q.gram(), ell);
    std::vector<int> e(n, -1), a(n, 0);
    std::vector<Rational> unit(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (diag.d[i] != 0) {
        e[i] = valuation(diag.d[i], ell);
        unit[i] = diag.d[i] / Rational(pow(ell, e[i]));
      }
    Integer cur = s;
    int divisions = 0;
    std::vector<long> z_final;
    std::vector<std::size_t> e0;
    while (true) {
      e0.clear();
      std::vector<long> ue;
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] == 0) {
          e0.push_back(i);
          ue.push_back(mod_unit(unit[i], ell).get_si());
        }
      long t = mod(cur, ell).get_si();
      bool found = false;
      if (t != 0 || e0.size() >= 2) {
        for_each_point(ue, t, l, root, [&](const std::vector<long>& z) {
          z_final = z;
          found = true;
          return false;
        });
      }
      if (found) break;
      if (t != 0) {
        res.status = Solubility::Insoluble;
        return res;
      }
      for (std::size_t i : e0) {
        e[i] += 2;
        ++a[i];
      }
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] > 0) --e[i];
      cur /= ell;
      ++divisions;
    }
    // Newton iteration on one unit coordinate of the final diagonal form.
    int max_e = 0;
    for (int x : e) max_e = std::max(max_e, x);
    for (int precision = 2 * (divisions + max_e + 2) + 1;; precision *= 2) {
      Integer m = pow(ell, precision);
      std::vector<Integer> z(n, 0);
      std::size_t piv = n;
      for (std::size_t k = 0; k < e0.size(); ++k) {
        z[e0[k]] = z_final[k];
        if (z_final[k] != 0 && piv == n) piv = e0[k];
      }
      std::vector<Integer> coef(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] >= 0) coef[i] = mod(mod_unit(unit[i], m) * pow(ell, e[i]), m);
      for (int it = 0; it < 200; ++it) {
        Integer f = -cur;
        for (std::size_t i = 0; i < n; ++i) f += coef[i] * z[i] * z[i];
        f = mod(f, m);
        if (f == 0) break;
        z[piv] = mod(z[piv] - f * inverse_mod(mod(2 * coef[piv] * z[piv], m), m), m);
      }
      std::vector<Integer> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = z[i] * pow(ell, a[i]);
      IntegerVector x = to_original(y, diag.basis, m);
      if (hensel_liftable(q, x, s, ell, precision)) {
        res.status = Solubility::Soluble;
        res.witness = x;
        res.depth = precision;
        return res;
      }
      if (precision > 4096) throw std::logic_error("weak_lsc: lifted witness failed verification");
    }
  }

  require_small_rank_at_two(q);
  Integer det2 = determinant(to_rational(q.twice())).get_num();
  int k_max = tau_ell(ell) + (det2 == 0 ? 0 : valuation(det2, ell)) + 2;
  const std::size_t cap = std::size_t(1) << 18;
  bool undecided = false;
  for (int j = 0; mod(s, pow(Integer(4), j)) == 0; ++j) {
    Integer target = s / pow(Integer(4), j);
    std::vector<IntegerVector> states;
    for_each_residue(n, 2, [&](const IntegerVector& x) {
      bool primitive = std::any_of(x.begin(), x.end(), [](const Integer& c) { return c != 0; });
      if (primitive && mod(q.value(x) - target, 2) == 0) states.push_back(x);
      return true;
    });
    for (int k = 1; !states.empty(); ++k) {
      for (const auto& x : states)
        if (hensel_liftable(q, x, target, ell, k)) {
          IntegerVector w = x;
          for (auto& c : w) c *= pow(Integer(2), j);
          res.status = Solubility::Soluble;
          res.witness = w;
          res.depth = k + 2 * j;
          return res;
        }
      if (k == k_max) {
        undecided = true;
        break;
      }
      Integer step = pow(Integer(2), k), m = step * 2;
      std::vector<IntegerVector> next;
      for (const auto& x : states) {
        for_each_residue(n, 2, [&](const IntegerVector& h) {
          IntegerVector y = x;
          for (std::size_t i = 0; i < n; ++i) y[i] += step * h[i];
          if (mod(q.value(y) - target, m) == 0) next.push_back(y);
          return true;
        });
        if (next.size() > cap) break;
      }
      if (next.size() > cap) {
        undecided = true;
        break;
      }
      states = std::move(next);
    }
  }
  res.status = undecided ? Solubility::Undecided : Solubility::Insoluble;
  return res;
}

std::size_t rank_mod(const std::vector<IntegerVector>& rows, const Integer& ell) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Integer>> m;
  for (const auto& r : rows) {
    std::vector<Integer> row(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) row[i] = mod(r[i], ell);
    m.push_back(row);
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Integer inv = inverse_mod(m[rank][c], ell);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Integer f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k], ell);
    }
    ++rank;
  }
  return rank;
}

std::optional<LocalBasis> local_norm_basis(const QForm& q, const Integer& s, const Integer& ell) {
  require_prime(ell);
  const std::size_t n = q.rank();
  LocalBasis out;
  if (ell == 2) {
    require_small_rank_at_two(q);
    out.depth = 3;
    for_each_residue(n, 8, [&](const IntegerVector& x) {
      if (!hensel_liftable(q, x, s, ell, 3)) return true;
      auto trial = out.vectors;
      trial.push_back(x);
      if (rank_mod(trial, ell) == trial.size()) out.vectors = std::move(trial);
      return out.vectors.size() < n;
    });
    if (out.vectors.size() < n) return std::nullopt;
    return out;
  }
  long l = small_ell(ell);
  auto root = sqrt_table(l);
  LocalDiag diag = diagonalize_local(q.gram(), ell);
  std::vector<std::size_t> e0, rest;
  std::vector<long> u;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag.d[i] != 0 && valuation(diag.d[i], ell) == 0) {
      e0.push_back(i);
      u.push_back(mod_unit(diag.d[i], ell).get_si());
    } else {
      rest.push_back(i);
    }
  }
  // Points of the unit part; the remaining coordinates are free mod ℓ.
  std::vector<std::vector<Integer>> ys;
  std::vector<IntegerVector> zs;
  for_each_point(u, mod(s, ell).get_si(), l, root, [&](const std::vector<long>& z) {
    IntegerVector zv(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) zv[k] = z[k];
    auto trial = zs;
    trial.push_back(zv);
    if (rank_mod(trial, ell) == trial.size()) {
      zs = std::move(trial);
      std::vector<Integer> y(n, 0);
      for (std::size_t k = 0; k < e0.size(); ++k) y[e0[k]] = z[k];
      ys.push_back(y);
    }
    return zs.size() < e0.size();
  });
  if (e0.empty() || zs.size() < e0.size()) return std::nullopt;
  for (std::size_t j : rest) {
    std::vector<Integer> y = ys[0];
    y[j] += 1;
    ys.push_back(y);
  }
  out.depth = 1;
  for (const auto& y : ys) {
    IntegerVector x = to_original(y, diag.basis, ell);
    if (!hensel_liftable(q, x, s, ell, 1)) throw std::logic_error("local_norm_basis: witness failed verification");
    out.vectors.push_back(x);
  }
  if (rank_mod(out.vectors, ell) != n) throw std::logic_error("local_norm_basis: witnesses not independent");
  return out;
}

}  // namespace quatlat
