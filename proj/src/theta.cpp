#include "quatlat/theta.hpp"

#include <stdexcept>

#include "quatlat/orders.hpp"

namespace quatlat {

ThetaSeries theta_coeffs(const GramMatrix& g, long n) {
  if (n < 0) throw std::invalid_argument("theta: negative truncation");
  if (!g.is_integral()) throw std::domain_error("theta: lattice is not integral");
  return {n, norm_counts(g, n)};
}

ThetaSeries theta_coeffs(const ExactLattice& l, long n) { return theta_coeffs(l.gram(), n); }

std::pair<ThetaSeries, ThetaSeries> theta01(long n) {
  if (n < 0) throw std::invalid_argument("theta01: negative truncation");
  ThetaSeries t0{n, std::vector<std::int64_t>(n + 1, 0)}, t1{n, std::vector<std::int64_t>(n + 1, 0)};
  t0.coeffs[0] = 1;
  for (long m = 1; m * m <= n; ++m) t0.coeffs[m * m] += 2;
  for (long m = 0; m * m + m <= n; ++m) t1.coeffs[m * m + m] += 2;
  return {t0, t1};
}

TauDecomposition decompose_by_tau(const AlgebraRef& alg, const ExactLattice& l, long n) {
  if (!l.contains(Quat(alg, 1).coords())) throw std::domain_error("decompose_by_tau: 1 is not in the lattice");
  if (!l.gram().is_integral()) throw std::domain_error("decompose_by_tau: lattice is not integral");
  std::vector<Quat> t;
  for (const auto& b : lattice_quats(alg, l)) t.push_back(tau(b));
  ExactLattice tl = quat_lattice(alg, t);
  TauDecomposition d{std::vector<std::int64_t>(n + 1, 0), std::vector<std::int64_t>(n + 1, 0)};
  d.f[0] = 1;
  for (const auto& v : enumerate_up_to(tl.gram(), Rational(4 * n))) {
    Integer m = v.norm.get_num();
    Integer r = mod(m, 4);
    if (r == 0) {
      ++d.f[to_long(m / 4)];
    } else if (r == 3) {
      long k = to_long((m + 1) / 4);
      if (k <= n) ++d.g[k];
    } else {
      throw std::logic_error("decompose_by_tau: norm not 0 or 3 mod 4");
    }
  }
  return d;
}

ThetaSeries recombine(const TauDecomposition& d, long n) {
  auto [t0, t1] = theta01(n);
  ThetaSeries out{n, std::vector<std::int64_t>(n + 1, 0)};
  for (long k = 0; k <= n && k < static_cast<long>(d.f.size()); ++k)
    for (long j = 0; k + j <= n; ++j) out.coeffs[k + j] += d.f[k] * t0.coeffs[j] + d.g[k] * t1.coeffs[j];
  return out;
}

bool theta_equal(const ExactLattice& a, const ExactLattice& b, long n) {
  return theta_coeffs(a, n) == theta_coeffs(b, n);
}

}  // namespace quatlat
