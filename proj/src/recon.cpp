#include "quatlat/recon.hpp"

#include <algorithm>
#include <sstream>

namespace quatlat {

namespace {

Integer delta_of(const Integer& d) { return mod(d, 2); }

/// Largest x ≥ 0 with x^k·c ≤ bound.
Integer largest_root_below(const Integer& bound, const Integer& c, unsigned long k) {
  if (bound < 0) return -1;
  Integer x = iroot(bound / c, k);
  while (pow(x + 1, k) * c <= bound) ++x;
  while (x > 0 && pow(x, k) * c > bound) --x;
  return x;
}

long first_difference(const ThetaSeries& a, const ThetaSeries& b, long from) {
  long n = std::min(a.n, b.n);
  for (long k = from; k <= n; ++k)
    if (a[k] != b[k]) return k;
  return -1;
}

std::string describe(const char* step, long n, std::int64_t cn, const char* rule) {
  std::ostringstream os;
  os << step << ": c_" << n << "=" << cn << " -> " << rule;
  return os.str();
}

/// Shared case table for the first two minima.
DStep case_table(const char* step, const ThetaSeries& theta_o, const ThetaSeries& sub) {
  long n = first_difference(theta_o, sub, 1);
  if (n < 0) throw InsufficientTerms(std::string(step) + ": no difference within " + std::to_string(theta_o.n) + " terms");
  std::int64_t cn = theta_o[n] - sub[n];
  DStep r;
  r.n = n;
  r.cn = cn;
  if (cn == 2) {
    r.value = 4 * n;
    r.provenance = describe(step, n, cn, "4n");
  } else if (cn == 4) {
    r.value = 4 * n - 1;
    r.provenance = describe(step, n, cn, "4n-1");
  } else if (cn == 6) {
    r.value = 4 * n - 1;
    r.next = Integer(4 * n);
    r.provenance = describe(step, n, cn, "4n-1, next 4n");
  } else {
    throw CaseViolation(std::string(step) + ": coefficient c_" + std::to_string(n) + " = " + std::to_string(cn) +
                        " outside {2,4,6}");
  }
  return r;
}

}  // namespace

Integer kaneko_check(const Quat& b1, const Quat& b2, const Integer& p) {
  Rational t = inner(b1, b2);
  Rational det = b1.norm() * b2.norm() - t * t;
  if (det == 0) throw std::invalid_argument("kaneko_check: dependent pair");
  Rational k = det / Rational(4 * p);
  if (!is_integer(k) || k <= 0)
    throw ConstraintViolated("kaneko_check: " + b1.str() + ", " + b2.str() + " give " + to_string(det) +
                             ", not a positive multiple of 4p");
  return k.get_num();
}

SuccminBounds succmin_bounds(const Integer& p, const Integer& r, const Integer& d1) {
  if (p < 2 || r < 1) throw std::invalid_argument("succmin_bounds: bad p or r");
  Integer eight_delta = 8 * r * r * p * p;
  SuccminBounds b;
  b.d1_max = largest_root_below(eight_delta, 1, 3);
  if (d1 >= 1) {
    b.d2_min = ceil_q(make_rational(4 * p, d1));
    b.d2_max = largest_root_below(eight_delta, d1, 2);
    b.d3_max = floor_div(eight_delta, d1 * std::max(b.d2_min, d1));
  }
  return b;
}

Integer unique_trace(const Integer& da, const Integer& db, const Integer& p) {
  if (da > p) throw std::invalid_argument("unique_trace: Da > p");
  Integer target = mod(da * db, p);
  Integer half = p / 2;
  for (Integer t = 0; t <= half; ++t)
    if (mod(t * t, p) == target) return t;
  throw ConstraintViolated("unique_trace: " + to_string(da) + "*" + to_string(db) + " is not a square mod " +
                           to_string(p));
}

GramMatrix quadratic_order_gram(const Integer& d1) {
  Integer dl = delta_of(d1);
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = m(1, 0) = make_rational(dl, 2);
  m(1, 1) = make_rational(d1 + dl, 4);
  return GramMatrix(m);
}

GramMatrix rank3_gram(const Integer& d1, const Integer& d2, const Integer& p) {
  Integer t = unique_trace(d1, d2, p);
  Integer e1 = delta_of(d1), e2 = delta_of(d2);
  RationalMatrix m(3, 3);
  m(0, 0) = 1;
  m(0, 1) = m(1, 0) = make_rational(e1, 2);
  m(0, 2) = m(2, 0) = make_rational(e2, 2);
  m(1, 1) = make_rational(d1 + e1, 4);
  m(1, 2) = m(2, 1) = make_rational(t + e1 * e2, 4);
  m(2, 2) = make_rational(d2 + e2, 4);
  return GramMatrix(m);
}

DStep d1_from_theta(const ThetaSeries& theta_o) {
  auto [t0, t1] = theta01(theta_o.n);
  (void)t1;
  return case_table("D1", theta_o, t0);
}

DStep d2_from_theta(const ThetaSeries& theta_o, const Integer& d1) {
  if (d1 < 15) throw std::invalid_argument("d2_from_theta: needs D1 >= 15");
  ThetaSeries sub = theta_coeffs(quadratic_order_gram(d1), theta_o.n);
  return case_table("D2", theta_o, sub);
}

DStep d3_from_theta(const ThetaSeries& theta_o, const GramMatrix& rank3) {
  ThetaSeries sub = theta_coeffs(rank3, theta_o.n);
  long n = first_difference(theta_o, sub, 1);
  if (n < 0 || n + 1 > theta_o.n)
    throw InsufficientTerms("D3: need terms beyond " + std::to_string(theta_o.n));
  DStep r;
  r.n = n;
  r.cn = theta_o[n] - sub[n];
  std::int64_t next = theta_o[n + 1] - sub[n + 1];
  if (r.cn == 2) {
    r.value = 4 * n;
    r.provenance = describe("D3", n, r.cn, "4n");
  } else if (r.cn == 4 && next >= 8) {
    r.value = 4 * n;
    r.provenance = "D3: c_" + std::to_string(n) + "=4, c_" + std::to_string(n + 1) + "=" + std::to_string(next) +
                   " -> 4n";
  } else {
    r.value = 4 * n - 1;
    r.provenance = "D3: c_" + std::to_string(n) + "=" + std::to_string(r.cn) + ", c_" + std::to_string(n + 1) +
                   "=" + std::to_string(next) + " -> 4n-1";
  }
  return r;
}

ReconGram gross_gram_from_minima(const Integer& d1, const Integer& d2, const Integer& d3, const Integer& p,
                                 const Integer& r) {
  if (d1 < 8 * r * r) throw std::invalid_argument("gross_gram_from_minima: needs D1 >= 8r^2");
  if (mod(p, 2) == 0) throw std::invalid_argument("gross_gram_from_minima: p must be odd");
  ReconGram out;
  out.t12 = unique_trace(d1, d2, p);
  out.t13 = unique_trace(d1, d3, p);
  out.t23 = unique_trace(d2, d3, p);
  auto build = [&](bool plus) {
    RationalMatrix m(3, 3);
    m(0, 0) = d1;
    m(1, 1) = d2;
    m(2, 2) = d3;
    m(0, 1) = m(1, 0) = out.t12;
    m(1, 2) = m(2, 1) = out.t23;
    m(0, 2) = m(2, 0) = plus ? Rational(out.t13) : Rational(-out.t13);
    return GramMatrix(m);
  };
  GramMatrix ap = build(true), am = build(false);
  if (out.t12 == 0 || out.t13 == 0 || out.t23 == 0) {
    out.gram = ap;
    out.plus = true;
    return out;
  }
  Integer p2 = p * p;
  auto divisible = [&](const GramMatrix& g) {
    Rational d = 16 * g.det();
    return is_integer(d) && mod(d.get_num(), p2) == 0;
  };
  bool okp = divisible(ap), okm = divisible(am);
  if (okp == okm)
    throw AmbiguousSigns("gross_gram_from_minima: (" + to_string(d1) + "," + to_string(d2) + "," + to_string(d3) +
                         ") p=" + to_string(p) + (okp ? " both signs" : " neither sign"));
  out.plus = okp;
  out.gram = okp ? ap : am;
  return out;
}

long pipeline_terms_bound(const Integer& p) {
  // D3 ≤ 8p²/(D1·D2) ≤ 2p; one extra term for c_{n+1}.
  return to_long((2 * p + 1) / 4) + 2;
}

PipelineResult full_pipeline(const ThetaProvider& theta, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("full_pipeline: p must be prime");
  PipelineResult res;
  if (p <= 7) {
    res.kind = PipelineKind::UniqueClass;
    return res;
  }
  ThetaSeries cache;
  cache.n = -1;
  auto fetch = [&](long n) -> const ThetaSeries& {
    if (cache.n < n) {
      cache = theta(n);
      if (cache.n < n) throw InsufficientTerms("theta provider returned fewer terms than requested");
    }
    res.terms_used = std::max(res.terms_used, n);
    return cache;
  };

  SuccminBounds b0 = succmin_bounds(p, 1, 0);
  DStep s1 = d1_from_theta(fetch(to_long((b0.d1_max + 1) / 4) + 1));
  res.d1 = s1.value;
  if (s1.value < 15) {
    res.kind = PipelineKind::SmallCase;
    return res;
  }
  MinimaTriple tri;
  tri.d1 = s1.value;
  tri.provenance.push_back(s1.provenance);

  SuccminBounds b1 = succmin_bounds(p, 1, tri.d1);
  std::optional<Integer> d3_hint;
  if (s1.next) {
    tri.d2 = *s1.next;
  } else {
    DStep s2 = d2_from_theta(fetch(to_long((b1.d2_max + 1) / 4) + 1), tri.d1);
    tri.d2 = s2.value;
    tri.provenance.push_back(s2.provenance);
    d3_hint = s2.next;
  }
  // The c_n = 6 hint for D3 can come from a vector inside span(β₁, β₂) at small p,
  // so D3 always goes through the rank-3 subtraction.
  Integer d3_max = floor_div(8 * p * p, tri.d1 * tri.d2);
  DStep s3 = d3_from_theta(fetch(to_long((d3_max + 1) / 4) + 2), rank3_gram(tri.d1, tri.d2, p));
  tri.d3 = s3.value;
  tri.provenance.push_back(s3.provenance);
  if (d3_hint && *d3_hint != tri.d3)
    tri.provenance.push_back("D3 hint " + to_string(*d3_hint) + " from D2 step rejected");
  res.gram = gross_gram_from_minima(tri.d1, tri.d2, tri.d3, p);
  res.triple = std::move(tri);
  res.kind = PipelineKind::Full;
  return res;
}

PipelineResult full_pipeline(const ThetaSeries& theta, const Integer& p) {
  return full_pipeline(
      [&](long n) -> ThetaSeries {
        if (n > theta.n)
          throw InsufficientTerms("full_pipeline: need " + std::to_string(n) + " terms, have " +
                                  std::to_string(theta.n));
        ThetaSeries t;
        t.n = n;
        t.coeffs.assign(theta.coeffs.begin(), theta.coeffs.begin() + n + 1);
        return t;
      },
      p);
}

}  // namespace quatlat
