#include "quatlat/matrix.hpp"

#include <utility>

namespace quatlat {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::domain_error("non-integral entry " + to_string(m(i, j)));
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

namespace {

// Gaussian elimination to row echelon form; returns rank and determinant sign/product.
std::size_t eliminate(RationalMatrix& a, Rational* det) {
  const std::size_t n = a.rows(), m = a.cols();
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(r, j));
      d = -d;
    }
    d *= a(r, c);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < m; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (r < n) d = 0;
  if (det) *det = d;
  return r;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  RationalMatrix a = m;
  Rational d;
  eliminate(a, &d);
  return d;
}

Integer determinant(const IntegerMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return eliminate(a, nullptr);
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  RationalMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(c, j));
    Rational inv = 1 / a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

std::optional<RationalVector> solve_left(const RationalMatrix& b, const RationalVector& v) {
  // x·B = v  ⟺  Bᵀ xᵀ = vᵀ. Augment and eliminate.
  const std::size_t k = b.rows(), m = b.cols();
  if (v.size() != m) throw std::invalid_argument("solve_left: length mismatch");
  RationalMatrix a(m, k + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = b(j, i);
    a(i, k) = v[i];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t j = 0; j <= k; ++j) std::swap(a(piv, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j <= k; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j <= k; ++j) a(i, j) -= f * a(r, j);
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a(i, k) != 0) return std::nullopt;
  if (r < k) throw std::domain_error("solve_left: rows not independent");
  RationalVector x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a(i, k);
  return x;
}

RationalVector row_times(const RationalVector& x, const RationalMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("row_times: length mismatch");
  RationalVector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

IntegerVector row_times(const IntegerVector& x, const IntegerMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("row_times: length mismatch");
  IntegerVector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

HnfResult hnf(const IntegerMatrix& m) {
  const std::size_t k = m.rows(), n = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(k);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < k; ++c) std::swap(u(i, c), u(j, c));
  };
  auto sub_rows = [&](std::size_t i, std::size_t j, const Integer& q) {  // row_i -= q·row_j
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) a(i, c) -= q * a(j, c);
    for (std::size_t c = 0; c < k; ++c) u(i, c) -= q * u(j, c);
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < k; ++col) {
    while (true) {
      std::size_t best = k;
      for (std::size_t i = row; i < k; ++i)
        if (a(i, col) != 0 && (best == k || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best == k) break;
      swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < k; ++i) {
        if (a(i, col) == 0) continue;
        sub_rows(i, row, floor_div(a(i, col), a(row, col)));
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(row, c) = -a(row, c);
      for (std::size_t c = 0; c < k; ++c) u(row, c) = -u(row, c);
    }
    for (std::size_t i = 0; i < row; ++i) sub_rows(i, row, floor_div(a(i, col), a(row, col)));
    ++row;
  }
  HnfResult res;
  res.rank = row;
  res.h = IntegerMatrix(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t c = 0; c < n; ++c) res.h(i, c) = a(i, c);
  res.transform = std::move(u);
  return res;
}

IntegerMatrix left_kernel(const IntegerMatrix& m) {
  HnfResult r = hnf(m);
  const std::size_t k = m.rows();
  IntegerMatrix ker(k - r.rank, k);
  for (std::size_t i = r.rank; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) ker(i - r.rank, c) = r.transform(i, c);
  if (ker.rows() == 0) return ker;
  return hnf(ker).h;
}

Integer common_denominator(const RationalMatrix& m) {
  Integer d = 1;
  for (const auto& x : m.data()) {
    Integer den = x.get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  return d;
}

}  // namespace quatlat
