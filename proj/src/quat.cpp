#include "quatlat/quat.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace quatlat {

QuaternionAlgebra::QuaternionAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 || b_ == 0) throw std::domain_error("quaternion algebra needs nonzero a, b");
}

RationalMatrix QuaternionAlgebra::norm_form() const {
  RationalMatrix g(4, 4);
  g(0, 0) = 1;
  g(1, 1) = -a_;
  g(2, 2) = -b_;
  g(3, 3) = a_ * b_;
  return g;
}

AlgebraRef make_algebra(const Rational& a, const Rational& b) {
  return std::make_shared<const QuaternionAlgebra>(a, b);
}

Quat::Quat(AlgebraRef alg, Rational t, Rational x, Rational y, Rational z)
    : alg_(std::move(alg)), c_{std::move(t), std::move(x), std::move(y), std::move(z)} {
  if (!alg_) throw std::invalid_argument("quaternion without algebra");
}

Quat::Quat(AlgebraRef alg, const RationalVector& coords) : alg_(std::move(alg)) {
  if (!alg_) throw std::invalid_argument("quaternion without algebra");
  if (coords.size() != 4) throw std::invalid_argument("quaternion needs 4 coordinates");
  for (int i = 0; i < 4; ++i) c_[i] = coords[i];
}

void Quat::check_same(const Quat& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_))
    throw std::invalid_argument("quaternions from different algebras");
}

Quat Quat::conj() const { return Quat(alg_, c_[0], -c_[1], -c_[2], -c_[3]); }

Rational Quat::norm() const {
  const Rational& a = alg_->a();
  const Rational& b = alg_->b();
  return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
}

Quat Quat::operator+(const Quat& o) const {
  check_same(o);
  return Quat(alg_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Quat Quat::operator-(const Quat& o) const {
  check_same(o);
  return Quat(alg_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Quat Quat::operator-() const { return Quat(alg_, -c_[0], -c_[1], -c_[2], -c_[3]); }

Quat Quat::operator*(const Quat& o) const {
  check_same(o);
  const Rational& a = alg_->a();
  const Rational& b = alg_->b();
  const auto& [t1, x1, y1, z1] = c_;
  const auto& [t2, x2, y2, z2] = o.c_;
  return Quat(alg_,
              t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
              t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2,
              t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2,
              t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2);
}

Quat Quat::operator*(const Rational& s) const {
  return Quat(alg_, c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
}

Quat Quat::operator/(const Rational& s) const {
  if (s == 0) throw std::domain_error("division by zero");
  return *this * (1 / s);
}

std::string Quat::str() const {
  std::ostringstream os;
  static const char* names[] = {"", "i", "j", "k"};
  bool first = true;
  for (int n = 0; n < 4; ++n) {
    if (c_[n] == 0) continue;
    Rational v = c_[n];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    if (n == 0 || v != 1) os << v.get_str();
    if (n > 0 && v != 1) os << "*";
    os << names[n];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::tuple<Quat, Rational, Rational> conj_trace_norm(const Quat& x) {
  return {x.conj(), x.trace(), x.norm()};
}

Rational inner(const Quat& x, const Quat& y) {
  if (x.algebra() != y.algebra() && !(*x.algebra() == *y.algebra()))
    throw std::invalid_argument("quaternions from different algebras");
  const Rational& a = x.algebra()->a();
  const Rational& b = x.algebra()->b();
  return x[0] * y[0] - a * x[1] * y[1] - b * x[2] * y[2] + a * b * x[3] * y[3];
}

Quat tau(const Quat& x) { return x * Rational(2) - Quat(x.algebra(), x.trace()); }

namespace {

// Squarefree integer in the same square class as q.
Integer squarefree_class(const Rational& q) {
  Integer n = q.get_num() * q.get_den();
  Integer sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  Integer out = 1;
  for (const auto& ell : prime_divisors(m)) {
    if (valuation(m, ell) % 2 == 1) out *= ell;
  }
  return sign * out;
}

}  // namespace

int hilbert_symbol(const Rational& a_in, const Rational& b_in, const Integer& ell) {
  if (a_in == 0 || b_in == 0) throw std::domain_error("hilbert symbol of zero");
  if (!is_prime(ell)) throw std::domain_error("hilbert symbol at non-prime");
  const Integer a = squarefree_class(a_in);
  const Integer b = squarefree_class(b_in);
  int k = 1;
  if (ell == 2 || (a * b) % ell == 0) k = valuation(Integer(4 * a * b), ell) + 1;
  const long m = to_long(pow(ell, k));
  const long el = to_long(ell);
  std::vector<char> square(m, 0);
  for (long z = 0; z < m; ++z) square[(z * z) % m] = 1;
  const long am = to_long(mod(a, m)), bm = to_long(mod(b, m));
  // A primitive solution of z² = ax² + by² has x or y a unit; scale it to 1.
  for (long y = 0; y < m; ++y) {
    long v = (am + (bm * ((y * y) % m)) % m) % m;
    if (square[v]) return 1;
  }
  for (long x = 0; x < m; x += el) {
    long v = ((am * ((x * x) % m)) % m + bm) % m;
    if (square[v]) return 1;
  }
  return -1;
}

std::set<Integer> ramified_primes(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("ramified_primes of zero");
  Integer n = 2 * a.get_num() * a.get_den() * b.get_num() * b.get_den();
  std::set<Integer> out;
  for (const auto& ell : prime_divisors(n))
    if (hilbert_symbol(a, b, ell) == -1) out.insert(ell);
  return out;
}

AlgebraRef bp_algebra(const Integer& p) {
  if (!is_prime(p)) throw std::domain_error("bp_algebra: " + p.get_str() + " is not prime");
  const std::set<Integer> want{p};
  auto certified = [&](const Integer& a, const Integer& b) {
    return ramified_primes(Rational(a), Rational(b)) == want;
  };
  Integer a, b = -p;
  if (p == 2) {
    a = -1;
    b = -1;
  } else if (p % 4 == 3) {
    a = -1;
  } else if (p % 8 == 5) {
    a = -2;
  } else {
    const Integer bound = 100000;
    bool found = false;
    for (Integer q = 3; q < bound; q += 4) {
      if (!is_prime(q)) continue;
      if (certified(-q, -p)) {
        a = -q;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("bp_algebra: no auxiliary prime below bound for p=" + p.get_str());
  }
  if (!certified(a, b))
    throw std::logic_error("bp_algebra: recipe (" + a.get_str() + "," + b.get_str() +
                           ") not ramified exactly at " + p.get_str());
  return make_algebra(Rational(a), Rational(b));
}

}  // namespace quatlat
