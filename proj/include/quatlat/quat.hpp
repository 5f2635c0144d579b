/** @file quat.hpp
 *  @brief Rational quaternion algebras (a,b) and their elements.
 */
#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <tuple>

#include "quatlat/arith.hpp"
#include "quatlat/matrix.hpp"

namespace quatlat {

class QuaternionAlgebra {
 public:
  QuaternionAlgebra(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_definite() const { return a_ < 0 && b_ < 0; }

  /// Gram of ½Tr(x ȳ) in the basis 1, i, j, k: diag(1, −a, −b, ab).
  RationalMatrix norm_form() const;

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_, b_;
};

using AlgebraRef = std::shared_ptr<const QuaternionAlgebra>;

AlgebraRef make_algebra(const Rational& a, const Rational& b);

class Quat {
 public:
  Quat() = default;
  explicit Quat(AlgebraRef alg, Rational t = 0, Rational x = 0, Rational y = 0, Rational z = 0);
  Quat(AlgebraRef alg, const RationalVector& coords);

  const AlgebraRef& algebra() const { return alg_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  RationalVector coords() const { return {c_[0], c_[1], c_[2], c_[3]}; }

  Quat conj() const;
  Rational trace() const { return 2 * c_[0]; }
  Rational norm() const;

  Quat operator+(const Quat& o) const;
  Quat operator-(const Quat& o) const;
  Quat operator-() const;
  Quat operator*(const Quat& o) const;
  Quat operator*(const Rational& s) const;
  Quat operator/(const Rational& s) const;

  friend bool operator==(const Quat& x, const Quat& y) { return x.c_ == y.c_; }

  std::string str() const;

 private:
  void check_same(const Quat& o) const;
  AlgebraRef alg_;
  std::array<Rational, 4> c_;
};

inline Quat operator*(const Rational& s, const Quat& q) { return q * s; }

/// (x̄, Tr x, N x).
std::tuple<Quat, Rational, Rational> conj_trace_norm(const Quat& x);

/// ½Tr(x ȳ).
Rational inner(const Quat& x, const Quat& y);

/// τ(x) = 2x − Tr(x).
Quat tau(const Quat& x);

/// Hilbert symbol (a,b)_ℓ ∈ {+1,−1} for a prime ℓ, by exhaustive solubility search.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& ell);

/// Finite primes at which (a,b) ramifies.
std::set<Integer> ramified_primes(const Rational& a, const Rational& b);

/// A definite algebra ramified exactly at {p, ∞}.
AlgebraRef bp_algebra(const Integer& p);

}  // namespace quatlat
