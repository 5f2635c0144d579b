/** @file arith.hpp
 *  @brief Exact integer and rational helpers on top of GMP.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quatlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

/// Floor division and non-negative remainder for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod(const Integer& a, const Integer& m);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n, Integer* root = nullptr);

bool is_prime(const Integer& n);
std::vector<Integer> prime_divisors(Integer n);

/// ℓ-adic valuation of a nonzero integer (or rational).
int valuation(const Integer& n, const Integer& ell);
int valuation(const Rational& q, const Integer& ell);

Integer pow(const Integer& base, unsigned long e);
long to_long(const Integer& n);

/// Largest m with m^k ≤ n, for n ≥ 0.
Integer iroot(const Integer& n, unsigned long k);

}  // namespace quatlat
