#pragma once

// Coefficient fields. Two implementations share one small interface so that
// the linear algebra can be written once:
//
//   value_type                 element representation
//   zero(), one()
//   is_zero(a), equal(a, b)
//   add, sub, mul, neg, inv
//   from_rational(q)           image of a rational number (may throw)
//   name()                     "exact" or "mod:<p>"
//
// Elements are plain values; a field object carries only the modulus.

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "jacsyz/errors.hpp"

namespace jacsyz {

using Integer = mpz_class;
using Rational = mpq_class;

class RationalField {
public:
    using value_type = Rational;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type from_rational(const Rational& q) const { return q; }
    std::string name() const { return "exact"; }
    bool operator==(const RationalField&) const { return true; }
};

bool is_prime(std::uint64_t n);

// Residues modulo a prime p < 2^31, stored in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;
    value_type from_integer(const Integer& z) const;
    value_type from_rational(const Rational& q) const;
    std::string name() const { return "mod:" + std::to_string(p_); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

// Uniformly chosen prime in [2^30, 2^31).
std::uint32_t random_prime(std::mt19937_64& rng);

}  // namespace jacsyz
