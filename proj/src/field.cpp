#include "jacsyz/field.hpp"

namespace jacsyz {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit n.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw Error("division by zero in " + name());
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from_integer(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
    value_type den = from_integer(q.get_den());
    if (den == 0) {
        throw Error("coefficient denominator " + q.get_den().get_str() + " vanishes in " + name());
    }
    return mul(from_integer(q.get_num()), inv(den));
}

std::uint32_t random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(1u << 30, (1u << 31) - 1);
    for (;;) {
        std::uint32_t c = dist(rng) | 1u;
        if (is_prime(c)) return c;
    }
}

}  // namespace jacsyz
