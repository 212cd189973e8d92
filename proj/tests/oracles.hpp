#pragma once

// Independent reference computations for the tests. Nothing here shares code
// with the library's elimination or graded-slice routines.

#include <random>
#include <vector>

#include "jacsyz/matrix.hpp"
#include "jacsyz/poly.hpp"

namespace oracle {

using jacsyz::Matrix;
using jacsyz::Rational;

// Textbook Gauss-Jordan over Q: first nonzero pivot, divide, eliminate.
inline std::pair<Matrix<Rational>, std::vector<std::size_t>> rref(Matrix<Rational> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return {std::move(m), pivots};
}

inline std::size_t rank(Matrix<Rational> m) { return rref(std::move(m)).second.size(); }

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound,
                                      double density = 1.0) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::bernoulli_distribution keep(density);
    Matrix<Rational> m(rows, cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) m(i, j) = coeff(rng);
    return m;
}

// Enumerates exponent vectors of degree d directly (no MonomialBasis).
inline void monomials(int nvars, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == nvars - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        monomials(nvars, d - e, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> monomials(int nvars, int d) {
    std::vector<int> cur;
    std::vector<std::vector<int>> out;
    monomials(nvars, d, cur, out);
    return out;
}

inline jacsyz::HomogPoly random_poly(std::mt19937_64& rng, int nvars, int d, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    jacsyz::HomogPoly::Terms terms;
    for (auto& e : monomials(nvars, d)) terms[jacsyz::Monomial(e)] = coeff(rng);
    return {nvars, d, std::move(terms)};
}

// Number of degree-k monomials divisible by at least one generator monomial.
inline long monomial_ideal_dim(int nvars, const std::vector<std::vector<int>>& gens, int k) {
    long count = 0;
    for (auto& e : monomials(nvars, k)) {
        for (auto& g : gens) {
            bool divides = true;
            for (int i = 0; i < nvars; ++i) divides = divides && g[i] <= e[i];
            if (divides) {
                ++count;
                break;
            }
        }
    }
    return count;
}

inline long binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
