#pragma once

// Degree-truncated linear algebra for homogeneous ideals: monomial bases of
// S_k, multiplication maps and the degree-k pieces I_k of ideals given by
// generators.

#include <optional>
#include <span>
#include <vector>

#include "jacsyz/linalg.hpp"
#include "jacsyz/parallel.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

// binomial(n, k) for nonnegative arguments; 0 when k > n or k < 0.
long binomial(long n, long k);

// dim S_k for S with `nvars` variables.
long monomial_count(int nvars, int k);

// All monomials of degree k in strictly increasing lex order.
class MonomialBasis {
public:
    MonomialBasis(int nvars, int degree);

    int nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

    // Position of m; m must have this basis' degree and variable count.
    std::size_t index_of(const Monomial& m) const;

private:
    int nvars_;
    int degree_;
    std::vector<Monomial> monomials_;
};

MonomialBasis monomial_basis(int nvars, int k);

// Coefficient vector of a degree-k polynomial in the basis of S_k.
template <class F>
VectorOf<F> coordinates(const F& field, const HomogPoly& p, const MonomialBasis& basis) {
    VectorOf<F> v(basis.size(), field.zero());
    for (const auto& [m, c] : p.terms()) v[basis.index_of(m)] = field.from_rational(c);
    return v;
}

namespace detail {

// Row (g_j, m) holds the coordinates of m * g_j in S_k. Zero generators and
// generators of degree > k contribute no rows.
template <class F>
MatrixOf<F> product_rows(const F& field, std::span<const HomogPoly> gens, int k) {
    const int nvars = gens.empty() ? 0 : gens.front().nvars();
    MonomialBasis target(nvars, k);
    MatrixOf<F> rows(0, target.size(), field.zero());
    VectorOf<F> v(target.size());
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > k) continue;
        MonomialBasis shifts(nvars, k - g.degree());
        for (const auto& m : shifts.monomials()) {
            std::fill(v.begin(), v.end(), field.zero());
            for (const auto& [gm, c] : g.terms()) v[target.index_of(gm * m)] = field.from_rational(c);
            rows.append_row(v);
        }
    }
    return rows;
}

}  // namespace detail

// Rows are indexed by the monomials of S_k, columns by pairs (g_j, m) with
// deg m = k - deg g_j; column (g_j, m) is the coordinate vector of m * g_j.
template <class F>
MatrixOf<F> multiplication_matrix(const F& field, std::span<const HomogPoly> gens, int k) {
    for (const auto& g : gens)
        if (g.degree() > k) throw DegreeTooLow(g.degree(), k);
    if (gens.empty()) return MatrixOf<F>(0, 0, field.zero());
    const int nvars = gens.front().nvars();
    MonomialBasis target(nvars, k);
    std::size_t cols = 0;
    for (const auto& g : gens) cols += static_cast<std::size_t>(monomial_count(nvars, k - g.degree()));
    MatrixOf<F> out(target.size(), cols, field.zero());
    std::size_t col = 0;
    for (const auto& g : gens) {
        MonomialBasis shifts(nvars, k - g.degree());
        for (const auto& m : shifts.monomials()) {
            for (const auto& [gm, c] : g.terms()) out(target.index_of(gm * m), col) = field.from_rational(c);
            ++col;
        }
    }
    return out;
}

template <class F>
struct IdealSlice {
    int degree;
    Subspace<F> space;
    std::vector<int> generator_degrees;
};

template <class F>
IdealSlice<F> ideal_slice(const F& field, std::span<const HomogPoly> gens, int k) {
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.degree());
    const int nvars = gens.empty() ? 1 : gens.front().nvars();
    if (gens.empty()) return {k, Subspace<F>(field, static_cast<std::size_t>(monomial_count(nvars, k))), degs};
    return {k, Subspace<F>::span(field, detail::product_rows(field, gens, k)), std::move(degs)};
}

// dim I_k without building the canonical basis.
template <class F>
long ideal_dim(const F& field, std::span<const HomogPoly> gens, int k) {
    if (gens.empty()) return 0;
    return static_cast<long>(rank(field, detail::product_rows(field, gens, k)));
}

// Degree -> dimension, with the stable tail detected over a fixed window.
struct HilbertFunction {
    std::vector<long> dims;
    std::optional<long> stable_value;
    std::optional<int> stable_from;

    long operator[](int k) const { return dims.at(static_cast<std::size_t>(k)); }
    int max_degree() const noexcept { return static_cast<int>(dims.size()) - 1; }
};

// Marks the function stable when the last `window` entries agree; stable_from
// is then the least q with dims[k] equal to that value for every recorded k >= q.
HilbertFunction make_hilbert_function(std::vector<long> dims, int window);

// dims[k] = dim S_k - dim I_k for k = 0..kmax; stability window n+2 where n+1 = nvars.
template <class F>
HilbertFunction hilbert_function_of_quotient(const F& field, std::span<const HomogPoly> gens, int nvars,
                                             int kmax) {
    std::vector<long> dims(static_cast<std::size_t>(kmax) + 1);
    parallel_for(dims.size(), [&](std::size_t k) {
        const int deg = static_cast<int>(k);
        dims[k] = monomial_count(nvars, deg) - ideal_dim(field, gens, deg);
    });
    return make_hilbert_function(std::move(dims), nvars + 1);
}

}  // namespace jacsyz
