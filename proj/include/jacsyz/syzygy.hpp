#pragma once

// Relations among the partial derivatives, degree by degree:
//   AR(f)_m  all (a_0..a_n) in (S_m)^{n+1} with Σ a_i f_i = 0
//   KR(f)_m  the Koszul relations b·t_ij, t_ij = f_j e_i - f_i e_j
//   ER(f)_m  AR/KR
// Vectors of (S_m)^{n+1} use block coordinates: block i holds a_i in the
// monomial basis of S_m.

#include <optional>
#include <vector>

#include "jacsyz/milnor.hpp"

namespace jacsyz {

struct SyzygyProfile {
    std::vector<long> ar;
    std::vector<long> kr;
    std::vector<long> er;
    std::optional<int> mdr;
};

// The map (S_m)^{n+1} -> S_{m+d-1}, (a_i) ↦ Σ a_i f_i, as a matrix with rows
// indexed by S_{m+d-1}. Zero partials keep their (zero) column block.
template <class F>
MatrixOf<F> relation_map(const F& field, std::span<const HomogPoly> partials, int m) {
    const int target = partials.front().degree() + m;
    return multiplication_matrix(field, partials, target);
}

// AR(f)_m as an explicit subspace of (S_m)^{n+1}.
template <class F>
Subspace<F> ar_space(const F& field, std::span<const HomogPoly> partials, int m) {
    return kernel(field, relation_map(field, partials, m));
}

template <class F>
long ar_dim(const F& field, std::span<const HomogPoly> partials, int m) {
    if (m < 0) return 0;
    auto map = relation_map(field, partials, m);
    const long cols = static_cast<long>(map.cols());
    return cols - static_cast<long>(rank(field, std::move(map)));
}

// Spanning rows b·t_ij for all i < j and monomials b of degree m - (d-1).
template <class F>
MatrixOf<F> koszul_relations(const F& field, std::span<const HomogPoly> partials, int m) {
    const int nvars = partials.front().nvars();
    const int gen_degree = partials.front().degree();
    const std::size_t block = static_cast<std::size_t>(monomial_count(nvars, m));
    MatrixOf<F> rows(0, block * partials.size(), field.zero());
    if (m < gen_degree) return rows;
    MonomialBasis slot(nvars, m);
    MonomialBasis shifts(nvars, m - gen_degree);
    VectorOf<F> v(block * partials.size());
    for (std::size_t i = 0; i < partials.size(); ++i) {
        for (std::size_t j = i + 1; j < partials.size(); ++j) {
            for (const auto& b : shifts.monomials()) {
                std::fill(v.begin(), v.end(), field.zero());
                for (const auto& [mono, c] : partials[j].terms())
                    v[i * block + slot.index_of(mono * b)] = field.from_rational(c);
                for (const auto& [mono, c] : partials[i].terms())
                    v[j * block + slot.index_of(mono * b)] = field.neg(field.from_rational(c));
                rows.append_row(v);
            }
        }
    }
    return rows;
}

template <class F>
Subspace<F> kr_space(const F& field, std::span<const HomogPoly> partials, int m) {
    return Subspace<F>::span(field, koszul_relations(field, partials, m));
}

template <class F>
long kr_dim(const F& field, std::span<const HomogPoly> partials, int m) {
    if (m < partials.front().degree()) return 0;
    return static_cast<long>(rank(field, koszul_relations(field, partials, m)));
}

template <class F>
long er_dim(const F& field, std::span<const HomogPoly> partials, int m) {
    return ar_dim(field, partials, m) - kr_dim(field, partials, m);
}

// dim H^n(K*(f))_j = dim M(f)_{j+d-n-1} - dim M(f_s)_{j+d-n-1}, read off the
// Milnor profile. Throws std::out_of_range beyond the recorded degrees.
long koszul_hn_dim(const MilnorProfile& p, int j);

// Least m in [0, min(T, mmax)] with er[m] > 0.
std::optional<int> minimal_degree_relation(const std::vector<long>& er, int T);

// ar/kr/er for m = 0..mmax, computed degree-parallel.
template <class F>
SyzygyProfile syzygy_profile(const F& field, const HomogPoly& f, int mmax) {
    auto parts = partial_derivatives(f);
    std::span<const HomogPoly> gens(parts);
    SyzygyProfile s;
    const std::size_t count = mmax < 0 ? 0 : static_cast<std::size_t>(mmax) + 1;
    s.ar.assign(count, 0);
    s.kr.assign(count, 0);
    parallel_for(2 * count, [&](std::size_t task) {
        const int m = static_cast<int>(task / 2);
        if (task % 2 == 0)
            s.ar[m] = ar_dim(field, gens, m);
        else
            s.kr[m] = kr_dim(field, gens, m);
    });
    s.er.resize(count);
    for (std::size_t m = 0; m < count; ++m) s.er[m] = s.ar[m] - s.kr[m];
    s.mdr = minimal_degree_relation(s.er, top_degree(f.nvars() - 1, f.degree()));
    return s;
}

}  // namespace jacsyz
