#pragma once

// Degree-wise saturation Ĵ of the Jacobian ideal and the invariants built
// on it: SD(J) = Ĵ/J, sat(J), defect_k, a-invariant and regularity.
//
// For k below the bound B = max(T - ct, st), Ĵ_k is the intersection over i
// of {g ∈ S_k : x_i^(B-k) g ∈ J_B}; from B on, Ĵ_k = J_k. The per-variable
// chains {g : x_i^N g ∈ J} only grow with N and have reached the full
// saturation once k + N >= B, so one exponent serves every variable.

#include <optional>
#include <vector>

#include "jacsyz/milnor.hpp"

namespace jacsyz {

// B = max(T - ct, st); st alone (= T + 1) for smooth input.
// Throws PreconditionViolated when the profile has no thresholds.
int saturation_bound(const MilnorProfile& p);

template <class F>
MatrixOf<F> identity_rows(const F& field, std::size_t n) {
    MatrixOf<F> id(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) id(i, i) = field.one();
    return id;
}

// Ĵ_k given the canonical basis of J_B.
template <class F>
Subspace<F> saturation_below_bound(const F& field, const Subspace<F>& j_bound, int nvars, int k, int bound) {
    MonomialBasis source(nvars, k);
    MonomialBasis target(nvars, bound);
    const int power = bound - k;

    // Column coordinates of S_B / J_B: the non-pivot monomials.
    std::vector<long> residue_index(target.size(), -1);
    {
        std::vector<bool> pivot(target.size(), false);
        for (auto c : j_bound.pivots()) pivot[c] = true;
        long next = 0;
        for (std::size_t c = 0; c < target.size(); ++c)
            if (!pivot[c]) residue_index[c] = next++;
    }
    const std::size_t quotient_dim = target.size() - j_bound.dim();
    std::vector<long> pivot_row(target.size(), -1);
    for (std::size_t r = 0; r < j_bound.pivots().size(); ++r) pivot_row[j_bound.pivots()[r]] = static_cast<long>(r);

    std::optional<Subspace<F>> result;
    for (int i = 0; i < nvars; ++i) {
        const Monomial shift = Monomial::variable(nvars, i, power);
        // Rows: quotient coordinates; columns: monomials g of S_k. Entry is the
        // class of x_i^N g in S_B / J_B.
        MatrixOf<F> classes(quotient_dim, source.size(), field.zero());
        for (std::size_t g = 0; g < source.size(); ++g) {
            const std::size_t c = target.index_of(source[g] * shift);
            if (pivot_row[c] < 0) {
                classes(static_cast<std::size_t>(residue_index[c]), g) = field.one();
                continue;
            }
            // e_c ≡ e_c - row = -(row restricted to free columns)
            auto row = j_bound.basis().row(static_cast<std::size_t>(pivot_row[c]));
            for (std::size_t j = 0; j < target.size(); ++j) {
                if (residue_index[j] < 0 || field.is_zero(row[j])) continue;
                classes(static_cast<std::size_t>(residue_index[j]), g) = field.neg(row[j]);
            }
        }
        Subspace<F> colon = quotient_dim == 0 ? Subspace<F>::span(field, identity_rows(field, source.size()))
                                              : kernel(field, std::move(classes));
        result = result ? subspace_intersect(*result, colon) : std::move(colon);
        if (result->dim() == 0) break;
    }
    return std::move(*result);
}

template <class F>
IdealSlice<F> saturation_slice(const F& field, std::span<const HomogPoly> partials, int k, int bound) {
    if (bound < 0) throw PreconditionViolated("saturation bound must be nonnegative");
    if (k >= bound) return ideal_slice(field, partials, k);
    const int nvars = partials.front().nvars();
    auto j_bound = ideal_slice(field, partials, bound);
    return {k, saturation_below_bound(field, j_bound.space, nvars, k, bound), j_bound.generator_degrees};
}

struct SaturationProfile {
    int bound = 0;
    std::vector<long> j_dims;
    std::vector<long> hatj_dims;
    std::vector<long> sd_dims;
    std::vector<long> defects;
    bool j_contained = true;  // J_k ⊆ Ĵ_k checked as subspaces for k < bound
    int sat = 0;
    std::optional<int> a_invariant;  // from the defects
    std::optional<int> a_invariant_closed;  // T - ct - 1
    std::optional<int> regularity;  // from SD and the defects
    std::optional<int> regularity_closed;  // max(T - ct, sat - 1)
};

// Least q with sd[k] = 0 for all recorded k >= q.
int sat_threshold(const std::vector<long>& sd_dims);

// Largest k with defect_k != 0. Degrees below zero have defect tau, so an
// all-zero table gives -1 when tau > 0 and nothing when tau = 0.
std::optional<int> a_invariant_from_defects(const std::vector<long>& defects, long tau);

// min{k : SD_{>k} = 0 and defect_{>k-1} = 0}
std::optional<int> regularity_from_definition(const std::vector<long>& sd_dims, std::optional<int> a_invariant);

// The checked accessors throw IdentityViolation when the definitional value
// and the closed form disagree.
int checked_a_invariant(const SaturationProfile& s);
int checked_regularity(const SaturationProfile& s);

// dim SD_k = dim SD_{T-k} for 0 <= k <= T.
bool gorenstein_symmetry_check(const std::vector<long>& sd_dims, int T);

// sd[k] <= sd[k+1] for 0 <= k < T/2.
bool unimodality_check(const std::vector<long>& sd_dims, int T);

// Fills the tables from Ĵ dims, J dims and the Milnor profile.
void finish_saturation_profile(SaturationProfile& s, const MilnorProfile& p);

template <class F>
SaturationProfile saturation_profile(const F& field, const HomogPoly& f, const MilnorProfile& p) {
    auto parts = partial_derivatives(f);
    std::span<const HomogPoly> gens(parts);
    const int nvars = f.nvars();
    const int kmax = p.milnor_dims.max_degree();
    SaturationProfile s;
    s.bound = saturation_bound(p);
    const std::size_t count = static_cast<std::size_t>(kmax) + 1;
    s.j_dims.resize(count);
    s.hatj_dims.resize(count);
    for (int k = 0; k <= kmax; ++k) s.j_dims[k] = monomial_count(nvars, k) - p.milnor_dims[k];

    const int below = std::min(s.bound, kmax + 1);
    std::optional<Subspace<F>> j_bound;
    if (below > 0) j_bound = ideal_slice(field, gens, s.bound).space;
    std::vector<char> contained(count, 1);
    parallel_for(static_cast<std::size_t>(below), [&](std::size_t idx) {
        const int k = static_cast<int>(idx);
        auto hat = saturation_below_bound(field, *j_bound, nvars, k, s.bound);
        s.hatj_dims[idx] = static_cast<long>(hat.dim());
        contained[idx] = hat.contains(ideal_slice(field, gens, k).space);
    });
    for (int k = below; k <= kmax; ++k) s.hatj_dims[k] = s.j_dims[k];
    for (char c : contained) s.j_contained = s.j_contained && c;
    finish_saturation_profile(s, p);
    return s;
}

}  // namespace jacsyz
