#pragma once

// Graded Milnor algebra M(f) = S/J_f: dimensions, the smooth reference
// series, total Tjurina number and the coincidence/stability thresholds.

#include <optional>
#include <string>
#include <vector>

#include "jacsyz/graded.hpp"

namespace jacsyz {

// T = (n+1)(d-2), top degree of the Milnor algebra of a smooth hypersurface.
inline int top_degree(int n, int d) { return (n + 1) * (d - 2); }

// Default truncation degree: T + 2n + 4.
inline int default_kmax(int n, int d) { return top_degree(n, d) + 2 * n + 4; }

// Smallest admissible truncation degree: the isolatedness window ends at T + n + 2.
inline int min_kmax(int n, int d) { return top_degree(n, d) + n + 2; }

// Coefficient of t^k in (1 - t^(d-1))^(n+1) / (1 - t)^(n+1), by inclusion-exclusion.
long smooth_series_coeff(int n, int d, int k);

struct IsolatedCheck {
    bool isolated = false;
    std::string method = "heuristic-window";
};

struct MilnorProfile {
    int n = 0;
    int d = 0;
    int T = 0;
    HilbertFunction milnor_dims;
    HilbertFunction smooth_dims;
    std::optional<long> tau;
    std::optional<int> st;
    std::optional<int> ct;  // absent for smooth input
    IsolatedCheck isolated;

    bool smooth() const noexcept { return tau && *tau == 0; }
};

template <class F>
long milnor_dim(const F& field, const HomogPoly& f, int k) {
    auto parts = partial_derivatives(f);
    return monomial_count(f.nvars(), k) - ideal_dim(field, std::span<const HomogPoly>(parts), k);
}

// Builds the profile from already computed dims[0..kmax].
MilnorProfile make_milnor_profile(int n, int d, std::vector<long> milnor_dims);

template <class F>
MilnorProfile milnor_profile(const F& field, const HomogPoly& f, int kmax) {
    auto parts = partial_derivatives(f);
    auto h = hilbert_function_of_quotient(field, std::span<const HomogPoly>(parts), f.nvars(), kmax);
    return make_milnor_profile(f.nvars() - 1, f.degree(), std::move(h.dims));
}

// Constant dims on [T+1, T+n+2]; a smooth input (all zero there) counts as isolated.
IsolatedCheck isolated_check(const MilnorProfile& p);

// Stable value of the Milnor dimensions. Throws NotStabilized.
long total_tjurina(const MilnorProfile& p);

// Least q with dims[k] = tau for every recorded k >= q. Throws NotStabilized.
int stability_threshold(const MilnorProfile& p);

// Largest q with dims[k] equal to the smooth series for all k <= q. Throws
// SmoothInput when the two agree on every recorded degree.
int coincidence_threshold(const MilnorProfile& p);

}  // namespace jacsyz
