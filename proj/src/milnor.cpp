#include "jacsyz/milnor.hpp"

namespace jacsyz {

long smooth_series_coeff(int n, int d, int k) {
    if (k < 0 || d < 2) return 0;
    long total = 0;
    for (int j = 0; j <= n + 1; ++j) {
        const long rest = static_cast<long>(k) - static_cast<long>(j) * (d - 1);
        if (rest < 0) break;
        const long term = binomial(n + 1, j) * binomial(n + rest, n);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

IsolatedCheck isolated_check(const MilnorProfile& p) {
    IsolatedCheck out;
    const int from = p.T + 1;
    const int to = p.T + p.n + 2;
    if (from < 0 || to > p.milnor_dims.max_degree()) return out;
    const long v = p.milnor_dims[from];
    out.isolated = true;
    for (int k = from; k <= to; ++k) {
        if (p.milnor_dims[k] != v) {
            out.isolated = false;
            break;
        }
    }
    return out;
}

MilnorProfile make_milnor_profile(int n, int d, std::vector<long> milnor_dims) {
    MilnorProfile p;
    p.n = n;
    p.d = d;
    p.T = top_degree(n, d);
    const int window = n + 2;
    const int kmax = static_cast<int>(milnor_dims.size()) - 1;
    p.milnor_dims = make_hilbert_function(std::move(milnor_dims), window);
    std::vector<long> smooth(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) smooth[k] = smooth_series_coeff(n, d, k);
    p.smooth_dims = make_hilbert_function(std::move(smooth), window);
    p.isolated = isolated_check(p);
    if (p.isolated.isolated && p.milnor_dims.stable_value) {
        p.tau = *p.milnor_dims.stable_value;
        p.st = *p.milnor_dims.stable_from;
        if (*p.tau != 0) p.ct = coincidence_threshold(p);
    }
    return p;
}

long total_tjurina(const MilnorProfile& p) {
    if (!p.isolated.isolated || !p.milnor_dims.stable_value) throw NotStabilized();
    return *p.milnor_dims.stable_value;
}

int stability_threshold(const MilnorProfile& p) {
    if (!p.isolated.isolated || !p.milnor_dims.stable_from) throw NotStabilized();
    return *p.milnor_dims.stable_from;
}

int coincidence_threshold(const MilnorProfile& p) {
    const int kmax = p.milnor_dims.max_degree();
    for (int k = 0; k <= kmax; ++k) {
        if (p.milnor_dims[k] != p.smooth_dims[k]) return k - 1;
    }
    throw SmoothInput();
}

}  // namespace jacsyz
