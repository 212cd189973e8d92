#include "jacsyz/saturation.hpp"

#include <algorithm>

namespace jacsyz {

int saturation_bound(const MilnorProfile& p) {
    if (!p.st) throw PreconditionViolated("saturation needs the stability threshold");
    if (p.smooth()) return *p.st;
    if (!p.ct) throw PreconditionViolated("saturation needs the coincidence threshold");
    return std::max(p.T - *p.ct, *p.st);
}

int sat_threshold(const std::vector<long>& sd_dims) {
    int q = static_cast<int>(sd_dims.size());
    while (q > 0 && sd_dims[q - 1] == 0) --q;
    return q;
}

std::optional<int> a_invariant_from_defects(const std::vector<long>& defects, long tau) {
    for (int k = static_cast<int>(defects.size()) - 1; k >= 0; --k)
        if (defects[k] != 0) return k;
    if (tau > 0) return -1;
    return std::nullopt;
}

std::optional<int> regularity_from_definition(const std::vector<long>& sd_dims, std::optional<int> a_invariant) {
    std::optional<int> reg;
    const int top_sd = sat_threshold(sd_dims) - 1;
    if (top_sd >= 0) reg = top_sd;
    if (a_invariant) reg = std::max(reg.value_or(*a_invariant + 1), *a_invariant + 1);
    return reg;
}

int checked_a_invariant(const SaturationProfile& s) {
    if (!s.a_invariant || s.a_invariant != s.a_invariant_closed)
        throw IdentityViolation("a-invariant from defects differs from T - ct - 1");
    return *s.a_invariant;
}

int checked_regularity(const SaturationProfile& s) {
    if (!s.regularity || s.regularity != s.regularity_closed)
        throw IdentityViolation("regularity from definition differs from max(T - ct, sat - 1)");
    return *s.regularity;
}

bool gorenstein_symmetry_check(const std::vector<long>& sd_dims, int T) {
    auto at = [&](int k) -> long { return k < static_cast<int>(sd_dims.size()) ? sd_dims[k] : 0; };
    for (int k = 0; k <= T; ++k)
        if (at(k) != at(T - k)) return false;
    return true;
}

bool unimodality_check(const std::vector<long>& sd_dims, int T) {
    auto at = [&](int k) -> long { return k < static_cast<int>(sd_dims.size()) ? sd_dims[k] : 0; };
    for (int k = 0; 2 * k < T; ++k)
        if (at(k) > at(k + 1)) return false;
    return true;
}

void finish_saturation_profile(SaturationProfile& s, const MilnorProfile& p) {
    const long tau = p.tau.value_or(0);
    const std::size_t count = s.hatj_dims.size();
    s.sd_dims.resize(count);
    s.defects.resize(count);
    const int nvars = p.n + 1;
    for (std::size_t k = 0; k < count; ++k) {
        s.sd_dims[k] = s.hatj_dims[k] - s.j_dims[k];
        s.defects[k] = tau - (monomial_count(nvars, static_cast<int>(k)) - s.hatj_dims[k]);
    }
    s.sat = sat_threshold(s.sd_dims);
    s.a_invariant = a_invariant_from_defects(s.defects, tau);
    s.regularity = regularity_from_definition(s.sd_dims, s.a_invariant);
    if (p.ct) {
        s.a_invariant_closed = p.T - *p.ct - 1;
        s.regularity_closed = std::max(p.T - *p.ct, s.sat - 1);
    }
}

}  // namespace jacsyz
