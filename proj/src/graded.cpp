#include "jacsyz/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacsyz {

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long monomial_count(int nvars, int k) {
    if (k < 0 || nvars <= 0) return 0;
    return binomial(nvars - 1 + k, nvars - 1);
}

namespace {

void enumerate(int var, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
    const int last = static_cast<int>(exps.size()) - 1;
    if (var == last) {
        exps[var] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[var] = e;
        enumerate(var + 1, remaining - e, exps, out);
    }
    exps[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars <= 0) throw std::invalid_argument("monomial basis needs at least one variable");
    if (degree < 0) return;
    monomials_.reserve(static_cast<std::size_t>(monomial_count(nvars, degree)));
    std::vector<int> exps(nvars, 0);
    enumerate(0, degree, exps, monomials_);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    if (it == monomials_.end() || *it != m) throw std::out_of_range("monomial not in basis");
    return static_cast<std::size_t>(it - monomials_.begin());
}

MonomialBasis monomial_basis(int nvars, int k) { return MonomialBasis(nvars, k); }

HilbertFunction make_hilbert_function(std::vector<long> dims, int window) {
    HilbertFunction h;
    h.dims = std::move(dims);
    const int size = static_cast<int>(h.dims.size());
    if (window <= 0 || size < window) return h;
    const long last = h.dims.back();
    for (int k = size - window; k < size; ++k)
        if (h.dims[k] != last) return h;
    int from = size - 1;
    while (from > 0 && h.dims[from - 1] == last) --from;
    h.stable_value = last;
    h.stable_from = from;
    return h;
}

}  // namespace jacsyz
