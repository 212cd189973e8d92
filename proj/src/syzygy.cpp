#include "jacsyz/syzygy.hpp"

#include <stdexcept>

namespace jacsyz {

long koszul_hn_dim(const MilnorProfile& p, int j) {
    const int k = j + p.d - p.n - 1;
    if (k < 0) return 0;
    if (k > p.milnor_dims.max_degree()) throw std::out_of_range("degree beyond kmax");
    return p.milnor_dims[k] - p.smooth_dims[k];
}

std::optional<int> minimal_degree_relation(const std::vector<long>& er, int T) {
    const int last = std::min(T, static_cast<int>(er.size()) - 1);
    for (int m = 0; m <= last; ++m)
        if (er[m] > 0) return m;
    return std::nullopt;
}

}  // namespace jacsyz
