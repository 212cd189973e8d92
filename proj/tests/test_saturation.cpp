#include <gtest/gtest.h>

#include "jacsyz/saturation.hpp"
#include "oracles.hpp"

using namespace jacsyz;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const char* kCusp = "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x+y+z)";

struct Computed {
    MilnorProfile milnor;
    SaturationProfile sat;
};

Computed compute(const char* text) {
    auto f = parse_poly(text, XYZ);
    RationalField q;
    auto p = milnor_profile(q, f, default_kmax(2, f.degree()));
    return {p, saturation_profile(q, f, p)};
}

// dim {g ∈ S_k : S_(N-k) g ⊆ J_N}, a different description of Ĵ_k valid for N
// large; built from all monomial multipliers instead of variable powers.
long colon_by_all_monomials(const HomogPoly& f, int k, int N) {
    RationalField q;
    auto parts = partial_derivatives(f);
    auto jn = ideal_slice(q, std::span<const HomogPoly>(parts), N).space;
    MonomialBasis src(3, k), mult(3, N - k), dst(3, N);
    Matrix<Rational> map(0, src.size(), Rational(0));
    std::vector<Rational> col(src.size());
    for (const auto& m : mult.monomials()) {
        // Columns: images of the basis monomials reduced modulo J_N.
        Matrix<Rational> block(dst.size(), src.size(), Rational(0));
        for (std::size_t j = 0; j < src.size(); ++j) {
            std::vector<Rational> v(dst.size(), Rational(0));
            v[dst.index_of(src[j] * m)] = 1;
            auto red = jn.reduce(std::span<const Rational>(v));
            for (std::size_t r = 0; r < dst.size(); ++r) block(r, j) = red[r];
        }
        for (std::size_t r = 0; r < dst.size(); ++r) map.append_row(block.row(r));
    }
    return static_cast<long>(src.size()) - static_cast<long>(oracle::rank(std::move(map)));
}

}  // namespace

TEST(Saturation, CuspidalQuartic) {
    auto [p, s] = compute(kCusp);
    EXPECT_EQ(s.bound, 4);
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(s.hatj_dims[k], 0);
    for (int m = 3; m < static_cast<int>(s.hatj_dims.size()); ++m) EXPECT_EQ(s.hatj_dims[m], oracle::binom(m + 2, 2) - 6);
    EXPECT_EQ(s.sd_dims[3], 1);
    for (int k = 0; k < static_cast<int>(s.sd_dims.size()); ++k)
        if (k != 3) EXPECT_EQ(s.sd_dims[k], 0);
    EXPECT_EQ(s.defects[0], 5);
    EXPECT_EQ(s.defects[1], 3);
    for (std::size_t k = 2; k < s.defects.size(); ++k) EXPECT_EQ(s.defects[k], 0);
    EXPECT_EQ(s.sat, 4);
    EXPECT_EQ(checked_a_invariant(s), 1);
    EXPECT_EQ(checked_regularity(s), 3);
    EXPECT_TRUE(s.j_contained);
}

TEST(Saturation, CompleteIntersectionIsMonomial) {
    // Ĵ = (xy, z^3) for x^2 y^2 + z^4.
    auto [p, s] = compute("x^2*y^2 + z^4");
    const std::vector<std::vector<int>> gens{{1, 1, 0}, {0, 0, 3}};
    for (int k = 0; k < static_cast<int>(s.hatj_dims.size()); ++k)
        EXPECT_EQ(s.hatj_dims[k], oracle::monomial_ideal_dim(3, gens, k)) << k;
    EXPECT_EQ((std::vector<long>(s.sd_dims.begin(), s.sd_dims.begin() + 7)), (std::vector<long>{0, 0, 1, 1, 1, 0, 0}));
    EXPECT_EQ(s.sat, 5);
    EXPECT_EQ(checked_regularity(s), 4);
}

TEST(Saturation, XyzIsSaturated) {
    auto [p, s] = compute("x*y*z");
    EXPECT_EQ(s.hatj_dims, s.j_dims);
    EXPECT_EQ(s.sat, 0);
    EXPECT_EQ(checked_a_invariant(s), 0);
    EXPECT_EQ(checked_regularity(s), 1);
}

TEST(Saturation, AgreesWithColonByAllMonomials) {
    for (const char* text : {kCusp, "x^2*y^2 + z^4", "x*(x^3 + y^3 + z^3)", "z*y^2 - x^3 - x^2*z"}) {
        auto f = parse_poly(text, XYZ);
        auto [p, s] = compute(text);
        const int N = s.bound + 2;
        for (int k = 0; k <= s.bound; ++k) EXPECT_EQ(s.hatj_dims[k], colon_by_all_monomials(f, k, N)) << text << " k=" << k;
    }
}

TEST(Saturation, SdSymmetricAndDefectsMonotone) {
    for (const char* text : {kCusp, "x*y*z", "x^2*y^2 + z^4", "x*(x^3 + y^3 + z^3)", "x*y^2 + z^3", "x^2*y^3 + z^5"}) {
        auto [p, s] = compute(text);
        EXPECT_TRUE(gorenstein_symmetry_check(s.sd_dims, p.T)) << text;
        EXPECT_TRUE(unimodality_check(s.sd_dims, p.T)) << text;
        for (std::size_t k = 1; k < s.defects.size(); ++k) EXPECT_LE(s.defects[k], s.defects[k - 1]);
        EXPECT_GE(s.defects.back(), 0);
        EXPECT_TRUE(s.j_contained);
    }
}

TEST(Saturation, FermatCubicTimesLine) {
    auto [p, s] = compute("x*(x^3 + y^3 + z^3)");
    EXPECT_EQ((std::vector<long>(s.sd_dims.begin(), s.sd_dims.begin() + 7)), (std::vector<long>{0, 1, 3, 4, 3, 1, 0}));
}

TEST(Saturation, SliceAtAndAboveBoundIsJ) {
    auto f = parse_poly(kCusp, XYZ);
    auto parts = partial_derivatives(f);
    std::span<const HomogPoly> gens(parts);
    RationalField q;
    EXPECT_EQ(saturation_slice(q, gens, 5, 4).space, ideal_slice(q, gens, 5).space);
    EXPECT_EQ(saturation_slice(q, gens, 3, 4).space.dim(), 4u);
    EXPECT_THROW(saturation_slice(q, gens, 3, -1), PreconditionViolated);
}

TEST(Saturation, SmoothInputSaturatesToEverything) {
    auto [p, s] = compute("x^4 + y^4 + z^4");
    EXPECT_EQ(s.bound, p.T + 1);
    for (int k = 0; k < s.bound; ++k) EXPECT_EQ(s.hatj_dims[k], oracle::binom(k + 2, 2));
    for (int k = 0; k <= p.T; ++k) EXPECT_EQ(s.sd_dims[k], p.milnor_dims[k]);
}

TEST(Saturation, DefinitionalHelpers) {
    EXPECT_EQ(sat_threshold({0, 0, 1, 0, 0}), 3);
    EXPECT_EQ(sat_threshold({0, 0, 0}), 0);
    EXPECT_EQ(a_invariant_from_defects({5, 3, 0}, 6), 1);
    EXPECT_EQ(a_invariant_from_defects({0, 0}, 2), -1);
    EXPECT_EQ(a_invariant_from_defects({0, 0}, 0), std::nullopt);
    EXPECT_EQ(regularity_from_definition({0, 0, 0, 1, 0}, 1), 3);
    EXPECT_EQ(regularity_from_definition({0, 0}, 0), 1);
    EXPECT_FALSE(gorenstein_symmetry_check({0, 1, 0, 0}, 3));
    EXPECT_FALSE(unimodality_check({0, 2, 1, 2, 0}, 4));
}

TEST(Saturation, CheckedAccessorsThrowOnDisagreement) {
    SaturationProfile s;
    s.a_invariant = 1;
    s.a_invariant_closed = 2;
    s.regularity = 3;
    s.regularity_closed = 3;
    EXPECT_THROW(checked_a_invariant(s), IdentityViolation);
    EXPECT_EQ(checked_regularity(s), 3);
}
