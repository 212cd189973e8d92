#include "jacsyz/linalg.hpp"

namespace jacsyz {

namespace {

// Prime used to certify full rank cheaply: rank over GF(p) never exceeds the
// rank over Q, so a full-rank residue matrix settles the rational rank.
constexpr std::uint32_t kCertificatePrime = 2147483629u;

Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
    Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
    Integer l;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        l = 1;
        for (const auto& q : m.row(r)) {
            if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        auto src = m.row(r);
        auto dst = out.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(src[c]) == 0) continue;
            dst[c] = src[c].get_num() * (l / src[c].get_den());
        }
    }
    return out;
}

// Among rows [from, rows) with a nonzero entry in column c, the one whose
// entry has the fewest limbs. Returns rows when the column is empty.
std::size_t choose_pivot(const Matrix<Integer>& m, std::size_t from, std::size_t c) {
    std::size_t best = m.rows();
    std::size_t best_size = 0;
    for (std::size_t i = from; i < m.rows(); ++i) {
        const auto& v = m(i, c);
        if (sgn(v) == 0) continue;
        std::size_t s = mpz_size(v.get_mpz_t());
        if (best == m.rows() || s < best_size) {
            best = i;
            best_size = s;
            if (s <= 1) break;
        }
    }
    return best;
}

// One Bareiss update of row i against pivot row r at column c:
//   a[i][j] <- (p * a[i][j] - a[i][c] * a[r][j]) / prev
void bareiss_update(Matrix<Integer>& m, std::size_t i, std::size_t r, std::size_t c, std::size_t from_col,
                    const Integer& prev, Integer& tmp) {
    const Integer& p = m(r, c);
    const Integer factor = m(i, c);
    const bool unit_prev = prev == 1;
    auto row_i = m.row(i);
    auto row_r = m.row(r);
    for (std::size_t j = from_col; j < m.cols(); ++j) {
        if (sgn(factor) == 0) {
            if (sgn(row_i[j]) == 0) continue;
            mpz_mul(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), p.get_mpz_t());
        } else {
            mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), row_r[j].get_mpz_t());
            mpz_mul(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), p.get_mpz_t());
            mpz_sub(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), tmp.get_mpz_t());
        }
        if (!unit_prev && sgn(row_i[j]) != 0)
            mpz_divexact(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), prev.get_mpz_t());
    }
}

bool residues_defined(const Matrix<Rational>& m, const PrimeField& field) {
    for (const auto& q : m.data()) {
        if (field.from_integer(q.get_den()) == 0) return false;
    }
    return true;
}

}  // namespace

std::size_t bareiss_rank(Matrix<Integer> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer prev(1), tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = choose_pivot(m, r, c);
        if (p == rows) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows; ++i) bareiss_update(m, i, r, c, c, prev, tmp);
        prev = m(r, c);
        ++r;
    }
    return r;
}

RowEchelon<RationalField> rref(const RationalField&, Matrix<Rational> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix<Integer> a = clear_denominators(m);
    Integer prev(1), tmp;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = choose_pivot(a, r, c);
        if (p == rows) continue;
        a.swap_rows(p, r);
        // Rows above the pivot are updated too (fraction-free Gauss-Jordan);
        // every entry stays an integer minor, so the division is exact.
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r) bareiss_update(a, i, r, c, 0, prev, tmp);
        }
        prev = a(r, c);
        pivots.push_back(c);
        ++r;
    }
    Matrix<Rational> out(r, cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& d = a(i, pivots[i]);
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(a(i, j)) == 0) continue;
            out(i, j) = Rational(a(i, j), d);
            out(i, j).canonicalize();
        }
    }
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const RationalField&, Matrix<Rational> m) {
    if (m.empty()) return 0;
    const PrimeField gf(kCertificatePrime);
    if (residues_defined(m, gf)) {
        Matrix<std::uint32_t> reduced(m.rows(), m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = gf.from_rational(m(r, c));
        std::size_t modular = rank(gf, std::move(reduced));
        if (modular == std::min(m.rows(), m.cols())) return modular;
    }
    return bareiss_rank(clear_denominators(m));
}

}  // namespace jacsyz
