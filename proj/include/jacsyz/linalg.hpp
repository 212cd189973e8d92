#pragma once

// Exact row reduction, rank, kernels and subspace algebra.
//
// Over a prime field these are plain Gauss-Jordan. Over the rationals the
// non-template overloads declared below take precedence; they clear
// denominators row by row and run fraction-free (Bareiss) elimination on
// integers, dividing out the pivot content only at the end.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "jacsyz/errors.hpp"
#include "jacsyz/field.hpp"
#include "jacsyz/matrix.hpp"

namespace jacsyz {

template <class F>
using MatrixOf = Matrix<typename F::value_type>;

template <class F>
using VectorOf = std::vector<typename F::value_type>;

// Reduced row-echelon form. `form` keeps only the nonzero rows.
template <class F>
struct RowEchelon {
    MatrixOf<F> form;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

template <class F>
RowEchelon<F> rref(const F& field, MatrixOf<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field.is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const auto scale = field.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = field.mul(m(r, j), scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!field.is_zero(m(r, j))) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& field, MatrixOf<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field.is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const auto scale = field.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = field.mul(m(r, j), scale);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (field.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!field.is_zero(m(r, j))) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
            }
        }
        ++r;
    }
    return r;
}

RowEchelon<RationalField> rref(const RationalField& field, Matrix<Rational> m);
std::size_t rank(const RationalField& field, Matrix<Rational> m);

// Fraction-free forward elimination on an integer matrix; returns the rank.
std::size_t bareiss_rank(Matrix<Integer> m);

// Linear subspace of F^ambient held as a canonical RREF basis (one row per
// basis vector, pivots equal to one, pivot columns otherwise zero). Two
// spanning sets of the same subspace give identical objects.
template <class F>
class Subspace {
public:
    using value_type = typename F::value_type;

    Subspace(F field, std::size_t ambient)
        : field_(std::move(field)), ambient_(ambient), basis_(0, ambient, field_.zero()) {}

    static Subspace span(F field, MatrixOf<F> generators) {
        const std::size_t ambient = generators.cols();
        Subspace s(field, ambient);
        if (generators.rows() == 0) return s;
        auto e = rref(s.field_, std::move(generators));
        s.basis_ = std::move(e.form);
        s.pivots_ = std::move(e.pivots);
        if (s.basis_.rows() == 0) s.basis_ = MatrixOf<F>(0, ambient, s.field_.zero());
        return s;
    }

    const F& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    const MatrixOf<F>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
    VectorOf<F> reduce(std::span<const value_type> v) const {
        if (v.size() != ambient_) throw AmbientMismatch(ambient_, v.size());
        VectorOf<F> out(v.begin(), v.end());
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const auto coeff = out[pivots_[i]];
            if (field_.is_zero(coeff)) continue;
            auto b = basis_.row(i);
            for (std::size_t j = 0; j < ambient_; ++j) {
                if (!field_.is_zero(b[j])) out[j] = field_.sub(out[j], field_.mul(coeff, b[j]));
            }
        }
        return out;
    }

    bool contains(std::span<const value_type> v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [&](const value_type& x) { return field_.is_zero(x); });
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw AmbientMismatch(ambient_, other.ambient_);
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

private:
    F field_;
    std::size_t ambient_;
    MatrixOf<F> basis_;
    std::vector<std::size_t> pivots_;
};

// Null space {x : m x = 0} as a subspace of F^cols.
template <class F>
Subspace<F> kernel(const F& field, MatrixOf<F> m) {
    const std::size_t cols = m.cols();
    auto e = rref(field, std::move(m));
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    MatrixOf<F> gens(0, cols, field.zero());
    VectorOf<F> v(cols, field.zero());
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = field.neg(e.form(i, free));
        gens.append_row(v);
    }
    return Subspace<F>::span(field, std::move(gens));
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch(a.ambient_dim(), b.ambient_dim());
    MatrixOf<F> stacked(0, a.ambient_dim(), a.field().zero());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.append_row(a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
    return Subspace<F>::span(a.field(), std::move(stacked));
}

// a ∩ b from the left kernel of the stacked bases: u·A + v·B = 0 gives u·A ∈ a ∩ b.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch(a.ambient_dim(), b.ambient_dim());
    const F& field = a.field();
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace<F>(field, n);
    MatrixOf<F> stacked(0, n, field.zero());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.append_row(a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
    auto left = kernel(field, stacked.transpose());
    MatrixOf<F> gens(0, n, field.zero());
    VectorOf<F> w(n);
    for (std::size_t k = 0; k < left.dim(); ++k) {
        auto u = left.basis().row(k);
        std::fill(w.begin(), w.end(), field.zero());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (field.is_zero(u[i])) continue;
            auto row = a.basis().row(i);
            for (std::size_t j = 0; j < n; ++j) w[j] = field.add(w[j], field.mul(u[i], row[j]));
        }
        gens.append_row(w);
    }
    return Subspace<F>::span(field, std::move(gens));
}

template <class F>
bool subspace_contains(const Subspace<F>& a, std::span<const typename F::value_type> v) {
    return a.contains(v);
}

}  // namespace jacsyz
