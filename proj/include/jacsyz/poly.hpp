#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jacsyz/field.hpp"

namespace jacsyz {

// Exponent vector. Monomials of equal degree compare lexicographically on
// the exponent sequence, so x^2 > x*y > y^2 for variables (x, y).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int i, int power = 1) {
        std::vector<int> e(nvars, 0);
        e[i] = power;
        return Monomial(std::move(e));
    }

    int nvars() const noexcept { return static_cast<int>(exps_.size()); }
    int degree() const noexcept;
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const noexcept { return exps_; }

    Monomial operator*(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exps_;
};

// Sparse homogeneous polynomial with rational coefficients. Terms never hold
// a zero coefficient; the zero polynomial has no terms but keeps its
// declared degree (partial derivatives may vanish).
class HomogPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {}
    // Throws NotHomogeneous / std::invalid_argument on inconsistent terms.
    HomogPoly(int nvars, int degree, Terms terms);

    int nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;

    HomogPoly operator+(const HomogPoly& o) const;
    HomogPoly operator-(const HomogPoly& o) const;
    HomogPoly operator*(const HomogPoly& o) const;
    HomogPoly operator*(const Monomial& m) const;
    HomogPoly scaled(const Rational& c) const;

    // Reorders variables: result variable i is input variable perm[i].
    HomogPoly permuted(const std::vector<int>& perm) const;

    bool operator==(const HomogPoly& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    int degree_;
    Terms terms_;
};

// Canonical text: terms in decreasing monomial order, explicit '*' and '^',
// coefficient 1 omitted. Re-parsing the output yields the same polynomial.
std::string to_string(const HomogPoly& f, const std::vector<std::string>& vars);
std::string to_string(const Monomial& m, const std::vector<std::string>& vars);

// Expands `text` over the given variables. Grammar:
//   expression ::= term (('+'|'-') term)*
//   term       ::= factor ('*' factor)*
//   factor     ::= integer ['/' integer] | variable ['^' integer]
//                | '(' expression ')' | '-' factor
HomogPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

// "x,y,z" -> {"x","y","z"}; rejects empty, duplicate or non-identifier names.
std::vector<std::string> parse_vars(std::string_view list);

// (f_0, ..., f_n); a zero derivative is returned as the zero polynomial of degree d-1.
std::vector<HomogPoly> partial_derivatives(const HomogPoly& f);

// Σ x_i f_i == d f.
bool euler_check(const HomogPoly& f);

}  // namespace jacsyz
