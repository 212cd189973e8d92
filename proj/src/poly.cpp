#include "jacsyz/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace jacsyz {

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.exps_.size() != exps_.size()) throw std::invalid_argument("monomials over different variable counts");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

HomogPoly::HomogPoly(int nvars, int degree, Terms terms) : nvars_(nvars), degree_(degree) {
    for (auto& [m, c] : terms) {
        if (m.nvars() != nvars) throw std::invalid_argument("monomial has wrong number of variables");
        if (m.degree() != degree)
            throw std::invalid_argument("monomial of degree " + std::to_string(m.degree()) +
                                        " in polynomial of degree " + std::to_string(degree));
        if (sgn(c) != 0) terms_.emplace(m, c);
    }
}

Rational HomogPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_) throw std::invalid_argument("adding incompatible polynomials");
    HomogPoly out = *this;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) out.terms_.erase(it);
        }
    }
    return out;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + o.scaled(Rational(-1)); }

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("multiplying polynomials over different variables");
    HomogPoly out(nvars_, degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            auto [it, inserted] = out.terms_.emplace(m1 * m2, c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    }
    std::erase_if(out.terms_, [](const auto& t) { return sgn(t.second) == 0; });
    return out;
}

HomogPoly HomogPoly::operator*(const Monomial& m) const {
    HomogPoly out(nvars_, degree_ + m.degree());
    for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, c);
    return out;
}

HomogPoly HomogPoly::scaled(const Rational& c) const {
    HomogPoly out(nvars_, degree_);
    if (sgn(c) == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

HomogPoly HomogPoly::permuted(const std::vector<int>& perm) const {
    HomogPoly out(nvars_, degree_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = m[perm[i]];
        out.terms_.emplace(Monomial(std::move(e)), c);
    }
    return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.at(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const HomogPoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        Rational a = abs(c);
        const bool constant = m.degree() == 0;
        if (a != 1 || constant) {
            out += a.get_str();
            if (!constant) out += '*';
        }
        if (!constant) out += to_string(m, vars);
    }
    return out;
}

std::vector<HomogPoly> partial_derivatives(const HomogPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("partial derivatives need degree >= 1");
    std::vector<HomogPoly> out;
    out.reserve(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        HomogPoly::Terms terms;
        for (const auto& [m, c] : f.terms()) {
            if (m[i] == 0) continue;
            std::vector<int> e = m.exponents();
            Rational coeff = c * e[i];
            --e[i];
            terms.emplace(Monomial(std::move(e)), coeff);
        }
        out.emplace_back(f.nvars(), f.degree() - 1, std::move(terms));
    }
    return out;
}

bool euler_check(const HomogPoly& f) {
    if (f.degree() == 0) return true;
    auto parts = partial_derivatives(f);
    HomogPoly sum(f.nvars(), f.degree());
    for (int i = 0; i < f.nvars(); ++i) sum = sum + parts[i] * Monomial::variable(f.nvars(), i);
    return sum == f.scaled(Rational(f.degree()));
}

}  // namespace jacsyz
