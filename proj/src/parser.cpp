#include <cctype>
#include <set>

#include "jacsyz/errors.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

namespace {

constexpr int kMaxExponent = 10000;

// Not necessarily homogeneous; keyed by exponent vector.
using SparsePoly = std::map<std::vector<int>, Rational>;

void add_into(SparsePoly& acc, const SparsePoly& p, int sign) {
    for (const auto& [e, c] : p) {
        auto [it, inserted] = acc.emplace(e, sign > 0 ? c : Rational(-c));
        if (!inserted) {
            if (sign > 0)
                it->second += c;
            else
                it->second -= c;
            if (sgn(it->second) == 0) acc.erase(it);
        }
    }
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    SparsePoly parse() {
        SparsePoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    SparsePoly expression() {
        SparsePoly acc = term();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                int sign = text_[pos_] == '+' ? 1 : -1;
                ++pos_;
                add_into(acc, term(), sign);
            } else {
                return acc;
            }
        }
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                acc = multiply(acc, factor());
            } else {
                return acc;
            }
        }
    }

    SparsePoly factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '-') {
            ++pos_;
            SparsePoly p = factor();
            for (auto& [e, c] : p) c = -c;
            return p;
        }
        if (ch == '(') {
            ++pos_;
            SparsePoly p = expression();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num = integer();
            Rational value(num);
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                Integer den = integer();
                if (den == 0) fail_at("zero denominator", at);
                value = Rational(num, den);
                value.canonicalize();
            }
            return constant(value);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t at = pos_;
            std::string name = identifier();
            int index = -1;
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) index = static_cast<int>(i);
            if (index < 0) fail_at("unknown variable '" + name + "'", at);
            int power = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                std::size_t exp_at = pos_;
                Integer e = integer();
                if (e > kMaxExponent) fail_at("exponent too large", exp_at);
                power = static_cast<int>(e.get_si());
            }
            std::vector<int> exps(vars_.size(), 0);
            exps[index] = power;
            return SparsePoly{{std::move(exps), Rational(1)}};
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    SparsePoly constant(const Rational& c) const {
        if (sgn(c) == 0) return {};
        return SparsePoly{{std::vector<int>(vars_.size(), 0), c}};
    }

    Integer integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw SyntaxError(msg, at); }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

}  // namespace

std::vector<std::string> parse_vars(std::string_view list) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = list.find(',', start);
        std::string_view piece = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        if (!is_identifier(piece)) throw Error("invalid variable name '" + std::string(piece) + "'");
        out.emplace_back(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::set<std::string> seen(out.begin(), out.end());
    if (seen.size() != out.size()) throw Error("duplicate variable names");
    return out;
}

HomogPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    if (vars.empty()) throw Error("variable list is empty");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw Error("duplicate variable names");
    for (const auto& v : vars)
        if (!is_identifier(v)) throw Error("invalid variable name '" + v + "'");

    SparsePoly p = Parser(text, vars).parse();
    if (p.empty()) throw ZeroPolynomial();

    const int nvars = static_cast<int>(vars.size());
    HomogPoly::Terms terms;
    const Monomial* first = nullptr;
    int degree = -1;
    for (const auto& [e, c] : p) {
        auto [it, inserted] = terms.emplace(Monomial(e), c);
        if (degree < 0) {
            degree = it->first.degree();
            first = &it->first;
        } else if (it->first.degree() != degree) {
            throw NotHomogeneous(to_string(*first, vars), to_string(it->first, vars));
        }
    }
    return HomogPoly(nvars, degree, std::move(terms));
}

}  // namespace jacsyz
