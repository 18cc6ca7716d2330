#pragma once

#include "pbern/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pbern {

// Dense univariate polynomial over Rational, coefficients stored in
// ascending degree. The zero polynomial stores no coefficients; its
// degree is the sentinel -1, never 0. The highest stored coefficient is
// always nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static UniPoly constant(Rational c) {
        UniPoly p;
        if (!c.is_zero())
            p.coeffs_.push_back(std::move(c));
        return p;
    }

    // c * x^k
    static UniPoly monomial(long k, Rational c = Rational(1)) {
        UniPoly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(long k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size())
            return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly& operator+=(const UniPoly& o) {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_)
            a *= c;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

    friend UniPoly operator-(UniPoly a) {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        UniPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim(); // leading product of nonzero rationals is nonzero, but keep canonical anyway
        return r;
    }

    UniPoly pow(long e) const {
        if (e < 0)
            throw std::domain_error("UniPoly::pow: negative exponent");
        UniPoly r = constant(Rational(1));
        for (long i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    // Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            r = r * x + coeffs_[i];
        return r;
    }

    UniPoly derivative() const {
        UniPoly r;
        if (coeffs_.size() <= 1)
            return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        r.trim();
        return r;
    }

    // Antiderivative with zero constant term.
    UniPoly antiderivative() const {
        UniPoly r;
        if (is_zero())
            return r;
        r.coeffs_.assign(coeffs_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
        r.trim();
        return r;
    }

    // Exact definite integral over [lo, hi]; antisymmetric under bound swap.
    Rational integral(const Rational& lo, const Rational& hi) const {
        UniPoly f = antiderivative();
        return f(hi) - f(lo);
    }

    // p(a*x + b), expanded exactly (Horner in the affine argument).
    UniPoly compose_affine(const Rational& a, const Rational& b) const {
        UniPoly arg({b, a});
        UniPoly r;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            r = r * arg + constant(coeffs_[i]);
        return r;
    }

    // Wire form: array of canonical rational strings, ascending degree.
    // The zero polynomial is the empty array.
    std::vector<std::string> wire() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(to_string(c));
        return out;
    }

    static UniPoly from_wire(const std::vector<std::string>& strings) {
        std::vector<Rational> cs;
        cs.reserve(strings.size());
        for (const auto& s : strings)
            cs.push_back(parse_rational(s));
        return UniPoly(std::move(cs));
    }

    // Human-readable descending-degree form, e.g. "x^2 - 2/3 x".
    std::string pretty(char var = 'x') const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero())
                continue;
            const bool neg = c < 0;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            Rational mag = neg ? Rational(-c) : c;
            const bool unit = (mag == 1);
            if (!unit || i == 0)
                out += to_string(mag);
            if (i > 0) {
                if (!unit)
                    out += ' ';
                out += var;
                if (i > 1)
                    out += '^' + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace pbern
