#pragma once

#include "pbern/rational.hpp"
#include "pbern/unipoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pbern {

// Polynomial in x whose coefficients are UniPoly in y (x-major layout).
// The highest stored x-coefficient is a nonzero UniPoly; the zero
// polynomial stores nothing and reports x_degree() -1.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> x_coeffs) : xc_(std::move(x_coeffs)) { trim(); }

    // px(x) * py(y) as a product term.
    static BiPoly term(const UniPoly& px, const UniPoly& py) {
        std::vector<UniPoly> xc;
        xc.reserve(static_cast<std::size_t>(px.degree() + 1));
        for (long i = 0; i <= px.degree(); ++i)
            xc.push_back(py * px.coeff(i));
        return BiPoly(std::move(xc));
    }

    static BiPoly from_x_poly(const UniPoly& px) { return term(px, UniPoly::constant(Rational(1))); }
    static BiPoly from_y_poly(UniPoly py) { return BiPoly({std::move(py)}); }

    bool is_zero() const { return xc_.empty(); }
    int x_degree() const { return static_cast<int>(xc_.size()) - 1; }

    const std::vector<UniPoly>& x_coeffs() const { return xc_; }

    UniPoly x_coeff(long k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= xc_.size())
            return UniPoly();
        return xc_[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly& operator+=(const BiPoly& o) {
        if (xc_.size() < o.xc_.size())
            xc_.resize(o.xc_.size());
        for (std::size_t i = 0; i < o.xc_.size(); ++i)
            xc_[i] += o.xc_[i];
        trim();
        return *this;
    }

    BiPoly& operator-=(const BiPoly& o) {
        if (xc_.size() < o.xc_.size())
            xc_.resize(o.xc_.size());
        for (std::size_t i = 0; i < o.xc_.size(); ++i)
            xc_[i] -= o.xc_[i];
        trim();
        return *this;
    }

    BiPoly& operator*=(const Rational& c) {
        for (auto& q : xc_)
            q *= c;
        trim();
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }

    // Multiply every x-coefficient by a polynomial in y.
    BiPoly mul_y(const UniPoly& py) const {
        std::vector<UniPoly> xc;
        xc.reserve(xc_.size());
        for (const auto& q : xc_)
            xc.push_back(q * py);
        return BiPoly(std::move(xc));
    }

    // q(x + c; y), expanded by binomial shift of the x powers.
    BiPoly shift_x(const Rational& c) const {
        if (xc_.empty() || c.is_zero())
            return *this;
        std::vector<UniPoly> out(xc_.size());
        for (std::size_t i = 0; i < xc_.size(); ++i) {
            Rational cp = 1; // c^(i-j), built from j = i downward
            for (std::size_t j = i + 1; j-- > 0;) {
                out[j] += xc_[i] * (Rational(binomial(static_cast<long>(i), static_cast<long>(j))) * cp);
                cp *= c;
            }
        }
        return BiPoly(std::move(out));
    }

    // Substitute x = v; the result is a polynomial in y.
    UniPoly at_x(const Rational& v) const {
        UniPoly r;
        for (std::size_t i = xc_.size(); i-- > 0;)
            r = r * v + xc_[i];
        return r;
    }

    // Substitute y = v; the result is a polynomial in x.
    UniPoly at_y(const Rational& v) const {
        std::vector<Rational> cs;
        cs.reserve(xc_.size());
        for (const auto& q : xc_)
            cs.push_back(q(v));
        return UniPoly(std::move(cs));
    }

    // Wire form: array of UniPoly wire forms, ascending power of x.
    std::vector<std::vector<std::string>> wire() const {
        std::vector<std::vector<std::string>> out;
        out.reserve(xc_.size());
        for (const auto& q : xc_)
            out.push_back(q.wire());
        return out;
    }

    static BiPoly from_wire(const std::vector<std::vector<std::string>>& rows) {
        std::vector<UniPoly> xc;
        xc.reserve(rows.size());
        for (const auto& row : rows)
            xc.push_back(UniPoly::from_wire(row));
        return BiPoly(std::move(xc));
    }

    // Descending x powers; non-constant y coefficients are parenthesized,
    // e.g. "x^2 + (2 y) x + (2 y^2 + y)".
    std::string pretty(char xvar = 'x', char yvar = 'y') const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = xc_.size(); i-- > 0;) {
            const UniPoly& q = xc_[i];
            if (q.is_zero())
                continue;
            std::string coeff;
            bool neg = false;
            if (q.degree() == 0) {
                Rational c = q.coeff(0);
                neg = c < 0;
                Rational mag = neg ? Rational(-c) : c;
                if (mag != 1 || i == 0)
                    coeff = to_string(mag);
            } else {
                coeff = "(" + q.pretty(yvar) + ")";
            }
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            out += coeff;
            if (i > 0) {
                if (!coeff.empty())
                    out += ' ';
                out += xvar;
                if (i > 1)
                    out += '^' + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!xc_.empty() && xc_.back().is_zero())
            xc_.pop_back();
    }

    std::vector<UniPoly> xc_;
};

} // namespace pbern
