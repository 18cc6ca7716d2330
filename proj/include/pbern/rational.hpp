#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pbern {

// Exact scalars. Every computation in this library is carried out over
// arbitrary-precision rationals; no floating point is used anywhere.
// Rational is kept in canonical reduced form (gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1) by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Constructs num/den, normalizing the sign into the numerator.
inline Rational make_rational(Int num, Int den) {
    if (den.is_zero())
        throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Canonical text form: "num/den" with "/den" omitted when den == 1,
// e.g. "-1/2", "3", "0".
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

// Parses the canonical text form: -?digits[/digits]. Rejects anything
// else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("parse_rational: malformed rational '" +
                                     std::string(text) + "'");
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.empty())
            throw bad();
    }
    const auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    if (!digits_ok(num, true) || (!den.empty() && !digits_ok(den, false)))
        throw bad();
    Int n(std::string(num));
    Int d = den.empty() ? Int(1) : Int(std::string(den));
    if (d.is_zero())
        throw bad();
    return Rational(std::move(n), std::move(d));
}

inline Int factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// C(n, k), exact; 0 outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

// base^e with the convention 0^0 = 1.
inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// base^e for possibly negative e (base must be nonzero when e < 0).
inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base.is_zero())
            throw std::domain_error("rat_pow: zero base with negative exponent");
        Rational p = rat_pow(base, -e);
        return Rational(1) / p;
    }
    Rational r = 1, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1)
            r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Rational alternating_sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace pbern
