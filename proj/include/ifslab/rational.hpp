#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "ifslab/errors.hpp"

namespace ifslab {

// Exact rational arithmetic is GMP's mpq, canonicalized on construction.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rational rat_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    // base is canonical, so num^e / den^e is already canonical
    return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// log of a positive rational, accurate even when numerator/denominator do
// not fit a double: log(n/d) = (log2(n) - log2(d)) * ln 2 with log2 taken
// from the mantissa/exponent decomposition.
inline double log_rational(const Rational& q) {
    if (sgn(q) <= 0) throw ValidationError("log of non-positive rational");
    signed long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, mpq_numref(q.get_mpq_t()));
    double md = mpz_get_d_2exp(&ed, mpq_denref(q.get_mpq_t()));
    double log2q = (std::log2(mn) + static_cast<double>(en)) -
                   (std::log2(md) + static_cast<double>(ed));
    return log2q * M_LN2;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Decimal rendering, fixed at `sig` significant digits.
inline std::string decimal_string(const Rational& q, int sig = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, to_double(q));
    return buf;
}

// Parses "a/b", an integer, or a decimal literal ("0.35", "-1.2e-3" is not
// supported; exponents never occur in configs) into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ValidationError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ValidationError("bad rational literal '" + s + "'");
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw DivisionByZero("rational literal '" + s + "' has zero denominator");
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ValidationError("bad integer literal '" + s + "'");
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || frac_len == 0)
        throw ValidationError("bad decimal literal '" + s + "'");
    Rational num;
    if (mpq_set_str(num.get_mpq_t(), digits.c_str(), 10) != 0)
        throw ValidationError("bad decimal literal '" + s + "'");
    Rational den(1);
    mpz_ui_pow_ui(mpq_numref(den.get_mpq_t()), 10, frac_len);
    Rational q = num / den;
    q.canonicalize();
    return q;
}

} // namespace ifslab
