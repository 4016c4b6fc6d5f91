#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ifslab/rational.hpp"

namespace ifslab {

// Closed interval with exact rational endpoints. Used for certified sign
// determination: polynomial evaluation over QIntervals encloses the true
// value because +, -, * are exactly representable.
struct QInterval {
    Rational lo, hi;

    static QInterval point(const Rational& v) { return {v, v}; }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    QInterval scaled(const Rational& c) const {
        return sgn(c) >= 0 ? QInterval{lo * c, hi * c} : QInterval{hi * c, lo * c};
    }
    QInterval pow(unsigned e) const {
        QInterval r = point(Rational(1));
        QInterval b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

// Exponent vector; size equals the number of generators of the owning
// context. Term order is graded lexicographic by declaration order.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// true if a > b in graded lex
inline bool mono_greater(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_greater(a, b); }
};

// Multivariate polynomial over Q. Terms are kept sorted descending in
// graded lex with no zero coefficients, so representation is canonical.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonoGreater>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        if (sgn(c) != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t idx, unsigned e = 1) {
        Polynomial p(nvars);
        Monomial m(nvars, 0);
        m[idx] = e;
        p.terms_[m] = Rational(1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }
    bool uses_var(std::size_t var) const {
        for (auto& [m, c] : terms_)
            if (m[var] > 0) return true;
        return false;
    }
    unsigned total_deg() const {
        return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (sgn(c) == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(nvars_);
        for (auto& [ma, ca] : terms_) {
            for (auto& [mb, cb] : o.terms_) {
                Monomial m(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    Polynomial scaled(const Rational& c) const {
        Polynomial r(nvars_);
        if (sgn(c) == 0) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    Polynomial pow(unsigned e) const {
        Polynomial r = constant(nvars_, Rational(1));
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Rational eval(const std::vector<Rational>& point) const {
        Rational acc(0);
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] > 0) t *= rat_pow(point[i], m[i]);
            acc += t;
        }
        return acc;
    }

    QInterval eval_interval(const std::vector<QInterval>& box) const {
        // precompute powers per variable up to the max exponent used
        std::vector<std::vector<QInterval>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned d = degree_in(i);
            powers[i].resize(d + 1, QInterval::point(Rational(1)));
            for (unsigned e = 1; e <= d; ++e) powers[i][e] = powers[i][e - 1] * box[i];
        }
        QInterval acc = QInterval::point(Rational(0));
        for (auto& [m, c] : terms_) {
            QInterval t = QInterval::point(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] > 0) t = t * powers[i][m[i]];
            acc = acc + t;
        }
        return acc;
    }

    // Substitutes polynomial `sub` for variable `var`.
    Polynomial substitute(std::size_t var, const Polynomial& sub) const {
        Polynomial r(nvars_);
        for (auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned e = rest[var];
            rest[var] = 0;
            Polynomial t(nvars_);
            t.terms_[rest] = c;
            if (e > 0) t = t * sub.pow(e);
            r = r + t;
        }
        return r;
    }

    // Dense coefficient list of *this viewed as univariate in `var`;
    // entry j is the coefficient polynomial of var^j (var cleared).
    std::vector<Polynomial> coeffs_in_var(std::size_t var) const {
        std::vector<Polynomial> cs(degree_in(var) + 1, Polynomial(nvars_));
        for (auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned e = rest[var];
            rest[var] = 0;
            cs[e].add_term(rest, c);
        }
        return cs;
    }
    static Polynomial from_coeffs_in_var(std::size_t nvars, std::size_t var,
                                         const std::vector<Polynomial>& cs) {
        Polynomial r(nvars);
        for (std::size_t e = 0; e < cs.size(); ++e) {
            for (auto& [m, c] : cs[e].terms_) {
                Monomial me = m;
                me[var] += static_cast<unsigned>(e);
                r.add_term(me, c);
            }
        }
        return r;
    }

    // Rational content: gcd of coefficient numerators over lcm of
    // denominators, signed so the leading (graded lex) coefficient of the
    // primitive part is positive. Zero polynomial has content 0.
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        mpz_class g(0), l(1);
        for (auto& [m, c] : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpq_numref(c.get_mpq_t()));
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.get_mpq_t()));
        }
        Rational cont(g, l);
        cont.canonicalize();
        if (sgn(terms_.begin()->second) < 0) cont = -cont;
        return cont;
    }
    Polynomial primitive_part() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        Polynomial r(nvars_);
        for (auto& [m, k] : terms_) r.terms_[m] = k / c;
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (sgn(a) < 0) {
                    out += "-";
                    a = -a;
                }
                first = false;
            } else {
                out += sgn(a) < 0 ? " - " : " + ";
                if (sgn(a) < 0) a = -a;
            }
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) {
                out += ifslab::to_string(a);
            } else if (a == Rational(1)) {
                out += mono;
            } else {
                out += ifslab::to_string(a) + "*" + mono;
            }
        }
        return out;
    }

private:
    std::size_t nvars_;
    Terms terms_;
};

namespace detail {

// Exact division: returns q with a == b*q, or false if b does not divide a.
// Standard recursive multivariate long division in the first variable used
// by either operand.
inline bool poly_div_exact(const Polynomial& a, const Polynomial& b, Polynomial& q);

inline int first_used_var(const Polynomial& a, const Polynomial& b) {
    for (std::size_t v = 0; v < a.nvars(); ++v)
        if (a.uses_var(v) || b.uses_var(v)) return static_cast<int>(v);
    return -1;
}

inline bool poly_div_exact(const Polynomial& a, const Polynomial& b, Polynomial& q) {
    q = Polynomial(a.nvars());
    if (b.is_zero()) return false;
    if (a.is_zero()) return true;
    int v = first_used_var(a, b);
    if (v < 0) { // both constants
        q = Polynomial::constant(a.nvars(), a.constant_value() / b.constant_value());
        return true;
    }
    auto var = static_cast<std::size_t>(v);
    if (!b.uses_var(var)) {
        // divide every coefficient of a by b
        auto ca = a.coeffs_in_var(var);
        std::vector<Polynomial> cq(ca.size(), Polynomial(a.nvars()));
        for (std::size_t j = 0; j < ca.size(); ++j)
            if (!poly_div_exact(ca[j], b, cq[j])) return false;
        q = Polynomial::from_coeffs_in_var(a.nvars(), var, cq);
        return true;
    }
    auto ca = a.coeffs_in_var(var);
    auto cb = b.coeffs_in_var(var);
    const std::size_t db = cb.size() - 1;
    if (ca.size() - 1 < db) return false;
    std::vector<Polynomial> cq(ca.size() - db, Polynomial(a.nvars()));
    auto rem = ca;
    for (std::size_t k = cq.size(); k-- > 0;) {
        if (rem[k + db].is_zero()) continue;
        Polynomial t;
        if (!poly_div_exact(rem[k + db], cb[db], t)) return false;
        cq[k] = t;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - cb[j] * t;
    }
    for (auto& r : rem)
        if (!r.is_zero()) return false;
    q = Polynomial::from_coeffs_in_var(a.nvars(), var, cq);
    return true;
}

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// gcd of univariate (in `var`) polynomials with polynomial coefficients via
// the primitive Euclidean algorithm with pseudo-remainders.
inline Polynomial poly_gcd_univar(const Polynomial& a, const Polynomial& b, std::size_t var) {
    auto content_in = [&](const Polynomial& p) {
        auto cs = p.coeffs_in_var(var);
        Polynomial g(p.nvars());
        for (auto& c : cs) g = poly_gcd(g, c);
        return g;
    };
    Polynomial ca = content_in(a), cb = content_in(b);
    Polynomial cont = poly_gcd(ca, cb);

    Polynomial pa, pb;
    if (!poly_div_exact(a, ca, pa) || !poly_div_exact(b, cb, pb))
        throw ValidationError("internal: content division failed");

    // primitive PRS
    Polynomial u = pa, w = pb;
    if (u.degree_in(var) < w.degree_in(var)) std::swap(u, w);
    while (!w.is_zero()) {
        // pseudo-remainder prem(u, w) in var
        auto cu = u.coeffs_in_var(var);
        auto cw = w.coeffs_in_var(var);
        std::size_t du = cu.size() - 1, dw = cw.size() - 1;
        if (du < dw) break;
        Polynomial lcw = cw[dw];
        Polynomial r = u;
        for (std::size_t k = du + 1; k-- > dw + 1;) {
            auto cr = r.coeffs_in_var(var);
            if (cr.size() - 1 < dw) break;
            std::size_t dr = cr.size() - 1;
            if (dr < k - 1 + 1) {}
        }
        // straightforward pseudo-division loop
        r = u.scaled(Rational(1));
        {
            auto cr = r.coeffs_in_var(var);
            while (cr.size() - 1 >= dw && !r.is_zero()) {
                std::size_t dr = cr.size() - 1;
                if (dr < dw) break;
                Polynomial lead = cr[dr];
                if (lead.is_zero()) break;
                // r = lcw * r - lead * x^(dr-dw) * w
                Polynomial shift = Polynomial::variable(r.nvars(), var, static_cast<unsigned>(dr - dw));
                r = lcw * r - lead * shift * w;
                if (r.is_zero()) break;
                if (r.degree_in(var) >= dr) break; // no progress; should not happen
                cr = r.coeffs_in_var(var);
            }
        }
        u = w;
        w = r.is_zero() ? r : [&] {
            //取 primitive part with respect to var
            auto cs = r.coeffs_in_var(var);
            Polynomial g(r.nvars());
            for (auto& c : cs) g = poly_gcd(g, c);
            Polynomial pr;
            if (!poly_div_exact(r, g, pr))
                throw ValidationError("internal: primitive part division failed");
            return pr.primitive_part();
        }();
        if (!w.is_zero() && w.degree_in(var) == 0 && u.degree_in(var) >= 0) {
            if (w.is_constant() || !w.uses_var(var)) {
                // coprime in var
                u = Polynomial::constant(u.nvars(), Rational(1));
                w = Polynomial(u.nvars());
                break;
            }
        }
    }
    return (cont * u.primitive_part()).primitive_part();
}

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.nvars(), Rational(1));
    int v = first_used_var(a, b);
    if (v < 0) return Polynomial::constant(a.nvars(), Rational(1));
    auto var = static_cast<std::size_t>(v);
    if (!a.uses_var(var) || !b.uses_var(var)) {
        // gcd(content-only case): gcd of one poly with coefficients of other
        const Polynomial& flat = a.uses_var(var) ? b : a;
        const Polynomial& deep = a.uses_var(var) ? a : b;
        auto cs = deep.coeffs_in_var(var);
        Polynomial g = flat.primitive_part();
        for (auto& c : cs) {
            g = poly_gcd(g, c);
            if (g.is_constant()) return Polynomial::constant(a.nvars(), Rational(1));
        }
        return g;
    }
    return poly_gcd_univar(a, b, var);
}

} // namespace detail

inline Polynomial gcd(const Polynomial& a, const Polynomial& b) { return detail::poly_gcd(a, b); }

// Exact quotient; throws if b does not divide a.
inline Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
    Polynomial q;
    if (!detail::poly_div_exact(a, b, q))
        throw ValidationError("internal: inexact polynomial division");
    return q;
}

} // namespace ifslab
