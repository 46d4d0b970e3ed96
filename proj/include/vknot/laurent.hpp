#pragma once

// Exact arithmetic in Z[t,t^-1] (integer Laurent polynomials) and in
// Z[t,t^-1][u], the coefficient rings of the Alexander polynomial and the
// Nab-rep polynomial.  Coefficients are arbitrary-precision integers; there
// is no floating point anywhere in this header.
//
// Canonical unit normalization used throughout: multiply by the unique unit
// +-t^k so the result has minimum degree 0 and a positive lowest coefficient.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"

namespace vknot {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// t0^e for a nonzero rational base and any integer exponent.
inline Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw precondition_error("cannot raise 0 to a negative power");
        return Rational(0);
    }
    Rational acc(1), b = base;
    long long k = e < 0 ? -e : e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (e < 0) acc = Rational(1) / acc;
    return acc;
}

// An element of Z[t,t^-1], stored as degree -> nonzero coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Int& c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly term(const Int& coeff, long long deg) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[deg] = coeff;
        return p;
    }
    static LaurentPoly t(long long deg = 1) { return term(1, deg); }

    const std::map<long long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(long long deg) const {
        auto it = terms_.find(deg);
        return it == terms_.end() ? Int(0) : it->second;
    }
    long long min_degree() const {
        if (is_zero()) throw precondition_error("degree of the zero polynomial");
        return terms_.begin()->first;
    }
    long long max_degree() const {
        if (is_zero()) throw precondition_error("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }
    // Degree spread max - min; the degree of the unit-normalized representative.
    long long span() const { return max_degree() - min_degree(); }

    LaurentPoly shifted(long long k) const {
        LaurentPoly p;
        for (const auto& [d, c] : terms_) p.terms_[d + k] = c;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.terms_) {
            Int& slot = terms_[d];
            slot += c;
            if (slot == 0) terms_.erase(d);
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.terms_) {
            Int& slot = terms_[d];
            slot -= c;
            if (slot == 0) terms_.erase(d);
        }
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly p;
        for (const auto& [d, c] : a.terms_) p.terms_[d] = -c;
        return p;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                Int& slot = p.terms_[da + db];
                slot += ca * cb;
                if (slot == 0) p.terms_.erase(da + db);
            }
        return p;
    }
    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
        LaurentPoly p;
        if (c != 0)
            for (const auto& [d, v] : a.terms_) p.terms_[d] = c * v;
        return p;
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Exact evaluation; t0 must be nonzero if negative degrees occur.
    Rational evaluate(const Rational& t0) const {
        Rational acc(0);
        for (const auto& [d, c] : terms_) acc += Rational(c) * rational_pow(t0, d);
        return acc;
    }

    // Terms in increasing degree, e.g. "2*t^-1 + 1 - 3*t^2"; zero is "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (d == 0) {
                out << mag;
            } else {
                if (mag != 1) out << mag << "*";
                out << "t";
                if (d != 1) out << "^" << d;
            }
        }
        return out.str();
    }

private:
    std::map<long long, Int> terms_;
};

// Multiply by the unit +-t^k that gives minimum degree 0 and a positive
// lowest coefficient; the zero polynomial is fixed.
inline LaurentPoly laurent_normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.min_degree());
    if (q.coeff(0) < 0) q = -q;
    return q;
}

namespace detail {

inline Int laurent_content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [d, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

inline LaurentPoly divide_by_int(const LaurentPoly& p, const Int& c) {
    LaurentPoly q;
    for (const auto& [d, v] : p.terms()) q += LaurentPoly::term(v / c, d);
    return q;
}

inline LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return divide_by_int(p, laurent_content(p));
}

// Pseudo-remainder of plain polynomials (min degree >= 0): repeatedly scale by
// the leading coefficient of b and cancel the leading term.
inline LaurentPoly pseudo_remainder(LaurentPoly r, const LaurentPoly& b) {
    const long long db = b.max_degree();
    const Int lb = b.coeff(db);
    while (!r.is_zero() && r.max_degree() >= db) {
        const long long dr = r.max_degree();
        const Int lr = r.coeff(dr);
        r = lb * r - lr * b.shifted(dr - db);
    }
    return r;
}

}  // namespace detail

// Does a divide b exactly in Z[t,t^-1]?  (Everything divides 0; 0 divides
// only 0.)  Divisibility is insensitive to units, so both sides are shifted
// into Z[t] and ordinary integer long division is attempted.
inline bool laurent_divides(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    LaurentPoly d = a.shifted(-a.min_degree());
    LaurentPoly r = b.shifted(-b.min_degree());
    const long long dd = d.max_degree();
    const Int lead = d.coeff(dd);
    while (!r.is_zero() && r.max_degree() >= dd) {
        const long long dr = r.max_degree();
        const Int lr = r.coeff(dr);
        if (lr % lead != 0) return false;
        r -= (lr / lead) * d.shifted(dr - dd);
    }
    return r.is_zero();
}

// gcd in Z[t,t^-1], realized as gcd of integer contents times the gcd of
// primitive parts (primitive pseudo-remainder sequence over Z[t]), then
// unit-normalized.  Errors if both arguments are zero.
inline LaurentPoly laurent_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero() && b0.is_zero())
        throw precondition_error("gcd(0, 0) is undefined");
    if (a0.is_zero()) return laurent_normalize_unit(b0);
    if (b0.is_zero()) return laurent_normalize_unit(a0);
    LaurentPoly a = a0.shifted(-a0.min_degree());
    LaurentPoly b = b0.shifted(-b0.min_degree());
    const Int content = boost::multiprecision::gcd(detail::laurent_content(a),
                                                   detail::laurent_content(b));
    a = detail::primitive_part(a);
    b = detail::primitive_part(b);
    while (!b.is_zero()) {
        LaurentPoly r = detail::pseudo_remainder(a, b);
        a = b;
        b = detail::primitive_part(r);
    }
    return laurent_normalize_unit(content * detail::primitive_part(a));
}

// An element of Z[t,t^-1][u]: u-degree (>= 0) -> Laurent coefficient.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const LaurentPoly& c) { if (!c.is_zero()) terms_[0] = c; }
    BiPoly(long long c) : BiPoly(LaurentPoly(c)) {}

    static BiPoly term(const LaurentPoly& coeff, long long udeg) {
        if (udeg < 0) throw internal_error("negative u-degree in BiPoly");
        BiPoly p;
        if (!coeff.is_zero()) p.terms_[udeg] = coeff;
        return p;
    }
    static BiPoly u(long long deg = 1) { return term(LaurentPoly(1), deg); }

    const std::map<long long, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly coeff(long long udeg) const {
        auto it = terms_.find(udeg);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    // Minimum t-degree over all u-coefficients.
    long long min_t_degree() const {
        if (is_zero()) throw precondition_error("degree of the zero polynomial");
        bool first = true;
        long long m = 0;
        for (const auto& [ud, c] : terms_) {
            long long d = c.min_degree();
            if (first || d < m) m = d;
            first = false;
        }
        return m;
    }
    BiPoly shifted_t(long long k) const {
        BiPoly p;
        for (const auto& [ud, c] : terms_) p.terms_[ud] = c.shifted(k);
        return p;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [ud, c] : o.terms_) {
            LaurentPoly& slot = terms_[ud];
            slot += c;
            if (slot.is_zero()) terms_.erase(ud);
        }
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [ud, c] : o.terms_) {
            LaurentPoly& slot = terms_[ud];
            slot -= c;
            if (slot.is_zero()) terms_.erase(ud);
        }
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly p;
        for (const auto& [ud, c] : a.terms_) p.terms_[ud] = -c;
        return p;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly p;
        for (const auto& [ua, ca] : a.terms_)
            for (const auto& [ub, cb] : b.terms_) {
                LaurentPoly& slot = p.terms_[ua + ub];
                slot += ca * cb;
                if (slot.is_zero()) p.terms_.erase(ua + ub);
            }
        return p;
    }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    Rational evaluate(const Rational& t0, const Rational& u0) const {
        Rational acc(0);
        for (const auto& [ud, c] : terms_) acc += c.evaluate(t0) * rational_pow(u0, ud);
        return acc;
    }

    // "(1 - t) + (t^2)*u": u-terms ascending, Laurent coefficients in parens.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [ud, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.str() << ")";
            if (ud >= 1) {
                out << "*u";
                if (ud != 1) out << "^" << ud;
            }
        }
        return out.str();
    }

private:
    std::map<long long, LaurentPoly> terms_;
};

// ---- polynomial expression parser --------------------------------------
//
// Accepts integer polynomial expressions in t and u with + - * ^ and
// parentheses; '*' between factors is optional ("2t" == "2*t").  Exponents
// are (possibly negative) integers; negative u-exponents are rejected.

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    BiPoly parse() {
        BiPoly v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw validation_error("polynomial parse error at position " +
                               std::to_string(pos_ + 1) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    long long exponent() {
        bool neg = eat('-');
        Int v = integer();
        if (v > 1000000) fail("exponent too large");
        long long e = v.convert_to<long long>();
        return neg ? -e : e;
    }

    BiPoly factor() {
        char c = peek();
        if (c == '(') {
            eat('(');
            BiPoly v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(LaurentPoly(integer()));
        if (c == 't' || c == 'u') {
            ++pos_;
            long long e = 1;
            if (eat('^')) e = exponent();
            if (c == 't') return BiPoly(LaurentPoly::t(e));
            if (e < 0) fail("negative powers of u are not allowed");
            return BiPoly::u(e);
        }
        fail("expected a number, 't', 'u' or '('");
    }

    bool at_factor_start() {
        char c = peek();
        return c == '(' || c == 't' || c == 'u' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    BiPoly term() {
        BiPoly v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (at_factor_start()) {
                v = v * factor();
            } else {
                break;
            }
        }
        return v;
    }

    BiPoly expr() {
        BiPoly v = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else break;
        }
        return v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline BiPoly parse_bipoly(const std::string& text) {
    return detail::PolyParser(text).parse();
}

inline LaurentPoly parse_laurent(const std::string& text) {
    BiPoly p = parse_bipoly(text);
    for (const auto& [ud, c] : p.terms())
        if (ud != 0) throw validation_error("expected a polynomial in t only, found u");
    return p.coeff(0);
}

}  // namespace vknot
