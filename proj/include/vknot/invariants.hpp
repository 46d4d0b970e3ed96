#pragma once

// Invariants of presented groups: Fox calculus over the free group ring,
// the two-generator Alexander polynomial, Murasugi's center conditions,
// the Nab-rep polynomial Phi(t, u) from the representation
// x -> A = [[t,0],[-tu,1]], y -> B = [[t,1],[0,1]] (symbolic and exact
// numeric), and the Baumslag-Solitar classification report.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_ring.hpp"
#include "laurent.hpp"
#include "mat2.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace vknot {

// ---- Fox calculus ----------------------------------------------------------

// d(uv) = du * theta(v) + u * dv with theta the augmentation, so on words
// d(uv) = du + u * dv; a syllable g^p contributes
//   1 + g + ... + g^{p-1}           for p > 0,
//   -(g^-1 + g^-2 + ... + g^{-p})   for p < 0.
inline GroupRingElem fox_derivative(const Word& w, const std::string& gen) {
    GroupRingElem d;
    Word prefix;
    for (const auto& s : w.syllables()) {
        if (s.gen == gen) {
            GroupRingElem syl;
            if (s.exp > 0)
                for (long long i = 0; i < s.exp; ++i)
                    syl += GroupRingElem(Word::generator(gen, i));
            else
                for (long long i = -1; i >= s.exp; --i)
                    syl -= GroupRingElem(Word::generator(gen, i));
            d += GroupRingElem(prefix) * syl;
        }
        prefix *= Word::generator(s.gen, s.exp);
    }
    return d;
}

// g -> t^{d_g}, extended linearly to the group ring.
using AbelianizationMap = std::map<std::string, long long>;

inline LaurentPoly ring_abelianize(const GroupRingElem& e, const AbelianizationMap& map) {
    LaurentPoly p;
    for (const auto& [w, c] : e.terms()) {
        long long deg = 0;
        for (const auto& s : w.syllables()) {
            auto it = map.find(s.gen);
            if (it == map.end())
                throw precondition_error("abelianization map misses generator '" +
                                         s.gen + "'");
            deg += it->second * s.exp;
        }
        p += LaurentPoly::term(c, deg);
    }
    return p;
}

// ---- Alexander polynomial --------------------------------------------------

// For < x1, x2 | r > with infinite-cyclic abelianization: abelianize by
// x1 -> t^{l_2/g}, x2 -> t^{-l_1/g} (g = gcd of the exponent sums, overall
// sign fixed so the first nonzero degree is positive), then take the gcd of
// the images of the two Fox derivatives, unit-normalized.
inline LaurentPoly alexander_two_generator(const Presentation& p) {
    p.validate();
    if (p.generators.size() != 2 || p.relators.size() != 1)
        throw precondition_error("expected two generators and one relator, got " +
                                 std::to_string(p.generators.size()) + " and " +
                                 std::to_string(p.relators.size()));
    const Word& r = p.relators[0];
    if (r.is_identity())
        throw precondition_error("the relator is trivial, Alexander polynomial undefined");
    const std::string& x1 = p.generators[0];
    const std::string& x2 = p.generators[1];
    long long l1 = r.exponent_sum(x1), l2 = r.exponent_sum(x2);
    if (l1 == 0 && l2 == 0)
        throw precondition_error("abelianization has rank 2, Alexander polynomial "
                                 "undefined for this relator");
    long long g = gcd_ll(l1, l2);
    long long d1 = l2 / g, d2 = -l1 / g;
    if (d1 < 0 || (d1 == 0 && d2 < 0)) {
        d1 = -d1;
        d2 = -d2;
    }
    AbelianizationMap map{{x1, d1}, {x2, d2}};
    LaurentPoly a = ring_abelianize(fox_derivative(r, x1), map);
    LaurentPoly b = ring_abelianize(fox_derivative(r, x2), map);
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    return laurent_gcd(a, b);
}

// ---- Murasugi center conditions --------------------------------------------

enum class MurasugiKind {
    fails_deg0,      // degree 0: condition "deg >= 1" already fails
    deg1_matches,    // degree 1 and of the form n(1 + t) or n(1 - t)
    deg1_no_match,   // degree 1 but not of that form
    divides_power,   // degree >= 2 and divides 1 - t^r for the reported r
    no_divisor,      // degree >= 2, no divisor found up to r_max
};

struct MurasugiResult {
    MurasugiKind kind = MurasugiKind::fails_deg0;
    long long r = 0;  // witness exponent when kind == divides_power
    long long r_max = 0;

    std::string str() const {
        switch (kind) {
            case MurasugiKind::fails_deg0:
                return "degree 0: condition (deg >= 1) fails";
            case MurasugiKind::deg1_matches:
                return "degree 1 of the form n(1 +- t)";
            case MurasugiKind::deg1_no_match:
                return "degree 1 but not of the form n(1 +- t)";
            case MurasugiKind::divides_power:
                return "divides 1 - t^" + std::to_string(r);
            case MurasugiKind::no_divisor:
                return "divides no 1 - t^r for r <= " + std::to_string(r_max);
        }
        return "";
    }
};

// r_max <= 0 selects the default bound 2 * deg(delta)^2.
inline MurasugiResult murasugi_center_test(const LaurentPoly& delta, long long r_max = 0) {
    if (delta.is_zero())
        throw precondition_error("Murasugi test needs a nonzero polynomial");
    LaurentPoly d = laurent_normalize_unit(delta);
    const long long deg = d.span();
    MurasugiResult out;
    if (deg == 0) {
        out.kind = MurasugiKind::fails_deg0;
        return out;
    }
    if (deg == 1) {
        Int a = d.coeff(0), b = d.coeff(1);
        out.kind = (b == a || b == -a) ? MurasugiKind::deg1_matches
                                       : MurasugiKind::deg1_no_match;
        return out;
    }
    out.r_max = r_max > 0 ? r_max : 2 * deg * deg;
    for (long long r = 1; r <= out.r_max; ++r) {
        LaurentPoly target = LaurentPoly(1) - LaurentPoly::t(r);
        if (laurent_divides(d, target)) {
            out.kind = MurasugiKind::divides_power;
            out.r = r;
            return out;
        }
    }
    out.kind = MurasugiKind::no_divisor;
    return out;
}

// ---- Nab-rep polynomial ----------------------------------------------------

// Image of a word under x -> A, y -> B over Z[t,t^-1][u].
inline Mat2 nabrep_eval(const Word& w) {
    const Mat2 A = riley_A(), B = riley_B();
    const Mat2 Ai = mat2_inverse(A), Bi = mat2_inverse(B);
    Mat2 m = Mat2::identity();
    for (const auto& s : w.syllables()) {
        const Mat2* base;
        if (s.gen == "x") base = s.exp > 0 ? &A : &Ai;
        else if (s.gen == "y") base = s.exp > 0 ? &B : &Bi;
        else throw precondition_error("nabrep words use generators x and y only, got '" +
                                      s.gen + "'");
        long long count = s.exp < 0 ? -s.exp : s.exp;
        for (long long i = 0; i < count; ++i) m = m * *base;
    }
    return m;
}

// w11 + (1 - t) w12 of the matrix image, before the unit shift.
inline BiPoly nabrep_phi_raw(const Word& w) {
    Mat2 m = nabrep_eval(w);
    return m.e11 + (BiPoly(1) - BiPoly(LaurentPoly::t())) * m.e12;
}

// Phi(t, u) = t^-m [w11 + (1 - t) w12], with the single global shift m
// chosen so the minimum t-degree over all u-coefficients is 0.
inline BiPoly nabrep_phi(const Word& w) {
    BiPoly raw = nabrep_phi_raw(w);
    if (raw.is_zero()) return raw;
    return raw.shifted_t(-raw.min_t_degree());
}

// ---- exact numeric representation ------------------------------------------

struct Mat2Q {
    Rational e11, e12, e21, e22;

    static Mat2Q identity() { return {1, 0, 0, 1}; }

    friend Mat2Q operator*(const Mat2Q& a, const Mat2Q& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }
    friend Mat2Q operator-(const Mat2Q& a, const Mat2Q& b) {
        return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
    }
    friend bool operator==(const Mat2Q&, const Mat2Q&) = default;

    bool is_zero() const { return e11 == 0 && e12 == 0 && e21 == 0 && e22 == 0; }

    Mat2Q inverse() const {
        Rational det = e11 * e22 - e12 * e21;
        if (det == 0) throw precondition_error("singular numeric matrix");
        return {e22 / det, -e12 / det, -e21 / det, e11 / det};
    }
};

// Evaluate a word under the representation at exact (t0, u0); t0 must be
// nonzero so the generator matrices are invertible.
inline Mat2Q riley_numeric(const Word& w, const Rational& t0, const Rational& u0) {
    if (t0 == 0) throw precondition_error("t must be nonzero");
    const Mat2Q A{t0, 0, -t0 * u0, 1};
    const Mat2Q B{t0, 1, 0, 1};
    const Mat2Q Ai = A.inverse(), Bi = B.inverse();
    Mat2Q m = Mat2Q::identity();
    for (const auto& s : w.syllables()) {
        const Mat2Q* base;
        if (s.gen == "x") base = s.exp > 0 ? &A : &Ai;
        else if (s.gen == "y") base = s.exp > 0 ? &B : &Bi;
        else throw precondition_error("nabrep words use generators x and y only, got '" +
                                      s.gen + "'");
        long long count = s.exp < 0 ? -s.exp : s.exp;
        for (long long i = 0; i < count; ++i) m = m * *base;
    }
    return m;
}

// The relator of G(2, w): x w = w y, i.e. x w y^-1 w^-1.
inline Word gw_relator(const Word& w) {
    return Word::generator("x") * w * Word::generator("y", -1) * w.inverse();
}

// Image of the relator minus the identity; exactly zero iff (t0, u0) gives
// a representation of G(2, w).
inline Mat2Q numeric_rep_residual(const Word& relator, const Rational& t0,
                                  const Rational& u0) {
    return riley_numeric(relator, t0, u0) - Mat2Q::identity();
}

// ---- Baumslag-Solitar classification ----------------------------------------

inline Word bs_relator(long long m, long long n) {
    return Word::generator("x") * Word::generator("y", m) *
           Word::generator("x", -1) * Word::generator("y", -n);
}

inline Presentation bs_presentation(long long m, long long n) {
    return {{"x", "y"}, {bs_relator(m, n)}};
}

inline std::set<long long> prime_divisors(long long v) {
    if (v < 0) v = -v;
    std::set<long long> out;
    for (long long p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            out.insert(p);
            v /= p;
        }
    if (v > 1) out.insert(v);
    return out;
}

enum class BSCenter { trivial, cyclic, not_classified };

struct BSReport {
    long long m = 0, n = 0;
    bool residually_finite = false;
    bool hopfian = false;
    std::pair<long long, Int> abelianization{0, 0};  // (free rank, torsion)
    bool is_virtual_knot_group = false;
    BSCenter center = BSCenter::trivial;
    long long center_power = 0;  // generator exponent when center is cyclic

    std::string center_str() const {
        switch (center) {
            case BSCenter::trivial: return "trivial";
            case BSCenter::cyclic:
                return "cyclic generated by y^" + std::to_string(center_power);
            case BSCenter::not_classified: return "not classified";
        }
        return "";
    }
};

// BS(m, n) = < x, y | x y^m x^-1 y^-n >: residual finiteness and
// Hopficity from the |m|, |n| and prime-divisor-set criteria, the
// abelianization, whether the group is a virtual knot group (n = m+1), and
// the center (cyclic <y^n> when m = n, trivial when m != +-n).
inline BSReport bs_classify(long long m, long long n) {
    if (m == 0 || n == 0)
        throw precondition_error("BS(m, n) needs nonzero m and n");
    BSReport rep;
    rep.m = m;
    rep.n = n;
    const long long am = m < 0 ? -m : m, an = n < 0 ? -n : n;
    rep.residually_finite = am == an || am == 1 || an == 1;
    rep.hopfian = rep.residually_finite || prime_divisors(am) == prime_divisors(an);
    rep.abelianization = abelianization_two_gen(bs_presentation(m, n));
    rep.is_virtual_knot_group = n == m + 1;
    if (m == n) {
        rep.center = BSCenter::cyclic;
        rep.center_power = n;
    } else if (m == -n) {
        rep.center = BSCenter::not_classified;
    } else {
        rep.center = BSCenter::trivial;
    }
    return rep;
}

}  // namespace vknot
