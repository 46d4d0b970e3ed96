#pragma once

// The two-bridge (Schubert) family S(alpha, beta): exponent sequences via
// the modular t-form / c-form, the even s-value, the two-generator
// presentations built from the alternating words w_1, w_2, the synthesized
// 2-bridge code, and the (2, alpha) torus-knot presentation.

#include <string>
#include <vector>

#include "errors.hpp"
#include "knot_code.hpp"
#include "presentation.hpp"
#include "synthesis.hpp"
#include "word.hpp"

namespace vknot {

struct SchubertParams {
    long long alpha = 0;
    long long beta = 0;
};

inline SchubertParams schubert_params(long long alpha, long long beta) {
    if (alpha <= 0 || alpha % 2 == 0)
        throw validation_error("alpha must be a positive odd integer, got " +
                               std::to_string(alpha));
    if (beta % 2 == 0 || beta <= 0 || beta >= alpha)
        throw validation_error("beta must be odd with 0 < beta < alpha, got " +
                               std::to_string(beta));
    if (gcd_ll(alpha, beta) != 1)
        throw validation_error("alpha and beta must be coprime, got gcd " +
                               std::to_string(gcd_ll(alpha, beta)));
    return {alpha, beta};
}

enum class ExponentMethod { t_form, c_form };

// e_k for k = 1..alpha-1.  t-form: kb mod 2a lies in (0,a) u (a,2a) and
// e_k = +1 on the lower interval.  c-form: the representative c_k of
// kb mod 2a inside (-a, a) is never 0, and e_k = sign(c_k).
inline std::vector<int> schubert_exponents(const SchubertParams& p,
                                           ExponentMethod method) {
    std::vector<int> e;
    const long long a2 = 2 * p.alpha;
    for (long long k = 1; k < p.alpha; ++k) {
        long long t = (k * p.beta) % a2;
        if (t == 0 || t == p.alpha)
            throw internal_error("t_k hit a forbidden residue at k = " + std::to_string(k));
        if (method == ExponentMethod::t_form) {
            e.push_back(t < p.alpha ? 1 : -1);
        } else {
            long long c = t < p.alpha ? t : t - a2;  // representative in (-a, a)
            e.push_back(c > 0 ? 1 : -1);
        }
    }
    return e;
}

inline std::vector<int> schubert_exponents(const SchubertParams& p) {
    return schubert_exponents(p, ExponentMethod::t_form);
}

struct SchubertSValue {
    long long s = 0;    // the unique even s in [2, alpha-1] with s*beta = +-1 (mod alpha)
    int case_sign = 0;  // +1 when s*beta = -1 (mod alpha), -1 when = +1
};

inline SchubertSValue schubert_s_value(const SchubertParams& p) {
    // v = beta^-1 mod alpha; s is whichever of v, alpha - v is even.
    long long v = 0;
    for (long long c = 1; c < p.alpha; ++c)
        if ((c * p.beta) % p.alpha == 1) { v = c; break; }
    if (v == 0) throw internal_error("beta has no inverse modulo alpha");
    SchubertSValue out;
    out.s = v % 2 == 0 ? v : p.alpha - v;
    out.case_sign = (out.s * p.beta) % p.alpha == p.alpha - 1 ? 1 : -1;
    return out;
}

// w_1 = y^{e_1} x^{e_2} y^{e_3} ... x^{e_{alpha-1}} and w_2 the same with
// x and y swapped.
inline Word schubert_w1(const SchubertParams& p) {
    std::vector<int> e = schubert_exponents(p);
    Word w;
    for (std::size_t k = 0; k < e.size(); ++k)
        w *= Word::generator(k % 2 == 0 ? "y" : "x", e[k]);
    return w;
}

inline Word schubert_w2(const SchubertParams& p) {
    std::vector<int> e = schubert_exponents(p);
    Word w;
    for (std::size_t k = 0; k < e.size(); ++k)
        w *= Word::generator(k % 2 == 0 ? "x" : "y", e[k]);
    return w;
}

// The group of S(alpha, beta): relators r_1: x w_1 = w_1 y and
// r_2: y w_2 = w_2 x, stored in conjugation form w^-1 g w h^-1.  The second
// relator is a consequence of the first, so one_relator presents the same
// group.
struct SchubertPresentations {
    Presentation two_relator;
    Presentation one_relator;
    Word w1, w2;
};

inline SchubertPresentations schubert_presentations(const SchubertParams& p) {
    SchubertPresentations out;
    out.w1 = schubert_w1(p);
    out.w2 = schubert_w2(p);
    Word x = Word::generator("x"), y = Word::generator("y");
    Word r1 = out.w1.inverse() * x * out.w1 * y.inverse();
    Word r2 = out.w2.inverse() * y * out.w2 * x.inverse();
    out.two_relator = {{"x", "y"}, {r1, r2}};
    out.one_relator = {{"x", "y"}, {r1}};
    return out;
}

// Close the chain x -> y by w_1 and synthesize: a 2(alpha-1)-crossing code
// with two bridge segments and trivial longitude.
inline KnotCode schubert_code(const SchubertParams& p) {
    WirtingerPresentation chain =
        make_wirtinger({"x", "y"}, {{0, schubert_w1(p), 1}}, false);
    KnotCode code = cyclic_wirtinger_to_code(close_deficiency_one(chain));
    if (code.size() != 2 * static_cast<std::size_t>(p.alpha - 1))
        throw internal_error("Schubert code has unexpected crossing count");
    return code;
}

// < z, h | z^alpha h^-2 >, the group of the (2, alpha) torus knot.
inline Presentation torus_presentation(long long alpha) {
    if (alpha < 3 || alpha % 2 == 0)
        throw precondition_error("alpha must be odd and at least 3, got " +
                                 std::to_string(alpha));
    Word r = Word::generator("z", alpha) * Word::generator("h", -2);
    return {{"z", "h"}, {r}};
}

}  // namespace vknot
