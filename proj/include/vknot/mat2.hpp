#pragma once

// 2x2 matrices over Z[t,t^-1][u], used to evaluate words in the
// representation  y -> B = [[t,1],[0,1]],  x -> A = [[t,0],[-tu,1]].
// Both matrices have determinant t, a unit, so every word in x, y evaluates
// to a matrix with unit determinant and an exact inverse.

#include <array>

#include "errors.hpp"
#include "laurent.hpp"

namespace vknot {

struct Mat2 {
    BiPoly e11, e12, e21, e22;

    static Mat2 identity() { return {BiPoly(1), BiPoly(0), BiPoly(0), BiPoly(1)}; }

    BiPoly det() const { return e11 * e22 - e12 * e21; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Is p a unit +-t^k of Z[t,t^-1] (as an element of the bivariate ring)?
inline bool is_unit_monomial(const BiPoly& p) {
    if (p.terms().size() != 1) return false;
    const auto& [ud, c] = *p.terms().begin();
    if (ud != 0 || c.terms().size() != 1) return false;
    const Int& coeff = c.terms().begin()->second;
    return coeff == 1 || coeff == -1;
}

// Exact inverse, available exactly when det is a unit +-t^k:
// inv = det^-1 * [[e22,-e12],[-e21,e11]].
inline Mat2 mat2_inverse(const Mat2& m) {
    BiPoly d = m.det();
    if (!is_unit_monomial(d))
        throw precondition_error("matrix determinant " + d.str() +
                                 " is not a unit, cannot invert");
    const auto& c = d.coeff(0);
    const long long k = c.min_degree();
    const bool neg = c.coeff(k) < 0;
    auto scale = [&](const BiPoly& p) {
        BiPoly q = p.shifted_t(-k);
        return neg ? -q : q;
    };
    return {scale(m.e22), scale(-m.e12), scale(-m.e21), scale(m.e11)};
}

// The two standard representation matrices.
inline Mat2 riley_B() {
    return {BiPoly(LaurentPoly::t()), BiPoly(1), BiPoly(0), BiPoly(1)};
}
inline Mat2 riley_A() {
    return {BiPoly(LaurentPoly::t()), BiPoly(0),
            -(BiPoly(LaurentPoly::t()) * BiPoly::u()), BiPoly(1)};
}

}  // namespace vknot
