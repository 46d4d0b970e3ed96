#pragma once

// Constructive directions, from presentations back to codes:
//   * block form of a word over an ordered generator list;
//   * cyclic Wirtinger presentation -> knot code (one crossing per
//     conjugator letter);
//   * closing a deficiency-1 chain with w_n = (w_1 ... w_{n-1})^-1, which
//     forces the synthesized code to have trivial longitude;
//   * two-generator one-relator group with l_y(r) = +-1 -> cyclic chain;
//   * the BS(m, m+1) pipeline built from w_1 = (y_2^-1 y_1)^m.

#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"
#include "knot_code.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace vknot {

// A word written as rounds of cyclic generator blocks
// x_1^{i_1} x_2^{i_2} ... x_n^{i_n} | x_1^{i_{n+1}} ... (zeros allowed):
// exponents has length rounds * n.
struct BlockForm {
    std::size_t n = 0;
    std::vector<long long> exponents;

    std::size_t rounds() const { return n == 0 ? 0 : exponents.size() / n; }
    friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

// Minimal-round padding: scan the reduced syllables, opening a new round
// whenever the generator index fails to strictly increase.
inline BlockForm to_block_form(const Word& w, const std::vector<std::string>& order) {
    BlockForm bf;
    bf.n = order.size();
    std::size_t prev = 0;  // 1-based index of the previous syllable's generator
    for (const auto& s : w.syllables()) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            if (order[i] == s.gen) { idx = i + 1; break; }
        if (idx == 0)
            throw precondition_error("word uses generator '" + s.gen +
                                     "' outside the given order");
        if (idx <= prev || bf.exponents.empty())
            bf.exponents.resize(bf.exponents.size() + bf.n, 0);
        bf.exponents[bf.exponents.size() - bf.n + idx - 1] = s.exp;
        prev = idx;
    }
    return bf;
}

inline Word evaluate_block_form(const BlockForm& bf,
                                const std::vector<std::string>& order) {
    if (bf.n != order.size())
        throw precondition_error("block form width does not match generator order");
    Word w;
    for (std::size_t j = 0; j < bf.exponents.size(); ++j)
        w *= Word::generator(order[j % bf.n], bf.exponents[j]);
    return w;
}

namespace detail {

// A cyclic conjugation chain in positional form: ws[i] conjugates gens[i]
// to gens[(i+1) % n].
struct CyclicChain {
    std::vector<std::string> gens;
    std::vector<Word> ws;
};

inline CyclicChain chain_of(const WirtingerPresentation& wp) {
    const std::size_t n = wp.base.generators.size();
    if (!wp.cyclic || wp.links.size() != n)
        throw precondition_error("expected a cyclic Wirtinger presentation with "
                                 "as many relators as generators");
    CyclicChain c;
    c.gens = wp.base.generators;
    c.ws.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (wp.links[k].from != k || wp.links[k].to != (k + 1) % n)
            throw precondition_error("relator " + std::to_string(k + 1) +
                                     " does not link generator " + std::to_string(k + 1) +
                                     " to its cyclic successor");
        c.ws[k] = wp.links[k].conjugator;
    }
    return c;
}

// Tietze-eliminate identity-conjugator relators: such a relator identifies
// two adjacent chain generators.  Ends with every conjugator nonidentity, or
// with a single generator and an identity conjugator (the trivial chain).
inline CyclicChain eliminate_identity_conjugators(CyclicChain c) {
    for (;;) {
        const std::size_t n = c.gens.size();
        if (n <= 1) return c;
        std::size_t i = n;
        for (std::size_t k = 0; k < n; ++k)
            if (c.ws[k].is_identity()) { i = k; break; }
        if (i == n) return c;
        const std::string kept = c.gens[i];
        const std::string dead = c.gens[(i + 1) % n];
        const Word keptw = Word::generator(kept);
        CyclicChain next;
        next.gens.push_back(kept);
        for (std::size_t j = 2; j < n; ++j) next.gens.push_back(c.gens[(i + j) % n]);
        for (std::size_t j = 1; j < n; ++j)
            next.ws.push_back(c.ws[(i + j) % n].substituted(dead, keptw));
        c = std::move(next);
    }
}

// Rotate the cycle to begin at the generator listed first in `original`.
inline CyclicChain rotate_to_first(CyclicChain c,
                                   const std::vector<std::string>& original) {
    for (const auto& g : original) {
        for (std::size_t i = 0; i < c.gens.size(); ++i) {
            if (c.gens[i] != g) continue;
            CyclicChain out;
            const std::size_t n = c.gens.size();
            for (std::size_t j = 0; j < n; ++j) {
                out.gens.push_back(c.gens[(i + j) % n]);
                out.ws.push_back(c.ws[(i + j) % n]);
            }
            return out;
        }
        // g was eliminated; try the next original generator.
    }
    throw internal_error("no surviving generator after elimination");
}

}  // namespace detail

// Synthesize a knot code whose over presentation reproduces the given
// cyclic Wirtinger presentation.  Conjugator letters become crossings:
// the j-th letter of w_i (in block form) undercrosses at label c_{i-1}+j
// and the block's generator x_t overcrosses there, so the label joins A_t
// with the letter's exponent sign as crossing sign.  The crossing list is
// (A_1, -1..-c_1, A_2, -(c_1+1)..-c_2, ..., A_n, ..., -c_n).
inline KnotCode cyclic_wirtinger_to_code(const WirtingerPresentation& wp) {
    detail::CyclicChain chain = detail::chain_of(wp);
    chain = detail::eliminate_identity_conjugators(chain);
    if (chain.gens.size() == 1 && chain.ws[0].is_identity()) return KnotCode();
    chain = detail::rotate_to_first(chain, wp.base.generators);

    const std::size_t n = chain.gens.size();
    std::vector<std::vector<long long>> A(n);
    std::vector<long long> cum(n + 1, 0);
    std::vector<int> signs;
    long long label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BlockForm bf = to_block_form(chain.ws[i], chain.gens);
        for (std::size_t j = 0; j < bf.exponents.size(); ++j) {
            long long p = bf.exponents[j];
            long long count = p < 0 ? -p : p;
            for (long long l = 0; l < count; ++l) {
                ++label;
                A[j % n].push_back(label);
                signs.push_back(p < 0 ? -1 : 1);
            }
        }
        cum[i + 1] = label;
    }
    std::vector<long long> crossings;
    for (std::size_t t = 0; t < n; ++t) {
        for (long long v : A[t]) crossings.push_back(v);
        for (long long u = cum[t] + 1; u <= cum[t + 1]; ++u) crossings.push_back(-u);
    }
    try {
        return validate_code(crossings, signs);
    } catch (const validation_error& e) {
        throw internal_error(std::string("synthesized code fails validation: ") + e.what());
    }
}

// Append w_n = (w_1 ... w_{n-1})^-1 to a deficiency-1 chain (relator i
// conjugates generator i to i+1, i = 1..n-1), producing a cyclic
// presentation whose synthesized code has trivial longitude.
inline WirtingerPresentation close_deficiency_one(const WirtingerPresentation& wp) {
    const std::size_t n = wp.base.generators.size();
    if (n == 0 || wp.links.size() + 1 != n)
        throw precondition_error("expected an n-generator chain with n-1 relators");
    Word product;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (wp.links[k].from != k || wp.links[k].to != k + 1)
            throw precondition_error("relator " + std::to_string(k + 1) +
                                     " does not link generator " + std::to_string(k + 1) +
                                     " to generator " + std::to_string(k + 2));
        product *= wp.links[k].conjugator;
    }
    std::vector<WirtingerLink> links = wp.links;
    links.push_back({n - 1, product.inverse(), 0});
    return make_wirtinger(wp.base.generators, std::move(links), true);
}

namespace detail {

// Chain generator names that do not collide with the retained generator.
inline std::vector<std::string> fresh_names(std::size_t k, const std::string& taken) {
    for (const std::string prefix : {"y", "z", "w", "g"}) {
        std::vector<std::string> names;
        bool ok = true;
        for (std::size_t i = 1; i <= k && ok; ++i) {
            names.push_back(prefix + std::to_string(i));
            ok = names.back() != taken;
        }
        if (ok) return names;
    }
    throw internal_error("could not pick fresh generator names");
}

}  // namespace detail

// Turn a two-generator one-relator presentation < x, y | r > with
// l_y(r) = +-1 into a deficiency-1 cyclic chain on k+1 generators.
// Writing the cyclic word r as x^{n_1} y^{m_1} ... x^{n_k} y^{m_k} and
// M_t = m_t + ... + m_k, the subgroup generators y_t = y^{-M_t} x y^{M_t}
// satisfy  y_1 = y^{-l} x y^{l}  and  y_t = y^{m_{t-1}} y_{t-1} y^{-m_{t-1}},
// and the relator itself eliminates y as y^l = (y_1^{n_1} ... y_k^{n_k})^-1.
// Substituting that value for y turns the conjugators into words in the
// chain generators.
inline WirtingerPresentation onerel_to_cyclic_wirtinger(const Word& r,
                                                        const std::string& xname,
                                                        const std::string& yname) {
    for (const auto& g : r.generators())
        if (g != xname && g != yname)
            throw precondition_error("relator uses generator '" + g +
                                     "' outside {" + xname + ", " + yname + "}");
    const long long l = r.exponent_sum(yname);
    if (l != 1 && l != -1)
        throw precondition_error("exponent sum of " + yname + " in the relator is " +
                                 std::to_string(l) + ", need +1 or -1");
    Word rc = r.cyclically_reduced();
    // Rotate the cyclic word to start at an x-power preceded by a y-power.
    std::vector<Syllable> syl = rc.syllables();
    const std::size_t sn = syl.size();
    std::size_t start = sn;
    for (std::size_t i = 0; i < sn; ++i)
        if (syl[i].gen == xname && syl[(i + sn - 1) % sn].gen == yname) { start = i; break; }
    if (start == sn)
        throw precondition_error("relator has no occurrence of " + xname);
    std::vector<Syllable> rot;
    for (std::size_t i = 0; i < sn; ++i) rot.push_back(syl[(start + i) % sn]);
    rc = Word::from_syllables(rot);
    // Read off the pairs (n_t, m_t); syllables now alternate x, y, ..., y.
    std::vector<std::pair<long long, long long>> pairs;
    const auto& alt = rc.syllables();
    if (alt.size() % 2 != 0)
        throw internal_error("rotated relator does not alternate");
    for (std::size_t i = 0; i < alt.size(); i += 2) {
        if (alt[i].gen != xname || alt[i + 1].gen != yname)
            throw internal_error("rotated relator does not alternate");
        pairs.emplace_back(alt[i].exp, alt[i + 1].exp);
    }
    const std::size_t k = pairs.size();
    std::vector<std::string> ynames = detail::fresh_names(k, xname);
    Word V;
    for (std::size_t t = 0; t < k; ++t)
        V *= Word::generator(ynames[t], pairs[t].first);
    V = V.inverse();
    std::vector<std::string> gens;
    gens.push_back(xname);
    for (const auto& nm : ynames) gens.push_back(nm);
    std::vector<WirtingerLink> links;
    links.push_back({0, V, 1});  // x -> y_1 by y^l = V^{l*l} = V
    for (std::size_t t = 2; t <= k; ++t)
        links.push_back({t - 1, V.pow(-l * pairs[t - 2].second), t});
    WirtingerPresentation wp = make_wirtinger(std::move(gens), std::move(links), false);
    return wp;
}

// The BS(m, m+1) pipeline: the two-generator cyclic chain with
// w_1 = (y_2^-1 y_1)^m, its Corollary-2 closure, and the synthesized code
// (4|m| crossings, two segments).
struct BSVirtualKnot {
    WirtingerPresentation presentation;  // the open chain < y1, y2 | r_1 >
    WirtingerPresentation closed;
    KnotCode code;
};

inline BSVirtualKnot bs_virtual_code(long long m) {
    if (m == 0) throw precondition_error("m must be nonzero");
    Word w1 = (Word::generator("y2", -1) * Word::generator("y1")).pow(m);
    BSVirtualKnot out;
    out.presentation = make_wirtinger({"y1", "y2"}, {{0, w1, 1}}, false);
    out.closed = close_deficiency_one(out.presentation);
    out.code = cyclic_wirtinger_to_code(out.closed);
    return out;
}

}  // namespace vknot
