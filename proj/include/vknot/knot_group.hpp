#pragma once

// The group of a knot code, in two presentations:
//   * arc presentation — one generator per arc S_i of the standard normal
//     form, relator j conjugating S_j to S_{j+1} by the arc passing over
//     undercrossing j;
//   * over presentation — one generator per segment of the bridge
//     decomposition, relator t conjugating y_t to y_{t+1} by the word w_t of
//     bridge generators passing over under-run t;
// plus the peripheral pair (longitude, meridian) read off the over
// presentation.

#include <string>
#include <vector>

#include "errors.hpp"
#include "knot_code.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace vknot {

namespace detail {

inline std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

}  // namespace detail

// Generators S1..Sn; relator j links S_j to S_{j+1} (cyclically) with
// conjugator S_{t_j}^{e_{j+1}} where +j lies inside arc t_j and the exponent
// is the sign of the cyclically-next crossing.  The trivial code gives
// < S1 | >.
inline WirtingerPresentation arc_presentation(const KnotCode& k) {
    if (k.is_trivial()) {
        WirtingerPresentation wp;
        wp.base.generators = {"S1"};
        return wp;
    }
    KnotCode snf = standard_normal_form(k);
    ArcDecomposition arcs = arc_decomposition(snf);
    const std::size_t n = snf.size();
    std::vector<WirtingerLink> links;
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < n && t == 0; ++i)
            for (long long v : arcs.arcs[i])
                if (v == static_cast<long long>(j)) { t = i + 1; break; }
        if (t == 0)
            throw internal_error("overcrossing " + std::to_string(j) + " not inside any arc");
        int eps = snf.signs[j % n];  // sign of crossing j+1, cyclically
        links.push_back({j - 1, Word::generator("S" + std::to_string(t), eps), j % n});
    }
    return make_wirtinger(detail::numbered_names("S", n), std::move(links), true);
}

// Generators y1..ym, one per segment; w_t collects, in traversal order, the
// segment generators passing over under-run t with the crossing signs as
// exponents.  The trivial code gives < y1 | >.
inline WirtingerPresentation over_presentation(const KnotCode& k) {
    if (k.is_trivial()) {
        WirtingerPresentation wp;
        wp.base.generators = {"y1"};
        return wp;
    }
    BridgeDecomposition bd = bridge_decomposition(k);
    const std::size_t m = bd.segment_count;
    const std::size_t n = bd.code.size();
    // Which segment's A-list an overcrossing label belongs to.
    std::vector<std::size_t> segment_of(n + 1, 0);
    for (std::size_t t = 0; t < m; ++t)
        for (long long v : bd.bridges[t])
            if (v > 0) segment_of[v] = t + 1;
    std::vector<WirtingerLink> links;
    for (std::size_t t = 0; t < m; ++t) {
        Word w;
        for (long long a : bd.under_runs[t]) {
            if (segment_of[a] == 0)
                throw internal_error("overcrossing " + std::to_string(a) +
                                     " not inside any segment");
            w *= Word::generator("y" + std::to_string(segment_of[a]), bd.code.signs[a - 1]);
        }
        links.push_back({t, w, (t + 1) % m});
    }
    return make_wirtinger(detail::numbered_names("y", m), std::move(links), true);
}

struct PeripheralPair {
    Word longitude;
    std::string meridian;
    long long writhe_p = 0;
    friend bool operator==(const PeripheralPair&, const PeripheralPair&) = default;
};

// l = w_1 w_2 ... w_m * meridian^-p with p the sign sum and meridian y1;
// the reduced longitude always has total exponent sum 0.
inline PeripheralPair peripheral_pair(const KnotCode& k) {
    if (k.is_trivial())
        throw precondition_error("peripheral pair of the trivial code is undefined");
    WirtingerPresentation over = over_presentation(k);
    PeripheralPair pp;
    pp.meridian = over.base.generators.front();
    for (int s : k.signs) pp.writhe_p += s;
    Word l;
    for (const auto& link : over.links) l *= link.conjugator;
    l *= Word::generator(pp.meridian, 1).pow(-pp.writhe_p);
    pp.longitude = l;
    if (pp.longitude.total_exponent() != 0)
        throw internal_error("longitude fails to lie in the commutator subgroup");
    return pp;
}

}  // namespace vknot
