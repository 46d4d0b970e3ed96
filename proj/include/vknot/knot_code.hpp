#pragma once

// Knot codes and their combinatorics.  A code is a cyclic list of signed
// crossing labels — each label a occurring once as +a (overcrossing) and
// once as -a (undercrossing) — together with one sign per crossing.  The
// empty code ((),()) denotes the trivial knot.
//
// Compact text form: `code: -1 2 -3 1 -2 3 ; signs: - + +`.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace vknot {

struct KnotCode {
    std::vector<long long> crossings;
    std::vector<int> signs;

    std::size_t size() const { return signs.size(); }
    bool is_trivial() const { return crossings.empty(); }

    friend bool operator==(const KnotCode&, const KnotCode&) = default;
};

// Check the pairing invariant and bring arbitrary integer labels to the
// canonical range 1..n.  Codes already labeled exactly {1,...,n} are kept
// verbatim; otherwise labels are renumbered in order of first appearance and
// the sign list — given per label in ascending label order — is permuted to
// match.
inline KnotCode validate_code(const std::vector<long long>& crossings,
                              const std::vector<int>& signs) {
    std::map<long long, int> pos_count, neg_count;
    for (long long v : crossings) {
        if (v == 0) throw validation_error("crossing label 0 is not allowed");
        long long a = v < 0 ? -v : v;
        int& c = v > 0 ? pos_count[a] : neg_count[a];
        if (++c > 1)
            throw validation_error("signed label " + std::to_string(v > 0 ? a : -a) +
                                   " appears more than once");
        (v > 0 ? neg_count : pos_count).insert({a, 0});
    }
    for (const auto& [a, c] : pos_count) {
        if (c == 0)
            throw validation_error("label " + std::to_string(a) +
                                   " has an undercrossing but no overcrossing");
        if (neg_count.at(a) == 0)
            throw validation_error("label " + std::to_string(a) +
                                   " has an overcrossing but no undercrossing");
    }
    const std::size_t n = pos_count.size();
    if (signs.size() != n)
        throw validation_error("sign list has length " + std::to_string(signs.size()) +
                               " but the code has " + std::to_string(n) + " crossings");
    for (int s : signs)
        if (s != 1 && s != -1)
            throw validation_error("crossing signs must be +1 or -1");

    bool canonical = true;
    for (const auto& [a, c] : pos_count)
        if (a < 1 || a > static_cast<long long>(n)) { canonical = false; break; }
    KnotCode k;
    if (canonical) {
        k.crossings = crossings;
        k.signs = signs;
        return k;
    }
    // signs[i] belongs to the i-th smallest original label.
    std::map<long long, int> sign_of;
    std::size_t i = 0;
    for (const auto& [a, c] : pos_count) sign_of[a] = signs[i++];
    std::map<long long, long long> relabel;
    for (long long v : crossings) {
        long long a = v < 0 ? -v : v;
        relabel.emplace(a, static_cast<long long>(relabel.size()) + 1);
    }
    k.signs.resize(n);
    for (long long v : crossings) {
        long long a = v < 0 ? -v : v;
        k.crossings.push_back(v < 0 ? -relabel[a] : relabel[a]);
        k.signs[relabel[a] - 1] = sign_of[a];
    }
    return k;
}

// Is the code literally of the form (-1, A_1, -2, A_2, ..., -n, A_n) with
// only overcrossings inside the A_i?
inline bool is_standard_normal_form(const KnotCode& k) {
    if (k.is_trivial()) return true;
    if (k.crossings.front() != -1) return false;
    long long expect = 1;
    for (long long v : k.crossings)
        if (v < 0 && -v != expect++) return false;
    return expect == static_cast<long long>(k.size()) + 1;
}

// Rotate the cyclic list to begin at the first undercrossing and relabel
// crossings in order of first undercrossing encounter; idempotent on codes
// already in the form.
inline KnotCode standard_normal_form(const KnotCode& k) {
    if (k.is_trivial()) return k;
    const std::size_t len = k.crossings.size();
    std::size_t start = len;
    for (std::size_t i = 0; i < len; ++i)
        if (k.crossings[i] < 0) { start = i; break; }
    if (start == len)
        throw internal_error("valid nonempty code has no undercrossing");
    std::vector<long long> rotated;
    for (std::size_t i = 0; i < len; ++i) rotated.push_back(k.crossings[(start + i) % len]);
    std::map<long long, long long> relabel;
    for (long long v : rotated)
        if (v < 0) relabel.emplace(-v, static_cast<long long>(relabel.size()) + 1);
    KnotCode out;
    out.signs.resize(k.size());
    for (long long v : rotated) {
        long long a = v < 0 ? -v : v;
        out.crossings.push_back(v < 0 ? -relabel[a] : relabel[a]);
        out.signs[relabel[a] - 1] = k.signs[a - 1];
    }
    return out;
}

// The arcs S_i = (-i, A_i, -(i+1)) of a standard-form code, with S_n
// wrapping around to -1.
struct ArcDecomposition {
    std::vector<std::vector<long long>> arcs;
    friend bool operator==(const ArcDecomposition&, const ArcDecomposition&) = default;
};

inline ArcDecomposition arc_decomposition(const KnotCode& k) {
    if (!is_standard_normal_form(k))
        throw precondition_error("arc decomposition requires standard normal form");
    ArcDecomposition d;
    if (k.is_trivial()) return d;
    const std::size_t len = k.crossings.size();
    std::vector<std::size_t> neg_pos;
    for (std::size_t i = 0; i < len; ++i)
        if (k.crossings[i] < 0) neg_pos.push_back(i);
    const std::size_t n = k.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> arc;
        if (i + 1 < n) {
            for (std::size_t p = neg_pos[i]; p <= neg_pos[i + 1]; ++p)
                arc.push_back(k.crossings[p]);
        } else {
            for (std::size_t p = neg_pos[i]; p < len; ++p) arc.push_back(k.crossings[p]);
            arc.push_back(-1);
        }
        d.arcs.push_back(std::move(arc));
    }
    return d;
}

// Form (3): the cyclic list rotated and relabeled as
// (A_1, -1, ..., -a_1, A_2, -(a_1+1), ..., -a_2, ..., A_m, ..., -a_m),
// exposing one segment per maximal overcrossing run.  Bridges are the
// segments y_t = (last undercross before A_t, A_t, first undercross after);
// bridge_count counts only true bridges |y_t| > 2, segment_count all of them.
struct BridgeDecomposition {
    KnotCode code;  // the rotated, relabeled representative
    std::vector<std::vector<long long>> bridges;
    std::vector<std::vector<long long>> under_runs;
    std::size_t segment_count = 0;
    std::size_t bridge_count = 0;
    friend bool operator==(const BridgeDecomposition&, const BridgeDecomposition&) = default;
};

inline BridgeDecomposition bridge_decomposition(const KnotCode& k) {
    BridgeDecomposition d;
    if (k.is_trivial()) return d;
    const std::size_t len = k.crossings.size();
    // Start at the first overcrossing whose cyclic predecessor is an
    // undercrossing, i.e. at the beginning of a maximal overcrossing run.
    std::size_t start = len;
    for (std::size_t i = 0; i < len; ++i)
        if (k.crossings[i] > 0 && k.crossings[(i + len - 1) % len] < 0) { start = i; break; }
    if (start == len)
        throw internal_error("valid nonempty code has no overcrossing run boundary");
    std::vector<long long> rotated;
    for (std::size_t i = 0; i < len; ++i) rotated.push_back(k.crossings[(start + i) % len]);
    std::map<long long, long long> relabel;
    for (long long v : rotated)
        if (v < 0) relabel.emplace(-v, static_cast<long long>(relabel.size()) + 1);
    d.code.signs.resize(k.size());
    for (long long v : rotated) {
        long long a = v < 0 ? -v : v;
        d.code.crossings.push_back(v < 0 ? -relabel[a] : relabel[a]);
        d.code.signs[relabel[a] - 1] = k.signs[a - 1];
    }
    // Split into alternating over-runs A_t and under-runs.
    std::vector<std::vector<long long>> overs, unders;
    for (long long v : d.code.crossings) {
        if (v > 0) {
            if (unders.size() == overs.size()) overs.emplace_back();
            overs.back().push_back(v);
        } else {
            if (unders.size() < overs.size()) unders.emplace_back();
            unders.back().push_back(-v);
        }
    }
    if (overs.size() != unders.size())
        throw internal_error("segment split out of balance");
    d.segment_count = overs.size();
    d.under_runs = unders;
    for (std::size_t t = 0; t < overs.size(); ++t) {
        std::vector<long long> y;
        y.push_back(-unders[(t + overs.size() - 1) % overs.size()].back());
        for (long long v : overs[t]) y.push_back(v);
        y.push_back(-unders[t].front());
        if (y.size() > 2) ++d.bridge_count;
        d.bridges.push_back(std::move(y));
    }
    return d;
}

// ---- compact text form ----------------------------------------------------

inline std::string render_code_text(const KnotCode& k) {
    std::ostringstream out;
    out << "code:";
    for (long long v : k.crossings) out << " " << v;
    out << " ; signs:";
    for (int s : k.signs) out << " " << (s > 0 ? "+" : "-");
    return out.str();
}

// Parse `code: ... ; signs: ...`; signs accept "+", "-", "+1", "-1", "1".
inline KnotCode parse_code_text(const std::string& text) {
    auto pos_code = text.find("code:");
    auto pos_semi = text.find(';');
    auto pos_signs = text.find("signs:");
    if (pos_code == std::string::npos || pos_semi == std::string::npos ||
        pos_signs == std::string::npos || !(pos_code < pos_semi && pos_semi < pos_signs))
        throw validation_error("expected 'code: ... ; signs: ...'");
    std::istringstream cs(text.substr(pos_code + 5, pos_semi - pos_code - 5));
    std::vector<long long> crossings;
    std::string tok;
    while (cs >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            crossings.push_back(v);
        } catch (const std::exception&) {
            throw validation_error("bad crossing label '" + tok + "'");
        }
    }
    std::istringstream ss(text.substr(pos_signs + 6));
    std::vector<int> signs;
    while (ss >> tok) {
        if (tok == "+" || tok == "+1" || tok == "1") signs.push_back(1);
        else if (tok == "-" || tok == "-1") signs.push_back(-1);
        else throw validation_error("bad sign token '" + tok + "'");
    }
    return validate_code(crossings, signs);
}

}  // namespace vknot
