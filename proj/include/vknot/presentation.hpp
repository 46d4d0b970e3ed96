#pragma once

// Finite group presentations, Wirtinger structure (relators of the shape
// w^-1 x_i w x_j^-1, with recovery of that shape from plain relators), and
// abelianization via Smith normal form of the exponent matrix.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "word.hpp"

namespace vknot {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::set<std::string> alphabet() const {
        return {generators.begin(), generators.end()};
    }

    // Generator names must be unique and every relator generator listed.
    void validate() const {
        std::set<std::string> seen;
        for (const auto& g : generators) {
            if (g.empty())
                throw validation_error("empty generator name");
            if (!seen.insert(g).second)
                throw validation_error("duplicate generator '" + g + "'");
        }
        for (std::size_t k = 0; k < relators.size(); ++k)
            for (const auto& g : relators[k].generators())
                if (!seen.count(g))
                    throw validation_error("relator " + std::to_string(k + 1) +
                                           " uses unlisted generator '" + g + "'");
    }

    std::string str() const {
        std::ostringstream out;
        out << "< ";
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (i) out << ", ";
            out << generators[i];
        }
        out << " | ";
        for (std::size_t i = 0; i < relators.size(); ++i) {
            if (i) out << ", ";
            out << relators[i].str();
        }
        out << " >";
        return out.str();
    }

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

// One relator of Wirtinger shape: conjugating generator #from by `conjugator`
// yields generator #to (indices 0-based into the generator list).
struct WirtingerLink {
    std::size_t from = 0;
    Word conjugator;
    std::size_t to = 0;
    friend bool operator==(const WirtingerLink&, const WirtingerLink&) = default;
};

inline Word wirtinger_relator(const std::vector<std::string>& gens,
                              const WirtingerLink& link) {
    Word xi = Word::generator(gens.at(link.from));
    Word xj = Word::generator(gens.at(link.to));
    return link.conjugator.inverse() * xi * link.conjugator * xj.inverse();
}

// A presentation all of whose relators have Wirtinger shape.  `cyclic` means
// there are as many relators as generators and relator k links generator k
// to generator k+1 (mod n).
struct WirtingerPresentation {
    Presentation base;
    std::vector<WirtingerLink> links;
    bool cyclic = false;

    friend bool operator==(const WirtingerPresentation&,
                           const WirtingerPresentation&) = default;
};

inline WirtingerPresentation make_wirtinger(std::vector<std::string> gens,
                                            std::vector<WirtingerLink> links,
                                            bool cyclic) {
    WirtingerPresentation wp;
    wp.base.generators = std::move(gens);
    for (const auto& l : links)
        wp.base.relators.push_back(wirtinger_relator(wp.base.generators, l));
    wp.links = std::move(links);
    wp.cyclic = cyclic;
    wp.base.validate();
    return wp;
}

// Try to recognize r as w^-1 x_i w x_j^-1 (up to free and cyclic reduction)
// for the given endpoints; returns the conjugator w on success.  Every
// cyclic rotation ending in x_j^-1 is tried, and the rotated body must peel
// symmetrically down to a single x_i^+1.
inline std::optional<Word> match_conjugation(const Word& r,
                                             const std::string& from,
                                             const std::string& to) {
    const auto ls = r.cyclically_reduced().letters();
    const std::size_t n = ls.size();
    if (n == 0)  // identity relator: x_i = x_j with trivial conjugator
        return from == to ? std::optional<Word>(Word()) : std::nullopt;
    if (n % 2 != 0) return std::nullopt;  // shape has even letter count
    for (std::size_t end = 0; end < n; ++end) {
        if (ls[end].first != to || ls[end].second != -1) continue;
        // Rotation placing position `end` last: body is the n-1 letters after it.
        std::vector<std::pair<std::string, int>> body;
        for (std::size_t k = 1; k < n; ++k) body.push_back(ls[(end + k) % n]);
        std::size_t lo = 0, hi = body.size();
        while (hi - lo > 1 && body[lo].first == body[hi - 1].first &&
               body[lo].second == -body[hi - 1].second) {
            ++lo;
            --hi;
        }
        if (hi - lo != 1 || body[lo].first != from || body[lo].second != 1)
            continue;
        Word w;
        for (std::size_t k = hi; k < body.size(); ++k)
            w *= Word::generator(body[k].first, body[k].second);
        return w;
    }
    return std::nullopt;
}

// Interpret a plain presentation as a cyclic Wirtinger presentation:
// n generators, n or n-1 relators, relator k conjugating generator k to
// generator k+1.  (With n-1 relators the result is a deficiency-1 chain.)
inline WirtingerPresentation wirtinger_from_presentation(const Presentation& p) {
    p.validate();
    const std::size_t n = p.generators.size();
    if (n == 0) throw precondition_error("presentation has no generators");
    if (p.relators.size() != n && p.relators.size() + 1 != n)
        throw precondition_error(
            "a cyclic Wirtinger presentation on " + std::to_string(n) +
            " generators needs " + std::to_string(n) + " or " +
            std::to_string(n - 1) + " relators, got " +
            std::to_string(p.relators.size()));
    WirtingerPresentation wp;
    wp.base = p;
    wp.cyclic = p.relators.size() == n;
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        const std::string& from = p.generators[k];
        const std::string& to = p.generators[(k + 1) % n];
        auto w = match_conjugation(p.relators[k], from, to);
        if (!w)
            throw precondition_error("relator " + std::to_string(k + 1) +
                                     " does not conjugate " + from + " to " + to);
        wp.links.push_back({k, *w, (k + 1) % n});
    }
    return wp;
}

// ---- abelianization ------------------------------------------------------

struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion;  // entries > 1, each dividing the next
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

    std::string str() const {
        if (free_rank == 0 && torsion.empty()) return "trivial";
        std::ostringstream out;
        bool first = true;
        for (long long i = 0; i < free_rank; ++i) {
            if (!first) out << " + ";
            out << "Z";
            first = false;
        }
        for (const auto& d : torsion) {
            if (!first) out << " + ";
            out << "Z/" << d;
            first = false;
        }
        return out.str();
    }
};

// Diagonal of the Smith normal form of an integer matrix (zeros included).
inline std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> diag;
    std::size_t top = 0;
    auto abs_of = [](const Int& v) { return v < 0 ? Int(-v) : v; };
    while (top < rows && top < cols) {
        // Find the nonzero entry of least magnitude in the remaining block.
        std::size_t pr = top, pc = top;
        Int best = 0;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_of(m[i][j]) < best)) {
                    best = abs_of(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[top], m[pr]);
        for (std::size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][pc]);
        bool clean = true;
        for (std::size_t i = top + 1; i < rows; ++i)
            if (m[i][top] != 0) {
                Int q = m[i][top] / m[top][top];
                for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
                if (m[i][top] != 0) clean = false;
            }
        for (std::size_t j = top + 1; j < cols; ++j)
            if (m[top][j] != 0) {
                Int q = m[top][j] / m[top][top];
                for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
                if (m[top][j] != 0) clean = false;
            }
        if (!clean) continue;  // smaller pivot appeared; redo this block
        // Enforce divisibility of the remaining block by the pivot.
        bool divides_all = true;
        for (std::size_t i = top + 1; i < rows && divides_all; ++i)
            for (std::size_t j = top + 1; j < cols && divides_all; ++j)
                if (m[i][j] % m[top][top] != 0) {
                    for (std::size_t jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
                    divides_all = false;
                }
        if (!divides_all) continue;
        ++top;
    }
    for (std::size_t k = 0; k < std::min(rows, cols); ++k)
        diag.push_back(k < top ? abs_of(m[k][k]) : Int(0));
    return diag;
}

inline AbelianInvariants abelian_invariants(const Presentation& p) {
    p.validate();
    std::vector<std::vector<Int>> m;
    for (const auto& r : p.relators) {
        std::vector<Int> row;
        for (const auto& g : p.generators) row.push_back(Int(r.exponent_sum(g)));
        m.push_back(std::move(row));
    }
    AbelianInvariants inv;
    if (p.relators.empty()) {
        inv.free_rank = static_cast<long long>(p.generators.size());
        return inv;
    }
    std::vector<Int> diag = smith_diagonal(std::move(m));
    long long rank = 0;
    for (const auto& d : diag)
        if (d != 0) {
            ++rank;
            if (d > 1) inv.torsion.push_back(d);
        }
    inv.free_rank = static_cast<long long>(p.generators.size()) - rank;
    return inv;
}

// Abelianization of a two-generator one-relator group, reported as
// (free_rank, torsion): (2, 0) when both exponent sums vanish, otherwise
// (1, gcd) with gcd = 1 meaning the group abelianizes to Z.
inline std::pair<long long, Int> abelianization_two_gen(const Presentation& p) {
    p.validate();
    if (p.generators.size() != 2 || p.relators.size() != 1)
        throw precondition_error("expected two generators and one relator, got " +
                                 std::to_string(p.generators.size()) + " and " +
                                 std::to_string(p.relators.size()));
    Int lx = p.relators[0].exponent_sum(p.generators[0]);
    Int ly = p.relators[0].exponent_sum(p.generators[1]);
    if (lx == 0 && ly == 0) return {2, 0};
    return {1, boost::multiprecision::gcd(lx < 0 ? Int(-lx) : lx,
                                          ly < 0 ? Int(-ly) : ly)};
}

}  // namespace vknot
