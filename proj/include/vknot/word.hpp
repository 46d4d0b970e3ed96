#pragma once

// Words in a free group, stored in reduced syllable form: a sequence of
// (generator, nonzero exponent) pairs with no two adjacent pairs sharing a
// generator.  All operations preserve this normal form, so equality of Word
// values is equality in the free group.
//
// Text format: syllables separated by whitespace, each "g" or "g^k" with a
// (possibly negative) integer k; the identity is written "1".
// Example: "x y^3 x^-1 y^-4".

#include <cctype>
#include <compare>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace vknot {

struct Syllable {
    std::string gen;
    long long exp = 0;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Word {
public:
    Word() = default;

    static Word generator(const std::string& name, long long exp = 1) {
        Word w;
        if (exp != 0) w.syllables_.push_back({name, exp});
        return w;
    }

    static Word from_syllables(const std::vector<Syllable>& raw) {
        Word w;
        for (const auto& s : raw) w.append(s.gen, s.exp);
        return w;
    }

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }

    // Number of letters, counting multiplicity: sum of |exp|.
    long long length() const {
        long long n = 0;
        for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
        return n;
    }

    long long exponent_sum(const std::string& gen) const {
        long long n = 0;
        for (const auto& s : syllables_)
            if (s.gen == gen) n += s.exp;
        return n;
    }

    // Sum of all exponents (the image under g -> 1 for every generator g).
    long long total_exponent() const {
        long long n = 0;
        for (const auto& s : syllables_) n += s.exp;
        return n;
    }

    std::set<std::string> generators() const {
        std::set<std::string> names;
        for (const auto& s : syllables_) names.insert(s.gen);
        return names;
    }

    Word& operator*=(const Word& o) {
        for (const auto& s : o.syllables_) append(s.gen, s.exp);
        return *this;
    }
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    Word inverse() const {
        Word w;
        for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
            w.syllables_.push_back({it->gen, -it->exp});
        return w;
    }

    Word pow(long long k) const {
        if (k == 0) return Word();
        Word base = k < 0 ? inverse() : *this;
        long long n = k < 0 ? -k : k;
        Word acc;
        for (long long i = 0; i < n; ++i) acc *= base;
        return acc;
    }

    // c^-1 * w * c.
    Word conjugated_by(const Word& c) const { return c.inverse() * *this * c; }

    // Replace every occurrence of `gen` (with exponent e) by `replacement^e`.
    Word substituted(const std::string& gen, const Word& replacement) const {
        Word w;
        for (const auto& s : syllables_) {
            if (s.gen == gen) w *= replacement.pow(s.exp);
            else w.append(s.gen, s.exp);
        }
        return w;
    }

    // Strip matching inverse letters from the two ends until none remain.
    Word cyclically_reduced() const {
        std::vector<std::pair<std::string, int>> ls = letters();
        std::size_t lo = 0, hi = ls.size();
        while (hi - lo >= 2 && ls[lo].first == ls[hi - 1].first &&
               ls[lo].second == -ls[hi - 1].second) {
            ++lo;
            --hi;
        }
        Word w;
        for (std::size_t i = lo; i < hi; ++i) w.append(ls[i].first, ls[i].second);
        return w;
    }

    // The word expanded letter by letter, each exponent +-1.
    std::vector<std::pair<std::string, int>> letters() const {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& s : syllables_) {
            long long n = s.exp < 0 ? -s.exp : s.exp;
            int sign = s.exp < 0 ? -1 : 1;
            for (long long i = 0; i < n; ++i) out.emplace_back(s.gen, sign);
        }
        return out;
    }

    std::string str() const {
        if (is_identity()) return "1";
        std::ostringstream out;
        for (std::size_t i = 0; i < syllables_.size(); ++i) {
            if (i) out << " ";
            out << syllables_[i].gen;
            if (syllables_[i].exp != 1) out << "^" << syllables_[i].exp;
        }
        return out.str();
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    void append(const std::string& gen, long long exp) {
        if (exp == 0) return;
        if (!syllables_.empty() && syllables_.back().gen == gen) {
            syllables_.back().exp += exp;
            if (syllables_.back().exp == 0) syllables_.pop_back();
            return;
        }
        syllables_.push_back({gen, exp});
    }

    std::vector<Syllable> syllables_;
};

namespace detail {

inline bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
inline bool is_ident_char(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}

}  // namespace detail

// Parse the word grammar above.  When `alphabet` is nonempty, every
// generator must belong to it.  Errors carry 1-based character positions.
inline Word parse_word(const std::string& text,
                       const std::set<std::string>& alphabet = {}) {
    auto fail = [&](std::size_t pos, const std::string& msg) -> void {
        throw validation_error("word parse error at position " +
                               std::to_string(pos + 1) + ": " + msg);
    };

    std::vector<Syllable> raw;
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool saw_one = false;
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] == '1') {
            // "1" denotes the identity and must stand alone.
            saw_one = true;
            ++i;
            if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
                fail(i, "unexpected character after '1'");
            continue;
        }
        if (!detail::is_ident_start(text[i]))
            fail(i, std::string("expected a generator name, found '") + text[i] + "'");
        std::size_t start = i;
        while (i < n && detail::is_ident_char(text[i])) ++i;
        std::string name = text.substr(start, i - start);
        if (!alphabet.empty() && !alphabet.count(name))
            fail(start, "unknown generator '" + name + "'");
        long long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            std::size_t estart = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(text[estart]))))
                fail(estart, "expected an integer exponent");
            exp = std::strtoll(text.substr(estart, i - estart).c_str(), nullptr, 10);
        }
        raw.push_back({name, exp});
    }
    if (saw_one && !raw.empty())
        fail(0, "'1' cannot be combined with other syllables");
    if (!saw_one && raw.empty())
        fail(0, "empty word (use '1' for the identity)");
    return Word::from_syllables(raw);
}

}  // namespace vknot
