#pragma once

// The integral group ring ZF of a free group: finite formal sums of reduced
// words with integer coefficients.  This is the ring the Fox derivative acts
// on; multiplication is the convolution induced by word concatenation.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "word.hpp"

namespace vknot {

class GroupRingElem {
public:
    GroupRingElem() = default;
    GroupRingElem(const Int& c) { if (c != 0) terms_[Word()] = c; }
    GroupRingElem(long long c) : GroupRingElem(Int(c)) {}
    GroupRingElem(const Word& w) { terms_[w] = 1; }

    static GroupRingElem term(const Int& c, const Word& w) {
        GroupRingElem e;
        if (c != 0) e.terms_[w] = c;
        return e;
    }

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Image under the augmentation g -> 1 (sum of coefficients).
    Int augmentation() const {
        Int s = 0;
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    GroupRingElem& operator+=(const GroupRingElem& o) {
        for (const auto& [w, c] : o.terms_) {
            Int& slot = terms_[w];
            slot += c;
            if (slot == 0) terms_.erase(w);
        }
        return *this;
    }
    GroupRingElem& operator-=(const GroupRingElem& o) {
        for (const auto& [w, c] : o.terms_) {
            Int& slot = terms_[w];
            slot -= c;
            if (slot == 0) terms_.erase(w);
        }
        return *this;
    }
    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    friend GroupRingElem operator-(const GroupRingElem& a) {
        GroupRingElem e;
        for (const auto& [w, c] : a.terms_) e.terms_[w] = -c;
        return e;
    }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem e;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa * wb;
                Int& slot = e.terms_[w];
                slot += ca * cb;
                if (slot == 0) e.terms_.erase(w);
            }
        return e;
    }
    friend GroupRingElem operator*(const Int& c, const GroupRingElem& a) {
        GroupRingElem e;
        if (c != 0)
            for (const auto& [w, v] : a.terms_) e.terms_[w] = c * v;
        return e;
    }
    friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

    // Terms ordered by word length, then by rendered word; "0" when empty.
    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::pair<Word, Int>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            if (a.first.length() != b.first.length())
                return a.first.length() < b.first.length();
            return a.first.str() < b.first.str();
        });
        std::ostringstream out;
        bool first = true;
        for (const auto& [w, c] : ordered) {
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (w.is_identity()) out << mag;
            else if (mag == 1) out << w.str();
            else out << mag << "*" << w.str();
        }
        return out.str();
    }

private:
    std::map<Word, Int> terms_;
};

}  // namespace vknot
