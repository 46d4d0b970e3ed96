#pragma once

// JSON bindings (nlohmann::json).  Input schemas:
//   KnotCode      {"crossings": [-1, 2, ...], "signs": [-1, 1, ...]}
//   Presentation  {"generators": ["x", "y"], "relators": ["x y^3 x^-1 y^-4"]}
// Everything else is output-only; words and polynomials appear as their
// canonical text renderings, link indices are 1-based.

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "invariants.hpp"
#include "knot_code.hpp"
#include "knot_group.hpp"
#include "laurent.hpp"
#include "presentation.hpp"
#include "schubert.hpp"
#include "synthesis.hpp"
#include "word.hpp"

namespace vknot {

namespace detail {

inline nlohmann::json int_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const KnotCode& k) {
    j = {{"crossings", k.crossings}, {"signs", k.signs}};
}

inline void from_json(const nlohmann::json& j, KnotCode& k) {
    std::vector<long long> crossings = j.at("crossings").get<std::vector<long long>>();
    std::vector<int> signs = j.at("signs").get<std::vector<int>>();
    k = validate_code(crossings, signs);
}

inline void to_json(nlohmann::json& j, const Presentation& p) {
    std::vector<std::string> relators;
    for (const auto& r : p.relators) relators.push_back(r.str());
    j = {{"generators", p.generators}, {"relators", relators}};
}

inline void from_json(const nlohmann::json& j, Presentation& p) {
    p.generators = j.at("generators").get<std::vector<std::string>>();
    p.relators.clear();
    Presentation shell{p.generators, {}};
    shell.validate();
    for (const auto& r : j.at("relators"))
        p.relators.push_back(parse_word(r.get<std::string>(), shell.alphabet()));
}

inline void to_json(nlohmann::json& j, const WirtingerLink& l) {
    j = {{"from", l.from + 1}, {"conjugator", l.conjugator.str()}, {"to", l.to + 1}};
}

inline void to_json(nlohmann::json& j, const WirtingerPresentation& wp) {
    j = {{"presentation", wp.base}, {"links", wp.links}, {"cyclic", wp.cyclic}};
}

inline void to_json(nlohmann::json& j, const ArcDecomposition& d) {
    j = {{"arcs", d.arcs}};
}

inline void to_json(nlohmann::json& j, const BridgeDecomposition& d) {
    j = {{"code", d.code},
         {"bridges", d.bridges},
         {"under_runs", d.under_runs},
         {"segment_count", d.segment_count},
         {"bridge_count", d.bridge_count}};
}

inline void to_json(nlohmann::json& j, const PeripheralPair& pp) {
    j = {{"longitude", pp.longitude.str()},
         {"meridian", pp.meridian},
         {"writhe_p", pp.writhe_p}};
}

inline void to_json(nlohmann::json& j, const AbelianInvariants& a) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& d : a.torsion) torsion.push_back(detail::int_json(d));
    j = {{"free_rank", a.free_rank}, {"torsion", torsion}};
}

inline void to_json(nlohmann::json& j, const BlockForm& bf) {
    j = {{"n", bf.n}, {"exponents", bf.exponents}};
}

inline void to_json(nlohmann::json& j, const SchubertSValue& s) {
    j = {{"s", s.s}, {"case", s.case_sign}};
}

inline void to_json(nlohmann::json& j, const MurasugiResult& m) {
    const char* kind = "";
    switch (m.kind) {
        case MurasugiKind::fails_deg0: kind = "fails_deg0"; break;
        case MurasugiKind::deg1_matches: kind = "deg1_matches"; break;
        case MurasugiKind::deg1_no_match: kind = "deg1_no_match"; break;
        case MurasugiKind::divides_power: kind = "divides_power"; break;
        case MurasugiKind::no_divisor: kind = "no_divisor"; break;
    }
    j = {{"kind", kind}, {"description", m.str()}};
    if (m.kind == MurasugiKind::divides_power) j["r"] = m.r;
    if (m.kind == MurasugiKind::divides_power || m.kind == MurasugiKind::no_divisor)
        j["r_max"] = m.r_max;
}

inline void to_json(nlohmann::json& j, const BSReport& r) {
    j = {{"m", r.m},
         {"n", r.n},
         {"residually_finite", r.residually_finite},
         {"hopfian", r.hopfian},
         {"abelianization",
          {{"free_rank", r.abelianization.first},
           {"torsion", detail::int_json(r.abelianization.second)}}},
         {"virtual_knot_group", r.is_virtual_knot_group},
         {"center", r.center_str()}};
}

}  // namespace vknot
