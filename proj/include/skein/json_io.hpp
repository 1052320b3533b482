#pragma once

// JSON forms. Laurent polynomials are objects from exponent strings to
// integer coefficients, {"-2": -1, "2": -1}; coefficients too large for a
// 64-bit integer are written as decimal strings.

#include <json.hpp>

#include <string>

#include "skein/bracket_planar.hpp"
#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/oriented.hpp"
#include "skein/skein_element.hpp"
#include "skein/torus_curves.hpp"

namespace skein {

using Json = nlohmann::json;

namespace detail {

inline Json bigint_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(c));
    return Json(c.str());
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t p = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (p == s.size()) throw ParseError("empty integer string");
        for (std::size_t i = p; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad integer string '" + s + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    }
    throw ParseError("expected an integer coefficient");
}

inline long long_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<long>();
}

}  // namespace detail

inline Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = detail::bigint_to_json(c);
    return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("Laurent polynomial must be a JSON object");
    LaurentPoly p;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        int e;
        try {
            e = std::stoi(k, &used);
        } catch (const std::exception&) {
            throw ParseError("bad exponent key '" + k + "'");
        }
        if (used != k.size()) throw ParseError("bad exponent key '" + k + "'");
        p.add_term(e, detail::bigint_from_json(v));
    }
    return p;
}

inline Json to_json(IntVec2 v) { return Json::array({v.a, v.b}); }

inline IntVec2 vec_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("curve class must be a two-element integer array");
    return {detail::long_from_json(j[0], "class coordinate"), detail::long_from_json(j[1], "class coordinate")};
}

inline Json to_json(const SkeinElement& x) {
    Json terms = Json::array();
    for (const auto& [cls, coeff] : x.terms())
        terms.push_back({{"class", cls.is_empty() ? Json("empty") : to_json(cls.vec())}, {"coeff", to_json(coeff)}});
    return {{"basis", basis_name(x.basis())}, {"terms", terms}};
}

inline SkeinElement skein_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms")) throw ParseError("skein element needs basis and terms");
    const std::string b = j.at("basis").get<std::string>();
    Basis basis;
    if (b == "standard")
        basis = Basis::Standard;
    else if (b == "chebyshev")
        basis = Basis::ChebyshevT;
    else
        throw ParseError("unknown basis '" + b + "'");
    SkeinElement out(basis);
    for (const auto& t : j.at("terms")) {
        const Json& c = t.at("class");
        UnorientedClass cls;
        if (c.is_string()) {
            if (c.get<std::string>() != "empty") throw ParseError("class must be [a,b] or \"empty\"");
        } else {
            const IntVec2 v = vec_from_json(c);
            if (!v.is_zero() && !in_canonical_half_plane(v)) throw ParseError("class " + format(v) + " is not canonical");
            cls = UnorientedClass::of(v);
        }
        out.add_term(cls, laurent_from_json(t.at("coeff")));
    }
    return out;
}

inline Json to_json(const OrientedElement& x) {
    Json terms = Json::array();
    for (const auto& [v, coeff] : x.terms()) terms.push_back({{"gamma", to_json(v)}, {"coeff", to_json(coeff)}});
    return {{"terms", terms}};
}

inline OrientedElement oriented_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms")) throw ParseError("oriented element needs terms");
    OrientedElement out;
    for (const auto& t : j.at("terms")) out.add_term(vec_from_json(t.at("gamma")), laurent_from_json(t.at("coeff")));
    return out;
}

inline Json to_json(const PDCode& pd) {
    Json xs = Json::array();
    for (const auto& x : pd.crossings) xs.push_back(Json::array({x[0], x[1], x[2], x[3]}));
    Json j = {{"crossings", xs}};
    if (pd.free_loops != 0) j["loops"] = pd.free_loops;
    return j;
}

inline PDCode pd_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("crossings")) throw ParseError("PD code needs a crossings array");
    PDCode pd;
    for (const auto& x : j.at("crossings")) {
        if (!x.is_array() || x.size() != 4) throw ParseError("each crossing must list four edge labels");
        pd.crossings.push_back({detail::long_from_json(x[0], "edge"), detail::long_from_json(x[1], "edge"),
                                detail::long_from_json(x[2], "edge"), detail::long_from_json(x[3], "edge")});
    }
    if (j.contains("loops")) pd.free_loops = detail::long_from_json(j.at("loops"), "loops");
    return pd;
}

}  // namespace skein
