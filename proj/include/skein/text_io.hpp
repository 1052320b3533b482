#pragma once

// Text forms of skein and oriented elements.
//
//   standard:   "-2 + (2,0)",  "A (1,-1) + A^-1 (1,1)"
//   chebyshev:  "A (1,-1)_T + A^-1 (1,1)_T"
//   oriented:   "A^-1 g(1,1)",  "g(2,0) + 2 + g(-2,0)"
//
// A bare coefficient is a multiple of the empty curve. Coefficients with
// more than one term are parenthesized: "(A^2 + A^-2) (1,0)".

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/oriented.hpp"
#include "skein/skein_element.hpp"
#include "skein/torus_curves.hpp"

namespace skein {

namespace detail {

/// Appends one term of a linear combination. An empty key means the unit.
inline void write_term(std::ostringstream& os, const LaurentPoly& coeff, const std::string& key, bool first,
                       bool only_term) {
    if (coeff.is_monomial()) {
        const auto& [e, c] = *coeff.terms().begin();
        const bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        const BigInt mag = negative ? BigInt(-c) : c;
        if (key.empty()) {
            write_monomial_body(os, mag, e);
        } else {
            if (!(mag == 1 && e == 0)) {
                write_monomial_body(os, mag, e);
                os << ' ';
            }
            os << key;
        }
        return;
    }
    if (!first) os << " + ";
    if (key.empty() && only_term) {
        os << format(coeff);
        return;
    }
    os << '(' << format(coeff) << ')';
    if (!key.empty()) os << ' ' << key;
}

struct ParsedTerm {
    LaurentPoly coeff;
    bool has_key = false;
    IntVec2 vec;
    bool chebyshev_suffix = false;
    bool gamma_prefix = false;
};

/// True if the '(' at the cursor opens an integer pair rather than a
/// parenthesized coefficient.
inline bool at_vector(Scanner& s) {
    if (s.peek() != '(') return false;
    const std::string_view t = s.text();
    for (std::size_t p = s.offset() + 1; p < t.size(); ++p) {
        if (t[p] == ',') return true;
        if (t[p] == ')') return false;
    }
    return false;
}

inline bool parse_key(Scanner& s, ParsedTerm& term) {
    if (s.peek() == 'g') {
        s.accept('g');
        if (s.peek() != '(') s.fail("expected '(' after 'g'");
        term.vec = parse_vec_body(s);
        term.has_key = true;
        term.gamma_prefix = true;
        return true;
    }
    if (s.peek() == 'e') {
        for (char c : std::string_view("empty"))
            if (!s.accept(c)) s.fail("expected 'empty'");
        term.has_key = true;
        term.vec = {0, 0};
        return true;
    }
    if (at_vector(s)) {
        term.vec = parse_vec_body(s);
        term.has_key = true;
        if (s.peek_raw() == '_') {
            s.accept('_');
            if (s.peek_raw() != 'T') s.fail("expected 'T' after '_'");
            s.accept('T');
            term.chebyshev_suffix = true;
        }
        return true;
    }
    return false;
}

inline std::vector<ParsedTerm> parse_terms(std::string_view text) {
    Scanner s(text);
    std::vector<ParsedTerm> terms;
    if (s.at_end()) throw ParseError("empty element", 0);
    bool first = true;
    while (!s.at_end()) {
        bool negative = false;
        if (s.accept('-'))
            negative = true;
        else if (!s.accept('+') && !first)
            s.fail("expected '+' or '-' between terms");
        first = false;

        ParsedTerm term;
        bool have_coeff = false;
        if (s.peek() == '(' && !at_vector(s)) {
            s.accept('(');
            term.coeff = parse_laurent_sum(s);
            s.expect(')');
            have_coeff = true;
        } else {
            BigInt c;
            int e;
            if (parse_monomial_body(s, c, e)) {
                term.coeff = LaurentPoly::monomial(c, e);
                have_coeff = true;
            }
        }
        if (!have_coeff) term.coeff = LaurentPoly(1);
        if (have_coeff && s.accept('*') && !parse_key(s, term)) s.fail("expected a curve after '*'");
        if (!term.has_key && !parse_key(s, term) && !have_coeff) s.fail("expected a coefficient or a curve");
        if (negative) term.coeff = -term.coeff;
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace detail

/// Parses a skein element. Curves written "(a,b)_T" select the Chebyshev
/// basis; unsuffixed curves take `default_basis`.
inline SkeinElement parse_skein(std::string_view text, Basis default_basis = Basis::Standard) {
    const auto terms = detail::parse_terms(text);
    bool any_suffix = false;
    bool any_plain = false;
    for (const auto& t : terms) {
        if (t.gamma_prefix) throw ParseError("oriented curve in a skein element");
        if (t.has_key && !t.vec.is_zero()) (t.chebyshev_suffix ? any_suffix : any_plain) = true;
    }
    if (any_suffix && any_plain) throw ParseError("element mixes (a,b) and (a,b)_T curves");
    const Basis basis = any_suffix ? Basis::ChebyshevT : default_basis;
    SkeinElement out(basis);
    for (const auto& t : terms) {
        if (!t.has_key || t.vec.is_zero()) {
            // (0,0)_T is 2 by convention; a plain (0,0) is the empty curve.
            const bool doubled = t.has_key && t.chebyshev_suffix;
            out.add_term(UnorientedClass::empty(), doubled ? LaurentPoly(2) * t.coeff : t.coeff);
        } else {
            out.add_term(UnorientedClass::of(t.vec), t.coeff);
        }
    }
    return out;
}

inline OrientedElement parse_oriented(std::string_view text) {
    OrientedElement out;
    for (const auto& t : detail::parse_terms(text)) {
        if (t.chebyshev_suffix) throw ParseError("Chebyshev curve in an oriented element");
        out.add_term(t.has_key ? t.vec : IntVec2{0, 0}, t.coeff);
    }
    return out;
}

inline std::string format(const SkeinElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [cls, coeff] : x.terms()) {
        std::string key;
        if (!cls.is_empty()) key = format(cls.vec()) + (x.basis() == Basis::ChebyshevT ? "_T" : "");
        detail::write_term(os, coeff, key, first, x.terms().size() == 1);
        first = false;
    }
    return os.str();
}

inline std::string format(const OrientedElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, coeff] : x.terms()) {
        const std::string key = v.is_zero() ? std::string() : "g" + format(v);
        detail::write_term(os, coeff, key, first, x.terms().size() == 1);
        first = false;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const SkeinElement& x) { return os << format(x); }
inline std::ostream& operator<<(std::ostream& os, const OrientedElement& x) { return os << format(x); }

}  // namespace skein
