#pragma once

// Random generators and independent reference computations shared by the
// unit tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <vector>

#include "skein/skein.hpp"

namespace skein::testing {

using Rational = boost::multiprecision::cpp_rational;

/// Evaluates p at a nonzero rational point. Evaluation is a ring map, so it
/// checks products and sums without going through the term-map code.
inline Rational evaluate(const LaurentPoly& p, const Rational& a) {
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = 1;
        const Rational base = e >= 0 ? a : Rational(1) / a;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) t *= base;
        acc += Rational(c) * t;
    }
    return acc;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 5, int exp_range = 8) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<int> big(0, 9);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        BigInt c = coeff(rng);
        if (big(rng) == 0) c *= BigInt("123456789012345678901234567890");
        p.add_term(exp(rng), c);
    }
    return p;
}

inline LaurentPoly random_nonzero_laurent(std::mt19937_64& rng) {
    for (;;) {
        LaurentPoly p = random_laurent(rng, 3, 4);
        if (!p.is_zero()) return p;
    }
}

/// Random multicurve class n*(p,q) with |np|,|nq| <= bound and n <= max_mult,
/// or the empty curve.
inline UnorientedClass random_class(std::mt19937_64& rng, long bound = 6, long max_mult = 4) {
    std::uniform_int_distribution<long> coord(-bound, bound);
    std::uniform_int_distribution<long> mult(1, max_mult);
    std::uniform_int_distribution<int> empty(0, 9);
    if (empty(rng) == 0) return UnorientedClass::empty();
    for (;;) {
        const IntVec2 v{coord(rng), coord(rng)};
        if (v.is_zero()) continue;
        const auto [n0, prim] = split_vector(v);
        const long n = mult(rng);
        const IntVec2 w = n * prim;
        if (std::labs(w.a) <= bound && std::labs(w.b) <= bound) return UnorientedClass::of(w);
    }
}

inline SkeinElement random_skein(std::mt19937_64& rng, Basis basis, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    SkeinElement e(basis);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) e.add_term(random_class(rng), random_nonzero_laurent(rng));
    return e;
}

inline OrientedElement random_oriented(std::mt19937_64& rng, long bound = 4, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> coord(-bound, bound);
    OrientedElement e;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) e.add_term({coord(rng), coord(rng)}, random_nonzero_laurent(rng));
    return e;
}

}  // namespace skein::testing

namespace skein::testing {

inline Rational rational_power(const Rational& x, long e) {
    Rational r = 1;
    const Rational base = e >= 0 ? x : Rational(1) / x;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return r;
}

/// At A = -1 the skein algebra of the torus becomes commutative: a curve
/// (p,q) acts as -(x^p y^q + x^-p y^-q) on abelian characters. This maps a
/// standard-basis element to a number for given rational x, y.
inline Rational character_value(const SkeinElement& s, const Rational& x, const Rational& y) {
    Rational acc = 0;
    for (const auto& [cls, coeff] : s.terms()) {
        Rational v = 1;
        if (!cls.is_empty()) {
            const auto [n, p] = split_primitive(cls);
            const Rational curve =
                -(rational_power(x, p.a) * rational_power(y, p.b) + rational_power(x, -p.a) * rational_power(y, -p.b));
            v = rational_power(curve, n);
        }
        acc += evaluate(coeff, Rational(-1)) * v;
    }
    return acc;
}

}  // namespace skein::testing
