#pragma once

// The oriented skein algebra of the torus. Every product of basis curves
// has a single oriented smoothing, so the algebra is a quantum torus on the
// monomials gamma_v, v in Z^2, with gamma_0 the empty curve.

#include <map>
#include <string>

#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_element.hpp"
#include "skein/torus_curves.hpp"

namespace skein {

/// Sign of the exponent in gamma_u * gamma_v = A^(sign * det(u,v)) gamma_{u+v}.
/// Tied to the chart orientation used by the smoothing oracle.
inline constexpr int kGammaExponentSign = -1;

class OrientedElement {
public:
    using TermMap = std::map<IntVec2, LaurentPoly>;

    OrientedElement() = default;

    static OrientedElement gamma(IntVec2 v, const LaurentPoly& coeff = LaurentPoly(1)) {
        OrientedElement e;
        e.add_term(v, coeff);
        return e;
    }

    static OrientedElement unit() { return gamma({0, 0}); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentPoly coeff(IntVec2 v) const {
        auto it = terms_.find(v);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add_term(IntVec2 v, const LaurentPoly& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(v, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    OrientedElement& operator+=(const OrientedElement& o) {
        for (const auto& [v, p] : o.terms_) add_term(v, p);
        return *this;
    }

    OrientedElement& operator-=(const OrientedElement& o) {
        for (const auto& [v, p] : o.terms_) add_term(v, -p);
        return *this;
    }

    friend OrientedElement operator+(OrientedElement x, const OrientedElement& y) { return x += y; }
    friend OrientedElement operator-(OrientedElement x, const OrientedElement& y) { return x -= y; }

    friend OrientedElement operator*(const LaurentPoly& k, const OrientedElement& x) {
        OrientedElement r;
        if (k.is_zero()) return r;
        for (const auto& [v, p] : x.terms_) r.add_term(v, k * p);
        return r;
    }

    friend bool operator==(const OrientedElement&, const OrientedElement&) = default;

private:
    TermMap terms_;
};

/// gamma_u * gamma_v = A^-det(u,v) gamma_{u+v}.
inline OrientedElement gamma_mul(IntVec2 u, IntVec2 v) {
    return OrientedElement::gamma(u + v, LaurentPoly::a_power(kGammaExponentSign * static_cast<int>(det2(u, v))));
}

inline OrientedElement mul(const OrientedElement& x, const OrientedElement& y) {
    OrientedElement out;
    for (const auto& [u, pu] : x.terms())
        for (const auto& [v, pv] : y.terms())
            out.add_term(u + v, (pu * pv).shifted(kGammaExponentSign * static_cast<int>(det2(u, v))));
    return out;
}

/// Orientation reversal gamma_v -> gamma_{-v}.
inline OrientedElement theta(const OrientedElement& x) {
    OrientedElement out;
    for (const auto& [v, p] : x.terms()) out.add_term(-v, p);
    return out;
}

inline bool is_symmetric(const OrientedElement& x) { return theta(x) == x; }

/// Sum over all orientations of each multicurve. n parallel copies of a
/// primitive curve contribute sum_k binom(n,k) gamma_{(2k-n) prim}, since
/// oppositely oriented parallel copies cancel with unit coefficient.
inline OrientedElement psi(const SkeinElement& x) {
    require_basis(x, Basis::Standard, "psi");
    OrientedElement out;
    for (const auto& [cls, coeff] : x.terms()) {
        if (cls.is_empty()) {
            out.add_term({0, 0}, coeff);
            continue;
        }
        const auto [n, prim] = split_primitive(cls);
        for (long k = 0; k <= n; ++k) {
            const BigInt b = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
            out.add_term((2 * k - n) * prim, LaurentPoly::monomial(b, 0) * coeff);
        }
    }
    return out;
}

/// psi on the Chebyshev basis: (v)_T -> gamma_v + gamma_{-v}.
inline OrientedElement psi_T(const SkeinElement& x) {
    require_basis(x, Basis::ChebyshevT, "psi_T");
    OrientedElement out;
    for (const auto& [cls, coeff] : x.terms()) {
        if (cls.is_empty()) {
            out.add_term({0, 0}, coeff);
            continue;
        }
        out.add_term(cls.vec(), coeff);
        out.add_term(-cls.vec(), coeff);
    }
    return out;
}

/// Inverse of psi_T on the orientation-symmetric part.
inline SkeinElement psi_inverse(const OrientedElement& x) {
    SkeinElement out(Basis::ChebyshevT);
    for (const auto& [v, p] : x.terms()) {
        if (p != x.coeff(-v))
            throw NotSymmetric("element is not orientation-symmetric: coefficient of gamma" + format(v) +
                               " differs from that of gamma" + format(-v));
        if (v.is_zero())
            out.add_term(UnorientedClass::empty(), p);
        else if (in_canonical_half_plane(v))
            out.add_term(UnorientedClass::of(v), p);
    }
    return out;
}

}  // namespace skein
