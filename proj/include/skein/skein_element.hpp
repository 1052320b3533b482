#pragma once

// Elements of the Kauffman bracket skein algebra of the torus, in the
// multicurve basis or the Chebyshev basis, and the fast product.

#include <map>
#include <string>
#include <utility>

#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/torus_curves.hpp"

namespace skein {

enum class Basis { Standard, ChebyshevT };

inline const char* basis_name(Basis b) { return b == Basis::Standard ? "standard" : "chebyshev"; }

/// Finite R-linear combination of multicurve classes. In the Chebyshev
/// basis the key n*(p,q) stands for (np,nq)_T = T_n((p,q)); the empty key
/// is the unit 1 in both bases.
class SkeinElement {
public:
    using TermMap = std::map<UnorientedClass, LaurentPoly>;

    explicit SkeinElement(Basis basis = Basis::Standard) : basis_(basis) {}

    /// Single basis element with unit coefficient.
    static SkeinElement basis_element(Basis basis, const UnorientedClass& c) {
        SkeinElement e(basis);
        e.add_term(c, LaurentPoly(1));
        return e;
    }

    static SkeinElement basis_element(Basis basis, IntVec2 v) { return basis_element(basis, UnorientedClass::of(v)); }

    static SkeinElement scalar(Basis basis, const LaurentPoly& c) {
        SkeinElement e(basis);
        e.add_term(UnorientedClass::empty(), c);
        return e;
    }

    Basis basis() const noexcept { return basis_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentPoly coeff(const UnorientedClass& c) const {
        auto it = terms_.find(c);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add_term(const UnorientedClass& c, const LaurentPoly& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(c, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SkeinElement& operator+=(const SkeinElement& o) {
        require_same_basis(o);
        for (const auto& [c, p] : o.terms_) add_term(c, p);
        return *this;
    }

    SkeinElement& operator-=(const SkeinElement& o) {
        require_same_basis(o);
        for (const auto& [c, p] : o.terms_) add_term(c, -p);
        return *this;
    }

    friend SkeinElement operator+(SkeinElement x, const SkeinElement& y) { return x += y; }
    friend SkeinElement operator-(SkeinElement x, const SkeinElement& y) { return x -= y; }

    friend SkeinElement operator*(const LaurentPoly& k, const SkeinElement& x) {
        SkeinElement r(x.basis_);
        if (k.is_zero()) return r;
        for (const auto& [c, p] : x.terms_) r.add_term(c, k * p);
        return r;
    }

    /// Coefficients under A -> A^-1.
    SkeinElement bar() const {
        SkeinElement r(basis_);
        for (const auto& [c, p] : terms_) r.terms_.emplace(c, p.bar());
        return r;
    }

    friend bool operator==(const SkeinElement& x, const SkeinElement& y) {
        return x.basis_ == y.basis_ && x.terms_ == y.terms_;
    }

private:
    void require_same_basis(const SkeinElement& o) const {
        if (o.basis_ != basis_)
            throw BasisMismatch(std::string("cannot combine ") + basis_name(basis_) + " and " + basis_name(o.basis_) +
                                " elements");
    }

    Basis basis_;
    TermMap terms_;
};

inline void require_basis(const SkeinElement& x, Basis expected, const char* op) {
    if (x.basis() != expected)
        throw BasisMismatch(std::string(op) + " expects a " + basis_name(expected) + " element, got " +
                            basis_name(x.basis()));
}

/// (a,b)_T expanded in the multicurve basis: T_n evaluated at the primitive
/// curve, where powers of a curve are parallel copies and constants are
/// multiples of the empty curve. (0,0)_T is 2.
inline SkeinElement chebyshev_of(IntVec2 v) {
    SkeinElement out(Basis::Standard);
    if (v.is_zero()) {
        out.add_term(UnorientedClass::empty(), LaurentPoly(2));
        return out;
    }
    const auto [n, prim] = split_vector(v);
    const IntPoly t = cheb_T(static_cast<unsigned>(n));
    for (std::size_t k = 0; k < t.coeffs().size(); ++k) {
        const BigInt& c = t.coeffs()[k];
        if (c == 0) continue;
        out.add_term(UnorientedClass::of(static_cast<long>(k) * prim), LaurentPoly::monomial(c, 0));
    }
    return out;
}

inline SkeinElement to_T_basis(const SkeinElement& x) {
    require_basis(x, Basis::Standard, "to_T_basis");
    SkeinElement out(Basis::ChebyshevT);
    for (const auto& [cls, coeff] : x.terms()) {
        if (cls.is_empty()) {
            out.add_term(cls, coeff);
            continue;
        }
        const auto [n, prim] = split_primitive(cls);
        for (const auto& [k, c] : power_in_T(static_cast<unsigned>(n)))
            out.add_term(UnorientedClass::of(static_cast<long>(k) * prim), LaurentPoly::monomial(c, 0) * coeff);
    }
    return out;
}

inline SkeinElement from_T_basis(const SkeinElement& x) {
    require_basis(x, Basis::ChebyshevT, "from_T_basis");
    SkeinElement out(Basis::Standard);
    for (const auto& [cls, coeff] : x.terms()) {
        if (cls.is_empty()) {
            out.add_term(cls, coeff);
            continue;
        }
        out += coeff * chebyshev_of(cls.vec());
    }
    return out;
}

namespace detail {

/// Adds coeff * (v)_T to a Chebyshev-basis accumulator, with (0,0)_T = 2.
inline void add_T_term(SkeinElement& acc, IntVec2 v, const LaurentPoly& coeff) {
    if (v.is_zero())
        acc.add_term(UnorientedClass::empty(), LaurentPoly(2) * coeff);
    else
        acc.add_term(UnorientedClass::of(v), coeff);
}

}  // namespace detail

/// Product-to-sum rule on the Chebyshev basis:
///   (u)_T * (v)_T = A^det(u,v) (u-v)_T + A^-det(u,v) (u+v)_T,
/// extended bilinearly, with the empty curve as unit.
inline SkeinElement mul_T(const SkeinElement& x, const SkeinElement& y) {
    require_basis(x, Basis::ChebyshevT, "mul_T");
    require_basis(y, Basis::ChebyshevT, "mul_T");
    SkeinElement out(Basis::ChebyshevT);
    for (const auto& [cx, px] : x.terms()) {
        for (const auto& [cy, py] : y.terms()) {
            const LaurentPoly k = px * py;
            if (cx.is_empty() || cy.is_empty()) {
                out.add_term(cx.is_empty() ? cy : cx, k);
                continue;
            }
            const IntVec2 u = cx.vec();
            const IntVec2 v = cy.vec();
            const long d = det2(u, v);
            detail::add_T_term(out, u - v, k.shifted(static_cast<int>(d)));
            detail::add_T_term(out, u + v, k.shifted(static_cast<int>(-d)));
        }
    }
    return out;
}

/// Superposition product in the multicurve basis, computed through the
/// Chebyshev basis.
inline SkeinElement mul(const SkeinElement& x, const SkeinElement& y) {
    require_basis(x, Basis::Standard, "mul");
    require_basis(y, Basis::Standard, "mul");
    return from_T_basis(mul_T(to_T_basis(x), to_T_basis(y)));
}

}  // namespace skein
