#pragma once

// Homology bookkeeping for simple closed multicurves on the torus.

#include <compare>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// Integer vector in the (longitude, meridian) homology basis.
struct IntVec2 {
    long a = 0;
    long b = 0;

    constexpr bool is_zero() const noexcept { return a == 0 && b == 0; }

    friend constexpr IntVec2 operator+(IntVec2 u, IntVec2 v) noexcept { return {u.a + v.a, u.b + v.b}; }
    friend constexpr IntVec2 operator-(IntVec2 u, IntVec2 v) noexcept { return {u.a - v.a, u.b - v.b}; }
    friend constexpr IntVec2 operator-(IntVec2 u) noexcept { return {-u.a, -u.b}; }
    friend constexpr IntVec2 operator*(long k, IntVec2 u) noexcept { return {k * u.a, k * u.b}; }
    friend constexpr auto operator<=>(const IntVec2&, const IntVec2&) = default;
};

/// u.a * v.b - u.b * v.a. Its absolute value is the number of crossings of
/// the two multicurves in generic position.
constexpr long det2(IntVec2 u, IntVec2 v) noexcept { return u.a * v.b - u.b * v.a; }

constexpr long sign(long x) noexcept { return (x > 0) - (x < 0); }

/// True for the representative the basis uses: a > 0, or a == 0 and b > 0.
constexpr bool in_canonical_half_plane(IntVec2 v) noexcept { return v.a > 0 || (v.a == 0 && v.b > 0); }

/// Isotopy class of an unoriented toric multicurve: empty, or n parallel
/// copies of a primitive curve, keyed by a canonical half-plane vector.
class UnorientedClass {
public:
    /// The empty curve.
    constexpr UnorientedClass() = default;

    static UnorientedClass empty() { return {}; }

    /// Class of the multicurve with homology +-v. (0,0) gives the empty curve.
    static UnorientedClass of(IntVec2 v) {
        UnorientedClass c;
        if (v.is_zero()) return c;
        c.empty_ = false;
        c.vec_ = in_canonical_half_plane(v) ? v : -v;
        return c;
    }

    constexpr bool is_empty() const noexcept { return empty_; }

    /// Canonical vector; (0,0) for the empty curve.
    constexpr IntVec2 vec() const noexcept { return vec_; }

    /// Empty sorts first, then lexicographically by vector.
    friend constexpr std::strong_ordering operator<=>(const UnorientedClass& x, const UnorientedClass& y) {
        if (x.empty_ != y.empty_) return x.empty_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return x.vec_ <=> y.vec_;
    }
    friend constexpr bool operator==(const UnorientedClass&, const UnorientedClass&) = default;

private:
    bool empty_ = true;
    IntVec2 vec_{};
};

struct Canonicalized {
    UnorientedClass cls;
    bool flipped = false;
};

/// Half-plane representative of {v, -v}, and whether negation was applied.
inline Canonicalized canonicalize(IntVec2 v) {
    if (v.is_zero()) return {UnorientedClass::empty(), false};
    const bool flip = !in_canonical_half_plane(v);
    return {UnorientedClass::of(v), flip};
}

struct PrimitiveSplit {
    long multiplicity = 0;
    IntVec2 primitive;
};

/// v = n * prim with n = gcd(|a|, |b|) > 0 and prim primitive. Orientation
/// of v is kept.
inline PrimitiveSplit split_vector(IntVec2 v) {
    if (v.is_zero()) throw DomainError("split of the zero vector");
    const long n = std::gcd(std::labs(v.a), std::labs(v.b));
    return {n, {v.a / n, v.b / n}};
}

inline PrimitiveSplit split_primitive(const UnorientedClass& c) {
    if (c.is_empty()) throw DomainError("split_primitive of the empty curve");
    return split_vector(c.vec());
}

// ---------------------------------------------------------------------------
// Text form "(a,b)".

inline std::string format(IntVec2 v) {
    std::ostringstream os;
    os << '(' << v.a << ',' << v.b << ')';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, IntVec2 v) { return os << format(v); }

inline std::string format(const UnorientedClass& c) { return c.is_empty() ? "empty" : format(c.vec()); }

namespace detail {

inline IntVec2 parse_vec_body(Scanner& s) {
    s.expect('(');
    const long a = static_cast<long>(s.read_int());
    s.expect(',');
    const long b = static_cast<long>(s.read_int());
    s.expect(')');
    return {a, b};
}

}  // namespace detail

inline IntVec2 parse_vec(std::string_view text) {
    detail::Scanner s(text);
    IntVec2 v = detail::parse_vec_body(s);
    if (!s.at_end()) s.fail("unexpected character");
    return v;
}

}  // namespace skein
