#pragma once

// Exhaustive agreement sweeps between the fast algebraic products and the
// brute-force smoothing oracle over small ranges of curve classes.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skein/oriented.hpp"
#include "skein/skein_element.hpp"
#include "skein/smoothing_oracle.hpp"
#include "skein/text_io.hpp"
#include "skein/torus_curves.hpp"

namespace skein {

struct SweepBounds {
    long max_coord = 3;         ///< |a|, |b| bound on classes (on primitives for the psi sweep)
    long max_det = 10;          ///< |det| bound on pairs
    long max_multiplicity = 3;  ///< psi sweep only
    long budget = kDefaultCrossingBudget;
    unsigned workers = 1;
};

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;

    bool passed() const noexcept { return failures == 0; }

    void record(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (ok) return;
        if (failures == 0) first_counterexample = describe();
        ++failures;
    }
};

/// Canonical classes (a,b) with |a|,|b| <= bound.
inline std::vector<IntVec2> canonical_classes(long bound) {
    std::vector<IntVec2> out;
    for (long a = 0; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            if (in_canonical_half_plane({a, b})) out.push_back({a, b});
    return out;
}

/// Every integer vector with |a|,|b| <= bound, zero included.
inline std::vector<IntVec2> all_vectors(long bound) {
    std::vector<IntVec2> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) out.push_back({a, b});
    return out;
}

/// Standard basis classes n*(p,q), primitive canonical (p,q) with |p|,|q| <=
/// bound and 1 <= n <= max_mult, plus the empty curve.
inline std::vector<UnorientedClass> multicurve_classes(long bound, long max_mult) {
    std::vector<UnorientedClass> out{UnorientedClass::empty()};
    for (IntVec2 v : canonical_classes(bound)) {
        if (split_vector(v).multiplicity != 1) continue;
        for (long n = 1; n <= max_mult; ++n) out.push_back(UnorientedClass::of(n * v));
    }
    return out;
}

inline OracleOptions oracle_options(const SweepBounds& b) {
    OracleOptions o;
    o.budget = b.budget;
    o.workers = b.workers;
    return o;
}

/// Fast product (through the Chebyshev basis) against the 2^k state sum.
inline CheckResult check_fast_vs_oracle(const SweepBounds& b) {
    CheckResult r{"product-to-sum vs smoothing oracle"};
    const auto classes = canonical_classes(b.max_coord);
    std::vector<UnorientedClass> all{UnorientedClass::empty()};
    for (IntVec2 v : classes) all.push_back(UnorientedClass::of(v));
    const OracleOptions opts = oracle_options(b);
    for (const auto& x : all)
        for (const auto& y : all) {
            if (std::labs(det2(x.vec(), y.vec())) > b.max_det) continue;
            const SkeinElement fast =
                mul(SkeinElement::basis_element(Basis::Standard, x), SkeinElement::basis_element(Basis::Standard, y));
            const SkeinElement slow = unoriented_product(x, y, opts);
            r.record(fast == slow, [&] {
                return format(x) + " * " + format(y) + ": fast " + format(fast) + ", oracle " + format(slow);
            });
        }
    return r;
}

/// Monomial rule against the single oriented smoothing, plus conservation
/// of the Gauss grading under circle removal.
inline CheckResult check_gamma_vs_oracle(const SweepBounds& b) {
    CheckResult r{"oriented monomial rule vs oriented oracle"};
    const auto vs = all_vectors(b.max_coord);
    for (IntVec2 u : vs)
        for (IntVec2 v : vs) {
            if (std::labs(det2(u, v)) > b.max_det) continue;
            const OrientedElement fast = gamma_mul(u, v);
            const OrientedOracleReport rep = oriented_product_report(u, v, b.budget);
            const auto [before, after] = rep.doubled_grading();
            r.record(fast == rep.value && before == after && rep.states_visited == 1, [&] {
                return "g" + format(u) + " * g" + format(v) + ": fast " + format(fast) + ", oracle " +
                       format(rep.value) + ", grading " + std::to_string(before) + "/2 -> " + std::to_string(after) +
                       "/2";
            });
        }
    return r;
}

/// Gauss grading alone, for reporting: A-exponent/2 plus the turning number
/// of the diagram is unchanged by circle removal in every oriented product.
inline CheckResult check_gauss_grading(const SweepBounds& b) {
    CheckResult r{"Gauss grading preserved by circle removal"};
    const auto vs = all_vectors(b.max_coord);
    for (IntVec2 u : vs)
        for (IntVec2 v : vs) {
            if (std::labs(det2(u, v)) > b.max_det) continue;
            const OrientedOracleReport rep = oriented_product_report(u, v, b.budget);
            const auto [before, after] = rep.doubled_grading();
            const bool removal_balanced = rep.circle_exponent == 2 * rep.removed_winding;
            r.record(before == after && removal_balanced && rep.surviving_winding == 0, [&] {
                return "g" + format(u) + " * g" + format(v) + ": grading " + std::to_string(before) + "/2 -> " +
                       std::to_string(after) + "/2";
            });
        }
    return r;
}

/// psi(x * y) = psi(x) psi(y), with x * y from the oracle and, separately,
/// from the fast product.
inline CheckResult check_psi_homomorphism(const SweepBounds& b) {
    CheckResult r{"psi is multiplicative"};
    const auto classes = multicurve_classes(b.max_coord, b.max_multiplicity);
    const OracleOptions opts = oracle_options(b);
    for (const auto& x : classes)
        for (const auto& y : classes) {
            if (std::labs(det2(x.vec(), y.vec())) > b.max_det) continue;
            const SkeinElement ex = SkeinElement::basis_element(Basis::Standard, x);
            const SkeinElement ey = SkeinElement::basis_element(Basis::Standard, y);
            const OrientedElement rhs = mul(psi(ex), psi(ey));
            const OrientedElement via_oracle = psi(unoriented_product(x, y, opts));
            const OrientedElement via_fast = psi(mul(ex, ey));
            r.record(via_oracle == rhs && via_fast == rhs, [&] {
                return format(x) + " * " + format(y) + ": psi(oracle) " + format(via_oracle) + ", psi(x)psi(y) " +
                       format(rhs);
            });
        }
    return r;
}

/// mul_T(y, x) is mul_T(x, y) with A -> A^-1, on Chebyshev generators.
inline CheckResult check_swap_symmetry(const SweepBounds& b) {
    CheckResult r{"Chebyshev swap symmetry"};
    std::vector<UnorientedClass> all{UnorientedClass::empty()};
    for (IntVec2 v : canonical_classes(b.max_coord)) all.push_back(UnorientedClass::of(v));
    for (const auto& x : all)
        for (const auto& y : all) {
            if (std::labs(det2(x.vec(), y.vec())) > b.max_det) continue;
            const SkeinElement tx = SkeinElement::basis_element(Basis::ChebyshevT, x);
            const SkeinElement ty = SkeinElement::basis_element(Basis::ChebyshevT, y);
            const SkeinElement xy = mul_T(tx, ty);
            const SkeinElement yx = mul_T(ty, tx);
            r.record(yx == xy.bar(), [&] { return format(x) + ", " + format(y) + ": " + format(xy) + " vs " + format(yx); });
        }
    return r;
}

/// Closed-form psi against explicit enumeration of orientations.
inline CheckResult check_psi_enumeration(long max_mult, long bound) {
    CheckResult r{"psi closed form vs orientation enumeration"};
    for (const auto& c : multicurve_classes(bound, max_mult)) {
        const OrientedElement closed = psi(SkeinElement::basis_element(Basis::Standard, c));
        const OrientedElement enumerated = psi_oracle(c);
        r.record(closed == enumerated,
                 [&] { return format(c) + ": " + format(closed) + " vs " + format(enumerated); });
    }
    return r;
}

/// The sweep behind the `verify` command.
inline std::vector<CheckResult> run_verification(const SweepBounds& b) {
    std::vector<CheckResult> out;
    out.push_back(check_fast_vs_oracle(b));
    out.push_back(check_gamma_vs_oracle(b));
    out.push_back(check_psi_homomorphism(b));
    out.push_back(check_swap_symmetry(b));
    out.push_back(check_psi_enumeration(4, b.max_coord));
    return out;
}

}  // namespace skein
