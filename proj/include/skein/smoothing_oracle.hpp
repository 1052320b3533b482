#pragma once

// Ground-truth products on the torus by explicit superposition.
//
// Two multicurve families u = n*P (on top) and v = m*Q (below) are drawn as
// straight lines on R^2/Z^2: copy i of the top family is the level set
// det(P, x) = i/n, copy j of the bottom family is det(Q, x) = j/m. All
// crossing positions are rational with denominator N = |det(P,Q)| n m, so
// they are stored as integer pairs mod N. Walking along the top family
// from one crossing to the next moves by n*P/N, along the bottom family by
// m*Q/N. Each crossing is then resolved, the resulting closed curves are
// traced, and their homology and turning number are read off exactly.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/oriented.hpp"
#include "skein/skein_element.hpp"
#include "skein/torus_curves.hpp"

namespace skein {

/// The longitude/meridian coordinate frame is a negative basis of the
/// surface orientation. All geometric signs (which smoothing is the A one,
/// the sense of a circle) are taken in the surface orientation.
inline constexpr int kChartOrientation = -1;

inline constexpr long kDefaultCrossingBudget = 24;
inline constexpr long kMaxCrossingBudget = 62;

/// Superposition of two multicurve families in generic position, reduced
/// to its 4-valent graph. Crossings are indexed 0..k-1.
struct Arrangement {
    IntVec2 over_class;   ///< u, drawn on top
    IntVec2 under_class;  ///< v, drawn below
    long over_copies = 0;
    long under_copies = 0;
    IntVec2 over_primitive;
    IntVec2 under_primitive;
    long denominator = 1;     ///< N; positions and displacements are in units of 1/N
    IntVec2 over_step;        ///< displacement numerator of every top-family arc
    IntVec2 under_step;       ///< displacement numerator of every bottom-family arc
    int surface_sign = 0;     ///< sign of det(P, Q) in the surface orientation
    std::vector<IntVec2> position;
    std::vector<std::size_t> next_over, prev_over, next_under, prev_under;

    std::size_t crossing_count() const noexcept { return position.size(); }
};

enum class Resolution : std::uint8_t { A, B };

/// One resolution choice per crossing; bit i set means crossing i takes B.
struct SmoothingState {
    std::uint64_t mask = 0;
    std::size_t size = 0;

    Resolution at(std::size_t i) const noexcept { return (mask >> i) & 1u ? Resolution::B : Resolution::A; }
    int a_exponent() const noexcept { return static_cast<int>(size) - 2 * std::popcount(mask); }
};

struct TracedComponent {
    IntVec2 homology;
    int winding = 0;  ///< turning number in the surface orientation
    long arc_count = 0;
};

namespace detail {

inline long mod(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

inline IntVec2 mod_vec(IntVec2 v, long n) { return {mod(v.a, n), mod(v.b, n)}; }

/// Invert a successor permutation; throws if it is not one.
inline std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& next) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> prev(next.size(), unset);
    for (std::size_t i = 0; i < next.size(); ++i) {
        if (prev[next[i]] != unset) throw InternalError("arrangement successor map is not a permutation");
        prev[next[i]] = i;
    }
    return prev;
}

inline void check_budget(long crossings, long budget) {
    if (budget < 1 || budget > kMaxCrossingBudget)
        throw DomainError("crossing budget must be in [1, " + std::to_string(kMaxCrossingBudget) + "]");
    if (crossings > budget) throw BudgetExceeded(crossings, budget);
}

}  // namespace detail

/// Checks the structural invariants: crossing count |det(u,v)|, successor
/// maps are permutations whose cycles are the family components, and each
/// component's displacement sums to its primitive vector.
inline void check_arrangement(const Arrangement& arr) {
    const std::size_t k = arr.crossing_count();
    if (static_cast<long>(k) != std::labs(det2(arr.over_class, arr.under_class)))
        throw InternalError("crossing count differs from |det|");
    auto check_family = [&](const std::vector<std::size_t>& next, IntVec2 step, IntVec2 prim, long copies) {
        std::vector<bool> seen(k, false);
        long cycles = 0;
        for (std::size_t s = 0; s < k; ++s) {
            if (seen[s]) continue;
            ++cycles;
            IntVec2 total{};
            std::size_t c = s;
            do {
                seen[c] = true;
                total = total + step;
                c = next[c];
            } while (c != s);
            if (total != arr.denominator * prim) throw InternalError("family component does not close up on its class");
        }
        if (cycles != copies) throw InternalError("family component count differs from copy count");
    };
    check_family(arr.next_over, arr.over_step, arr.over_primitive, arr.over_copies);
    check_family(arr.next_under, arr.under_step, arr.under_primitive, arr.under_copies);
}

/// Generic-position superposition of u (on top) over v.
inline Arrangement build_arrangement(IntVec2 u, IntVec2 v, long budget = kDefaultCrossingBudget) {
    const long total = det2(u, v);
    if (total == 0) throw DomainError("parallel or empty classes have no generic-position arrangement");
    detail::check_budget(std::labs(total), budget);

    Arrangement arr;
    arr.over_class = u;
    arr.under_class = v;
    const auto [n, P] = split_vector(u);
    const auto [m, Q] = split_vector(v);
    arr.over_copies = n;
    arr.under_copies = m;
    arr.over_primitive = P;
    arr.under_primitive = Q;
    const long D = det2(P, Q);
    const long absD = std::labs(D);
    const long N = absD * n * m;
    arr.denominator = N;
    arr.over_step = n * P;
    arr.under_step = m * Q;
    arr.surface_sign = static_cast<int>(kChartOrientation * sign(D));

    // x = M^-1 (y1, y2) with M = [[-q, p], [-s, r]], y1 = i/n + k, y2 = j/m + l.
    std::map<IntVec2, std::size_t> index;
    const long sD = sign(D);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j)
            for (long k = 0; k < absD; ++k)
                for (long l = 0; l < absD; ++l) {
                    const long y1 = i * m + k * n * m;
                    const long y2 = j * n + l * n * m;
                    const IntVec2 x = detail::mod_vec({sD * (Q.a * y1 - P.a * y2), sD * (Q.b * y1 - P.b * y2)}, N);
                    if (index.try_emplace(x, arr.position.size()).second) arr.position.push_back(x);
                }

    const std::size_t count = arr.position.size();
    arr.next_over.resize(count);
    arr.next_under.resize(count);
    for (std::size_t c = 0; c < count; ++c) {
        auto find = [&](IntVec2 p) {
            auto it = index.find(detail::mod_vec(p, N));
            if (it == index.end()) throw InternalError("successor of a crossing is not a crossing");
            return it->second;
        };
        arr.next_over[c] = find(arr.position[c] + arr.over_step);
        arr.next_under[c] = find(arr.position[c] + arr.under_step);
    }
    arr.prev_over = detail::invert_permutation(arr.next_over);
    arr.prev_under = detail::invert_permutation(arr.next_under);
    check_arrangement(arr);
    return arr;
}

namespace detail {

enum End : std::uint8_t { OverIn = 0, OverOut = 1, UnderIn = 2, UnderOut = 3 };

/// Partner end at a smoothed crossing. The "oriented" junction joins the
/// incoming end of one strand to the outgoing end of the other.
inline End partner(End e, bool oriented_junction) {
    if (oriented_junction) {
        switch (e) {
            case OverIn: return UnderOut;
            case UnderOut: return OverIn;
            case UnderIn: return OverOut;
            case OverOut: return UnderIn;
        }
    }
    switch (e) {
        case OverIn: return UnderIn;
        case UnderIn: return OverIn;
        case OverOut: return UnderOut;
        case UnderOut: return OverOut;
    }
    return e;
}

/// Traces all components of one smoothing state. `oriented_junction(c)`
/// says which junction crossing c uses.
template <class JunctionFn>
std::vector<TracedComponent> trace_components(const Arrangement& arr, JunctionFn&& oriented_junction) {
    const std::size_t k = arr.crossing_count();
    std::vector<std::uint8_t> visited(2 * k, 0);  // [family * k + crossing]
    std::vector<TracedComponent> out;
    const IntVec2 P = arr.over_primitive;
    const IntVec2 Q = arr.under_primitive;

    for (std::size_t family0 = 0; family0 < 2; ++family0) {
        for (std::size_t c0 = 0; c0 < k; ++c0) {
            if (visited[family0 * k + c0]) continue;
            TracedComponent comp;
            IntVec2 disp{};
            long quarter_turns = 0;
            std::size_t family = family0;
            std::size_t arc = c0;
            bool forward = true;
            for (;;) {
                visited[family * k + arc] = 1;
                ++comp.arc_count;
                const bool over = family == 0;
                const IntVec2 step = over ? arr.over_step : arr.under_step;
                disp = forward ? disp + step : disp - step;
                std::size_t x;
                End in;
                IntVec2 d_in;
                if (over) {
                    x = forward ? arr.next_over[arc] : arc;
                    in = forward ? OverIn : OverOut;
                    d_in = forward ? P : -P;
                } else {
                    x = forward ? arr.next_under[arc] : arc;
                    in = forward ? UnderIn : UnderOut;
                    d_in = forward ? Q : -Q;
                }
                const End out_end = partner(in, oriented_junction(x));
                IntVec2 d_out;
                switch (out_end) {
                    case OverOut: family = 0; arc = x; forward = true; d_out = P; break;
                    case OverIn: family = 0; arc = arr.prev_over[x]; forward = false; d_out = -P; break;
                    case UnderOut: family = 1; arc = x; forward = true; d_out = Q; break;
                    case UnderIn: family = 1; arc = arr.prev_under[x]; forward = false; d_out = -Q; break;
                }
                quarter_turns += kChartOrientation * sign(det2(d_in, d_out));
                if (family == family0 && arc == c0) {
                    if (!forward) throw InternalError("component re-entered its first arc backwards");
                    break;
                }
                if (visited[family * k + arc]) throw InternalError("component ran into an arc of another component");
            }
            if (disp.a % arr.denominator != 0 || disp.b % arr.denominator != 0)
                throw InternalError("non-integral component homology");
            if (quarter_turns % 4 != 0) throw InternalError("quarter-turn count not divisible by 4");
            comp.homology = {disp.a / arr.denominator, disp.b / arr.denominator};
            comp.winding = static_cast<int>(quarter_turns / 4);
            if (!comp.homology.is_zero() && comp.winding != 0)
                throw InternalError("essential component with nonzero turning number");
            if (comp.homology.is_zero() && comp.winding != 1 && comp.winding != -1)
                throw InternalError("trivial circle with turning number other than +-1");
            out.push_back(comp);
        }
    }
    return out;
}

/// The A smoothing uses the oriented junction exactly when det(P,Q) is
/// positive in the surface orientation.
inline bool oriented_junction_for(const Arrangement& arr, Resolution r) {
    return (r == Resolution::A) == (arr.surface_sign > 0);
}

}  // namespace detail

inline std::vector<TracedComponent> trace(const Arrangement& arr, const SmoothingState& s) {
    if (s.size != arr.crossing_count()) throw DomainError("smoothing state length differs from crossing count");
    return detail::trace_components(arr, [&](std::size_t c) { return detail::oriented_junction_for(arr, s.at(c)); });
}

/// Summary of one state of the unoriented state sum.
struct StateRecord {
    SmoothingState state;
    int a_exponent = 0;
    int trivial_circles = 0;
    UnorientedClass residual;
};

struct OracleOptions {
    long budget = kDefaultCrossingBudget;
    unsigned workers = 1;
    /// Called for every state in binary-counter order; forces a single worker.
    std::function<void(const StateRecord&)> observer;
};

struct OracleReport {
    SkeinElement value{Basis::Standard};
    std::uint64_t states_visited = 0;
};

namespace detail {

/// Residual multicurve of the essential components of one state; they must
/// all be +-R for one primitive R.
inline UnorientedClass residual_class(const std::vector<TracedComponent>& comps, int& trivial) {
    trivial = 0;
    long count = 0;
    IntVec2 dir{};
    for (const auto& c : comps) {
        if (c.homology.is_zero()) {
            ++trivial;
            continue;
        }
        const auto [mult, prim] = split_vector(c.homology);
        if (mult != 1) throw InternalError("embedded essential component with non-primitive homology");
        const IntVec2 canon = UnorientedClass::of(prim).vec();
        if (count > 0 && canon != dir) throw InternalError("essential components in different directions");
        dir = canon;
        ++count;
    }
    return count == 0 ? UnorientedClass::empty() : UnorientedClass::of(count * dir);
}

using StateTally = std::map<std::tuple<int, int, UnorientedClass>, std::uint64_t>;

inline void tally_range(const Arrangement& arr, std::uint64_t begin, std::uint64_t end, StateTally& tally,
                        const std::function<void(const StateRecord&)>* observer) {
    const std::size_t k = arr.crossing_count();
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        SmoothingState s{mask, k};
        const auto comps = trace(arr, s);
        int trivial = 0;
        const UnorientedClass res = residual_class(comps, trivial);
        ++tally[{s.a_exponent(), trivial, res}];
        if (observer != nullptr && *observer) (*observer)(StateRecord{s, s.a_exponent(), trivial, res});
    }
}

}  // namespace detail

/// Full 2^k state sum of the superposition of x over y, with trivial circles
/// evaluated to delta.
inline OracleReport unoriented_product_report(const UnorientedClass& x, const UnorientedClass& y,
                                              const OracleOptions& opts = {}) {
    OracleReport rep;
    if (x.is_empty() || y.is_empty()) {
        rep.value.add_term(x.is_empty() ? y : x, LaurentPoly(1));
        rep.states_visited = 1;
        return rep;
    }
    const long d = det2(x.vec(), y.vec());
    if (d == 0) {
        // Parallel copies of one primitive curve: disjoint union.
        rep.value.add_term(UnorientedClass::of(x.vec() + y.vec()), LaurentPoly(1));
        rep.states_visited = 1;
        return rep;
    }
    const Arrangement arr = build_arrangement(x.vec(), y.vec(), opts.budget);
    const std::uint64_t states = std::uint64_t{1} << arr.crossing_count();

    unsigned workers = opts.observer ? 1u : std::max(1u, opts.workers);
    if (workers > states) workers = static_cast<unsigned>(states);
    std::vector<detail::StateTally> partial(workers);
    if (workers == 1) {
        detail::tally_range(arr, 0, states, partial[0], &opts.observer);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (states + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t b = std::min(states, w * chunk);
            const std::uint64_t e = std::min(states, b + chunk);
            pool.emplace_back([&, w, b, e] { detail::tally_range(arr, b, e, partial[w], nullptr); });
        }
        for (auto& t : pool) t.join();
    }

    detail::StateTally tally;
    for (const auto& p : partial)
        for (const auto& [key, n] : p) tally[key] += n;

    const LaurentPoly dl = delta();
    std::map<int, LaurentPoly> delta_powers;
    for (const auto& [key, n] : tally) {
        const auto& [e, circles, res] = key;
        auto it = delta_powers.find(circles);
        if (it == delta_powers.end()) it = delta_powers.emplace(circles, dl.pow(static_cast<unsigned>(circles))).first;
        rep.value.add_term(res, LaurentPoly::monomial(BigInt(n), 0) * it->second.shifted(e));
    }
    rep.states_visited = states;
    return rep;
}

inline SkeinElement unoriented_product(const UnorientedClass& x, const UnorientedClass& y,
                                       const OracleOptions& opts = {}) {
    return unoriented_product_report(x, y, opts).value;
}

/// Bilinear extension of the unoriented oracle to standard-basis elements.
inline SkeinElement oracle_mul(const SkeinElement& x, const SkeinElement& y, const OracleOptions& opts = {}) {
    require_basis(x, Basis::Standard, "oracle_mul");
    require_basis(y, Basis::Standard, "oracle_mul");
    SkeinElement out(Basis::Standard);
    for (const auto& [cx, px] : x.terms())
        for (const auto& [cy, py] : y.terms()) out += (px * py) * unoriented_product(cx, cy, opts);
    return out;
}

/// Bookkeeping of one oriented oracle product.
struct OrientedOracleReport {
    OrientedElement value;
    int smoothing_exponent = 0;    ///< sum of +-1 over resolved crossings
    int circle_exponent = 0;       ///< A-power contributed by removed circles
    int removed_winding = 0;       ///< total turning number of removed circles
    int surviving_winding = 0;     ///< total turning number of essential components
    int trivial_circles = 0;
    IntVec2 homology_sum;          ///< oriented sum over all components
    std::uint64_t states_visited = 0;
    std::vector<TracedComponent> components;

    /// A-exponent / 2 plus the Gauss index of the diagram, right after
    /// smoothing and after circle removal. Removal must preserve it.
    std::pair<int, int> doubled_grading() const {
        return {smoothing_exponent + 2 * (removed_winding + surviving_winding),
                smoothing_exponent + circle_exponent + 2 * surviving_winding};
    }
};

/// Oriented superposition gamma_u over gamma_v: every crossing takes its
/// unique orientation-respecting smoothing, a circle of turning number w
/// is removed with factor -A^(2w), and parallel essential curves are
/// reduced by net signed count.
inline OrientedOracleReport oriented_product_report(IntVec2 u, IntVec2 v, long budget = kDefaultCrossingBudget) {
    OrientedOracleReport rep;
    rep.states_visited = 1;
    if (det2(u, v) == 0) {
        rep.value = OrientedElement::gamma(u + v);
        rep.homology_sum = u + v;
        return rep;
    }
    const Arrangement arr = build_arrangement(u, v, budget);
    const std::size_t k = arr.crossing_count();
    rep.components = detail::trace_components(arr, [](std::size_t) { return true; });
    const bool oriented_is_a = arr.surface_sign > 0;
    rep.smoothing_exponent = static_cast<int>(k) * (oriented_is_a ? 1 : -1);

    BigInt sign_factor = 1;
    IntVec2 dir{};
    bool have_dir = false;
    for (const auto& c : rep.components) {
        rep.homology_sum = rep.homology_sum + c.homology;
        if (c.homology.is_zero()) {
            ++rep.trivial_circles;
            rep.removed_winding += c.winding;
            rep.circle_exponent += 2 * c.winding;
            sign_factor = -sign_factor;
            continue;
        }
        rep.surviving_winding += c.winding;
        const IntVec2 canon = UnorientedClass::of(split_vector(c.homology).primitive).vec();
        if (have_dir && canon != dir) throw InternalError("essential components in different directions");
        dir = canon;
        have_dir = true;
    }
    if (rep.homology_sum != u + v) throw InternalError("oriented homology not conserved");
    rep.value = OrientedElement::gamma(
        rep.homology_sum, LaurentPoly::monomial(sign_factor, rep.smoothing_exponent + rep.circle_exponent));
    return rep;
}

inline OrientedElement oriented_product(IntVec2 u, IntVec2 v, long budget = kDefaultCrossingBudget) {
    return oriented_product_report(u, v, budget).value;
}

/// Bilinear extension of the oriented oracle.
inline OrientedElement oracle_mul(const OrientedElement& x, const OrientedElement& y,
                                  long budget = kDefaultCrossingBudget) {
    OrientedElement out;
    for (const auto& [u, pu] : x.terms())
        for (const auto& [v, pv] : y.terms()) out += (pu * pv) * oriented_product(u, v, budget);
    return out;
}

/// Sum over all 2^n orientations of the n parallel copies of a multicurve.
/// Each assignment is reduced by cancelling adjacent opposite copies.
inline OrientedElement psi_oracle(const UnorientedClass& c) {
    if (c.is_empty()) return OrientedElement::unit();
    const auto [n, prim] = split_primitive(c);
    if (n > 30) throw DomainError("psi_oracle multiplicity too large to enumerate");
    OrientedElement out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> stack;
        for (long i = 0; i < n; ++i) {
            const int o = (mask >> i) & 1u ? -1 : 1;
            if (!stack.empty() && stack.back() == -o)
                stack.pop_back();
            else
                stack.push_back(o);
        }
        const long net = stack.empty() ? 0 : static_cast<long>(stack.size()) * stack.front();
        out.add_term(net * prim, LaurentPoly(1));
    }
    return out;
}

/// Line per state: crossing bits (crossing 0 first, 1 = B), A-exponent,
/// trivial circle count, residual class.
inline std::string format_state_record(const StateRecord& r) {
    std::string bits;
    for (std::size_t i = 0; i < r.state.size; ++i) bits += r.state.at(i) == Resolution::B ? '1' : '0';
    return bits + ' ' + std::to_string(r.a_exponent) + ' ' + std::to_string(r.trivial_circles) + ' ' +
           format(r.residual);
}

}  // namespace skein
