#pragma once

// Kauffman bracket of planar link diagrams given as PD codes.
//
// Convention: each crossing X(i,j,k,l) lists its four edge labels
// counterclockwise, starting from the incoming under-strand, so the under
// strand runs i -> k and the over strand joins j and l. The A-smoothing
// joins (i,j) and (k,l); the B-smoothing joins (i,l) and (j,k).

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct PDCode {
    std::vector<std::array<long, 4>> crossings;
    long free_loops = 0;  ///< crossingless unknotted components

    friend bool operator==(const PDCode&, const PDCode&) = default;
};

inline constexpr long kDefaultBracketBudget = 24;

namespace detail {

/// Smallest union-find, path halving + union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --sets_;
    }

    void reset(std::size_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        std::iota(parent_.begin(), parent_.end(), 0);
        sets_ = n;
    }

    std::size_t sets() const noexcept { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_ = parent_.size();
};

struct IndexedPD {
    std::vector<std::array<std::size_t, 4>> crossings;  // dense edge indices
    std::size_t edge_count = 0;
};

inline IndexedPD index_edges(const PDCode& pd) {
    if (pd.free_loops < 0) throw InvalidDiagram("negative free loop count");
    std::map<long, std::size_t> index;
    std::map<long, int> multiplicity;
    for (const auto& x : pd.crossings)
        for (long e : x) {
            if (e <= 0) throw InvalidDiagram("edge labels must be positive integers, got " + std::to_string(e));
            ++multiplicity[e];
        }
    for (const auto& [e, n] : multiplicity) {
        if (n != 2)
            throw InvalidDiagram("edge " + std::to_string(e) + " occurs " + std::to_string(n) + " times, expected 2");
        index.emplace(e, index.size());
    }
    IndexedPD out;
    out.edge_count = index.size();
    for (const auto& x : pd.crossings) out.crossings.push_back({index[x[0]], index[x[1]], index[x[2]], index[x[3]]});
    return out;
}

}  // namespace detail

/// For each crossing, true when the over strand runs from position 1 to
/// position 3 (j -> l). Orientations are propagated from the under strands;
/// a component that never passes under is oriented from its first crossing.
inline std::vector<bool> over_strand_forward(const PDCode& pd) {
    const detail::IndexedPD ipd = detail::index_edges(pd);
    const std::size_t n = ipd.crossings.size();
    // role[c][p]: 0 unknown, 1 edge arrives at c here, 2 edge leaves c here
    std::vector<std::array<int, 4>> role(n, {1, 0, 2, 0});
    std::vector<std::vector<std::pair<std::size_t, int>>> where(ipd.edge_count);
    for (std::size_t c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) where[ipd.crossings[c][p]].emplace_back(c, p);

    std::deque<std::pair<std::size_t, int>> queue;
    auto assign = [&](std::size_t c, int p, int r) {
        if (role[c][p] == r) return;
        if (role[c][p] != 0) throw InvalidDiagram("inconsistent strand orientation at crossing " + std::to_string(c));
        role[c][p] = r;
        queue.emplace_back(c, p);
    };
    auto propagate = [&]() {
        while (!queue.empty()) {
            auto [c, p] = queue.front();
            queue.pop_front();
            const int r = role[c][p];
            // The other end of the same edge has the opposite role.
            for (auto [c2, p2] : where[ipd.crossings[c][p]])
                if (!(c2 == c && p2 == p)) assign(c2, p2, 3 - r);
            // The other over position at this crossing has the opposite role.
            if (p == 1 || p == 3) assign(c, 4 - p, 3 - r);
        }
    };
    for (std::size_t c = 0; c < n; ++c) {
        queue.emplace_back(c, 0);
        queue.emplace_back(c, 2);
    }
    propagate();
    for (std::size_t c = 0; c < n; ++c) {
        if (role[c][1] == 0) {
            assign(c, 1, 1);
            propagate();
        }
    }
    std::vector<bool> fwd(n);
    for (std::size_t c = 0; c < n; ++c) fwd[c] = role[c][1] == 1;
    return fwd;
}

/// Checks edge multiplicities and strand orientation consistency.
inline void validate(const PDCode& pd) { (void)over_strand_forward(pd); }

/// Swaps over and under at every crossing.
inline PDCode mirror(const PDCode& pd) {
    const std::vector<bool> fwd = over_strand_forward(pd);
    PDCode out;
    out.free_loops = pd.free_loops;
    for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
        const auto& [i, j, k, l] = pd.crossings[c];
        out.crossings.push_back(fwd[c] ? std::array<long, 4>{j, k, l, i} : std::array<long, 4>{l, i, j, k});
    }
    return out;
}

/// Side-by-side union; edges of `b` are relabelled above those of `a`.
inline PDCode disjoint_union(const PDCode& a, const PDCode& b) {
    long offset = 0;
    for (const auto& x : a.crossings)
        for (long e : x) offset = std::max(offset, e);
    PDCode out = a;
    for (auto x : b.crossings) {
        for (long& e : x) e += offset;
        out.crossings.push_back(x);
    }
    out.free_loops += b.free_loops;
    return out;
}

struct BracketOptions {
    long budget = kDefaultBracketBudget;
    unsigned workers = 1;
};

/// Sum over all 2^k states of A^(#A - #B) delta^(#circles). Every circle
/// counts, so the empty diagram is 1 and the unknot is delta.
inline LaurentPoly kauffman_bracket(const PDCode& pd, const BracketOptions& opts = {}) {
    validate(pd);
    const detail::IndexedPD ipd = detail::index_edges(pd);
    const long k = static_cast<long>(ipd.crossings.size());
    if (opts.budget < 1 || opts.budget > 62) throw DomainError("bracket budget must be in [1, 62]");
    if (k > opts.budget) throw BudgetExceeded(k, opts.budget);

    const std::uint64_t states = std::uint64_t{1} << k;
    using Tally = std::map<std::pair<int, long>, std::uint64_t>;  // (exponent, circles) -> count
    auto run = [&](std::uint64_t begin, std::uint64_t end, Tally& tally) {
        detail::DisjointSets ds(ipd.edge_count);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            ds.reset(ipd.edge_count);
            int exponent = 0;
            for (long c = 0; c < k; ++c) {
                const auto& [i, j, kk, l] = ipd.crossings[static_cast<std::size_t>(c)];
                if ((mask >> c) & 1u) {
                    ds.unite(i, l);
                    ds.unite(j, kk);
                    --exponent;
                } else {
                    ds.unite(i, j);
                    ds.unite(kk, l);
                    ++exponent;
                }
            }
            ++tally[{exponent, static_cast<long>(ds.sets()) + pd.free_loops}];
        }
    };

    unsigned workers = std::max(1u, opts.workers);
    if (workers > states) workers = static_cast<unsigned>(states);
    std::vector<Tally> partial(workers);
    if (workers == 1) {
        run(0, states, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (states + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t b = std::min(states, w * chunk);
            const std::uint64_t e = std::min(states, b + chunk);
            pool.emplace_back([&, w, b, e] { run(b, e, partial[w]); });
        }
        for (auto& t : pool) t.join();
    }

    Tally tally;
    for (const auto& p : partial)
        for (const auto& [key, n] : p) tally[key] += n;
    LaurentPoly result;
    const LaurentPoly d = delta();
    for (const auto& [key, n] : tally)
        result += LaurentPoly::monomial(BigInt(n), key.first) * d.pow(static_cast<unsigned>(key.second));
    return result;
}

// ---------------------------------------------------------------------------
// Text form: "X(1,3,2,4) X(3,1,4,2)", square brackets also accepted, and a
// bare "O" for each crossingless loop.

inline PDCode parse_pd(std::string_view text) {
    detail::Scanner s(text);
    PDCode pd;
    while (!s.at_end()) {
        if (s.accept(',')) continue;
        if (s.accept('O')) {
            ++pd.free_loops;
            continue;
        }
        if (!s.accept('X')) s.fail("expected 'X(...)' or 'O'");
        char close;
        if (s.accept('('))
            close = ')';
        else if (s.accept('['))
            close = ']';
        else
            s.fail("expected '(' or '['");
        std::array<long, 4> x{};
        for (int p = 0; p < 4; ++p) {
            if (p > 0) s.expect(',');
            x[p] = static_cast<long>(s.read_int());
        }
        s.expect(close);
        pd.crossings.push_back(x);
    }
    return pd;
}

inline std::string format(const PDCode& pd) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : pd.crossings) {
        if (!first) os << ' ';
        os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
        first = false;
    }
    for (long i = 0; i < pd.free_loops; ++i) {
        if (!first) os << ' ';
        os << 'O';
        first = false;
    }
    return os.str();
}

}  // namespace skein
