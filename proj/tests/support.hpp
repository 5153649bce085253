#pragma once

// Test-only reference implementations: a no-pruning product-space PCF search,
// raw (non-canonical) choosability enumeration, and a brute-force transversal
// search.  Deliberately simple so they can serve as second opinions for the
// library's optimized search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/degree4.hpp"
#include "pcf/graph.hpp"
#include "pcf/oracle.hpp"

namespace pcf_test {

// First complete PCF coloring in lexicographic order (vertex-ascending index
// tuples over the lists), found by checking every tuple with verify_pcf.  No
// pruning whatsoever; callers must keep the product space small.
inline std::optional<pcf::PartialColoring> naive_pcf_search(const pcf::Graph& g,
                                                            const pcf::ListAssignment& L) {
    const int n = g.vertex_count();
    pcf::PartialColoring phi(n);
    std::vector<int> idx(n, 0);
    while (true) {
        for (int v = 0; v < n; ++v) phi.set(v, L.list(v)[idx[v]]);
        if (!pcf::verify_pcf(g, L, phi)) return phi;
        int pos = n - 1;
        while (pos >= 0 && ++idx[pos] == L.list_size(pos)) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

// All k-subsets of {0..universe-1} in lexicographic order.
inline std::vector<std::vector<pcf::Color>> all_subsets(int universe, int k) {
    std::vector<std::vector<pcf::Color>> out;
    std::vector<pcf::Color> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == universe - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct RawVerdict {
    bool choosable = true;
    std::optional<pcf::ListAssignment> counterexample;
    std::uint64_t leaves = 0;  // complete assignments actually solved
    std::uint64_t pruned = 0;  // subtrees discharged by the rainbow certificate
};

// Raw (non-canonical) choosability scan: every per-vertex f(v)-subset of
// {0..universe-1}, in lexicographic order.  A partial assignment is discharged
// without descending when every completion provably admits a system of
// distinct representatives - a rainbow coloring, which is PCF on any graph:
// with p lists assigned and q = n-p remaining of size >= r, it suffices that
// q <= r and every nonempty subfamily T of assigned lists has
// |union(T)| >= |T| + q (Hall's condition survives any choice of the
// remaining lists).  With certify=false the scan is a plain full enumeration.
inline RawVerdict raw_choosable(const pcf::Graph& g, const std::vector<int>& f, int universe,
                                bool certify = true,
                                const std::function<void(const pcf::ListAssignment&)>& on_leaf = {}) {
    const int n = g.vertex_count();
    RawVerdict verdict;
    std::vector<std::vector<std::vector<pcf::Color>>> choices(n);
    std::vector<std::vector<pcf::Color>> picked(n);
    std::vector<std::uint32_t> masks(n, 0);
    for (int v = 0; v < n; ++v) choices[v] = all_subsets(universe, f[v]);

    auto suffix_min = [&](int p) {
        int r = universe;
        for (int v = p; v < n; ++v) r = std::min(r, f[v]);
        return r;
    };
    auto certified = [&](int p) {
        const int q = n - p;
        if (q > suffix_min(p)) return false;
        for (std::uint32_t t = 1; t < (1u << p); ++t) {
            std::uint32_t uni = 0;
            int size = 0;
            for (int v = 0; v < p; ++v)
                if (t >> v & 1u) {
                    uni |= masks[v];
                    ++size;
                }
            if (__builtin_popcount(uni) < size + q) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int p) -> bool { // true: counterexample found
        if (p == n) {
            ++verdict.leaves;
            const pcf::ListAssignment L{std::vector<std::vector<pcf::Color>>(picked.begin(),
                                                                             picked.end())};
            if (on_leaf) on_leaf(L);
            if (pcf::solve_exhaustive(g, L).status == pcf::SolveOutcome::Status::Unsatisfiable) {
                verdict.choosable = false;
                verdict.counterexample = L;
                return true;
            }
            return false;
        }
        if (certify && p > 0 && certified(p)) {
            ++verdict.pruned;
            return false;
        }
        for (const auto& lst : choices[p]) {
            picked[p] = lst;
            masks[p] = 0;
            for (pcf::Color c : lst) masks[p] |= 1u << c;
            if (self(self, p + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return verdict;
}

// Lexicographically least valid transversal by plain product-space scan, or
// nullopt.  Valid: consecutive picks differ (short edges) and no long edge is
// hit, wrap-around included.
inline std::optional<std::vector<pcf::Color>> brute_transversal(const pcf::AuxGraphH& h) {
    const int k = h.k;
    for (const auto& cls : h.classes)
        if (cls.empty()) return std::nullopt;
    std::vector<std::size_t> idx(k, 0);
    std::vector<pcf::Color> x(k);
    while (true) {
        for (int i = 0; i < k; ++i) x[i] = h.classes[i][idx[i]];
        bool ok = true;
        for (int i = 0; ok && i < k; ++i) {
            if (x[i] == x[(i + 1) % k]) ok = false;
            if (ok && h.has_long(i, x[i], x[(i + 2) % k])) ok = false;
        }
        if (ok) return x;
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == h.classes[pos].size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

inline std::uint64_t transversal_space(const pcf::AuxGraphH& h) {
    std::uint64_t p = 1;
    for (const auto& cls : h.classes) {
        p *= cls.size();
        if (p > 100'000'000ull) return p;
    }
    return p;
}

// --- structural audits over boundary contexts ----------------------------------
//
// Each audit returns a description of the first violated property, or nullopt
// when the structure is as the solver assumes.  They are meant for contexts
// observed during real solves (hand-built contexts need not satisfy them).

// Blocked-pair structure per cycle position: at most two ordered pairs; two
// pairs are mutual swaps (a,b),(b,a) with a != b; a single pair is diagonal
// (a,a); and the pair list agrees with the blocks() predicate pointwise over
// the local color space.
inline std::optional<std::string> audit_blocked_pairs(const pcf::BoundaryContext& ctx) {
    const int k = ctx.cycle.length();
    for (int i = 0; i < k; ++i) {
        const auto pairs = pcf::blocked_pairs(ctx, i);
        if (pairs.size() > 2) return "more than two blocked pairs at position " + std::to_string(i);
        if (pairs.size() == 2) {
            const auto [a, b] = pairs[0];
            if (a == b || pairs[1] != std::make_pair(b, a))
                return "two blocked pairs that are not mutual swaps at position " + std::to_string(i);
        }
        if (pairs.size() == 1 && pairs[0].first != pairs[0].second)
            return "single blocked pair is not diagonal at position " + std::to_string(i);

        std::vector<pcf::Color> probe;
        for (int u : ctx.off_neighbors[i]) probe.push_back(ctx.phi.color(u));
        const auto& before = ctx.lists[(i + k - 1) % k];
        const auto& after = ctx.lists[(i + 1) % k];
        probe.insert(probe.end(), before.begin(), before.end());
        probe.insert(probe.end(), after.begin(), after.end());
        for (pcf::Color a : probe) {
            for (pcf::Color b : probe) {
                const bool listed =
                    std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
                if (listed != pcf::blocks(ctx, i, a, b))
                    return "blocked_pairs disagrees with blocks() at position " + std::to_string(i);
            }
        }
    }
    return std::nullopt;
}

// Auxiliary-structure bounds: classes mirror the residual lists; at most two
// long edges per position and, when there are two, they cross on two distinct
// colors; every (position, color) vertex touches at most one forward and at
// most one backward edge (short edges to the next class, long edges to the
// class after that); and long edges agree with the blocks() predicate.
inline std::optional<std::string> audit_aux_structure(const pcf::BoundaryContext& ctx,
                                                      const pcf::AuxGraphH& h) {
    const int k = h.k;
    if (k != ctx.cycle.length()) return "class count differs from cycle length";
    for (int i = 0; i < k; ++i) {
        if (h.classes[i] != ctx.lists[i]) return "class " + std::to_string(i) + " differs from list";

        const auto& le = h.long_edges[i];
        if (le.size() > 2) return "more than two long edges at position " + std::to_string(i);
        if (le.size() == 2) {
            const auto [a, b] = le[0];
            if (a == b || le[1] != std::make_pair(b, a))
                return "two long edges that do not cross at position " + std::to_string(i);
        }
        for (pcf::Color a : h.classes[i])
            for (pcf::Color b : h.classes[(i + 2) % k])
                if (h.has_long(i, a, b) != pcf::blocks(ctx, (i + 1) % k, a, b))
                    return "long edges disagree with blocks() at position " + std::to_string(i);

        for (pcf::Color a : h.classes[i]) {
            int forward = h.has_short(i, a) ? 1 : 0;
            for (const auto& [x, y] : le)
                if (x == a) ++forward;
            if (forward > 1) return "vertex with two forward edges at position " + std::to_string(i);

            int backward = h.has_short((i + k - 1) % k, a) ? 1 : 0;
            for (const auto& [x, y] : h.long_edges[(i + k - 2) % k])
                if (y == a) ++backward;
            if (backward > 1) return "vertex with two backward edges at position " + std::to_string(i);
        }
    }
    return std::nullopt;
}

// A produced extension tuple must be a transversal of H: one color per class,
// consecutive picks distinct, no long edge hit.
inline std::optional<std::string> audit_extension_tuple(const pcf::AuxGraphH& h,
                                                        const std::vector<pcf::Color>& x) {
    const int k = h.k;
    if (static_cast<int>(x.size()) != k) return "tuple size differs from class count";
    for (int i = 0; i < k; ++i) {
        if (!std::count(h.classes[i].begin(), h.classes[i].end(), x[i]))
            return "tuple color outside its class at position " + std::to_string(i);
        if (x[i] == x[(i + 1) % k]) return "equal consecutive picks at position " + std::to_string(i);
        if (h.has_long(i, x[i], x[(i + 2) % k]))
            return "tuple hits a long edge at position " + std::to_string(i);
    }
    return std::nullopt;
}

} // namespace pcf_test
