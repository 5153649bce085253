#include "pcf/constructive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pcf/errors.hpp"
#include "pcf/oracle.hpp"

namespace pcf {

namespace {

bool in_sorted(const std::vector<Color>& lst, Color c) {
    return std::binary_search(lst.begin(), lst.end(), c);
}

Color smallest_not_in(const std::vector<Color>& lst, const std::vector<Color>& banned) {
    for (Color c : lst)
        if (!std::count(banned.begin(), banned.end(), c)) return c;
    throw InternalContradictionError("choice set came up empty");
}

// A PCF coloring of a cycle is exactly a sequence where consecutive colors
// differ and colors two apart differ (with wrap-around).
bool cycle_sequence_ok(const std::vector<std::vector<Color>>& lists, const std::vector<Color>& a) {
    const int k = static_cast<int>(a.size());
    for (int i = 0; i < k; ++i) {
        if (!in_sorted(lists[i], a[i])) return false;
        if (a[i] == a[(i + 1) % k]) return false;
        if (k > 3 && a[i] == a[(i + 2) % k]) return false;
        if (k == 3 && a[i] == a[(i + 2) % 3]) return false;
    }
    return true;
}

// Lexicographically least valid color sequence for a cycle with the given
// per-position lists, or nullopt.  Seeded over (a0, a1); for each seed a
// memoized suffix-feasibility check guides a greedy reconstruction.
std::optional<std::vector<Color>> cycle_dp(const std::vector<std::vector<Color>>& lists) {
    const int k = static_cast<int>(lists.size());
    std::map<std::tuple<int, Color, Color>, bool> memo;
    Color a0 = -1, a1 = -1;

    // feasible(i, p2, p1): positions i..k-1 can be filled given a_{i-2}=p2, a_{i-1}=p1.
    auto feasible = [&](auto&& self, int i, Color p2, Color p1) -> bool {
        if (i == k) return true;
        const auto key = std::make_tuple(i, p2, p1);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool ok = false;
        for (Color c : lists[i]) {
            if (c == p1 || c == p2) continue;
            if (i == k - 2 && c == a0) continue;          // a_{k-2} vs a_0 two apart
            if (i == k - 1 && (c == a0 || c == a1)) continue; // adjacent to a_0, two from a_1
            if (self(self, i + 1, p1, c)) {
                ok = true;
                break;
            }
        }
        memo[key] = ok;
        return ok;
    };

    for (Color c0 : lists[0]) {
        a0 = c0;
        for (Color c1 : lists[1]) {
            if (c1 == c0) continue;
            a1 = c1;
            memo.clear();
            if (!feasible(feasible, 2, c0, c1)) continue;
            std::vector<Color> a{c0, c1};
            for (int i = 2; i < k; ++i) {
                for (Color c : lists[i]) {
                    if (c == a[i - 1] || c == a[i - 2]) continue;
                    if (i == k - 2 && c == a0) continue;
                    if (i == k - 1 && (c == a0 || c == a1)) continue;
                    if (feasible(feasible, i + 1, a[i - 1], c)) {
                        a.push_back(c);
                        break;
                    }
                }
            }
            if (static_cast<int>(a.size()) == k && cycle_sequence_ok(lists, a)) return a;
            throw InternalContradictionError("cycle_dp: reconstruction diverged from feasibility");
        }
    }
    return std::nullopt;
}

// Lexicographically least system of distinct representatives.
std::optional<std::vector<Color>> smallest_sdr(const std::vector<std::vector<Color>>& lists) {
    const int k = static_cast<int>(lists.size());
    std::vector<Color> pick;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (Color c : lists[i]) {
            if (std::count(pick.begin(), pick.end(), c)) continue;
            pick.push_back(c);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return pick;
}

std::vector<Color> first_four(const std::vector<Color>& lst) {
    return {lst.begin(), lst.begin() + std::min<std::size_t>(4, lst.size())};
}

} // namespace

CycleSolve solve_cycle_pcf(const CyclePath& cycle, const ListAssignment& L) {
    const int k = cycle.length();
    if (k < 3) throw std::invalid_argument("solve_cycle_pcf: cycle length >= 3 required");
    std::vector<std::vector<Color>> lists(k);
    for (int i = 0; i < k; ++i) {
        lists[i] = L.list(cycle.vertices[i]);
        if (lists[i].size() < 4)
            throw std::invalid_argument("solve_cycle_pcf: lists of size >= 4 required");
    }

    CycleSolve out;
    out.coloring = PartialColoring(L.vertex_count());
    auto commit = [&](const std::vector<Color>& a) {
        if (!cycle_sequence_ok(lists, a))
            throw InternalContradictionError("solve_cycle_pcf: produced an invalid coloring");
        for (int i = 0; i < k; ++i) out.coloring.set(cycle.vertices[i], a[i]);
    };

    if (k <= 4) {
        // Short cycles: all-distinct colors; a fresh color per vertex always
        // exists (four-color lists, at most four vertices).
        auto sdr = smallest_sdr(lists);
        if (!sdr) throw InternalContradictionError("solve_cycle_pcf: no SDR on a short cycle");
        commit(*sdr);
        return out;
    }

    if (k == 5) {
        // The one genuinely hard length: decide it exactly and report honestly.
        auto a = cycle_dp(lists);
        if (!a) {
            out.status = CycleSolve::Status::UnsolvableFiveCycle;
            return out;
        }
        out.used_dp = true;
        commit(*a);
        return out;
    }

    // Work with exactly four colors per vertex (the smallest four): unequal
    // trimmed lists then guarantee a usable first/last rotation below.
    std::vector<std::vector<Color>> trim(k);
    for (int i = 0; i < k; ++i) trim[i] = first_four(lists[i]);

    const bool all_equal = std::all_of(trim.begin(), trim.end(),
                                       [&](const auto& t) { return t == trim[0]; });
    if (all_equal) {
        auto a = cycle_dp(trim);
        if (!a) throw InternalContradictionError("solve_cycle_pcf: DP failed on equal lists, length != 5");
        out.used_dp = true;
        commit(*a);
        return out;
    }

    // Rotate so position 0 and position k-1 have different lists, then color
    // greedily: each vertex avoids its two predecessors; the last one avoids
    // the second vertex and its own two predecessors; the first color is
    // outside the last list, which settles the wrap-around properness.
    int start = 0;
    for (int i = 0; i < k; ++i) {
        if (trim[i] != trim[(i + k - 1) % k]) {
            start = i;
            break;
        }
    }
    auto tl = [&](int j) -> const std::vector<Color>& { return trim[(start + j) % k]; };
    std::vector<Color> a(k, -1);
    a[0] = smallest_not_in(tl(0), tl(k - 1));
    a[1] = smallest_not_in(tl(1), {a[0]});
    for (int j = 2; j <= k - 2; ++j) a[j] = smallest_not_in(tl(j), {a[j - 1], a[j - 2]});
    a[k - 1] = smallest_not_in(tl(k - 1), {a[1], a[k - 3], a[k - 2]});

    std::vector<Color> rotated(k);
    for (int j = 0; j < k; ++j) rotated[(start + j) % k] = a[j];
    if (cycle_sequence_ok(trim, rotated)) {
        commit(rotated);
        return out;
    }
    // The greedy pass can leave the closing vertex without a unique neighbor
    // color; decide exactly over the full lists instead.
    auto dp = cycle_dp(lists);
    if (!dp) throw InternalContradictionError("solve_cycle_pcf: DP exhausted on length != 5");
    out.used_dp = true;
    commit(*dp);
    return out;
}

void extend_over_pendant(const Graph& g, PartialColoring& phi, int v, int x,
                         const ListAssignment& L) {
    if (!phi.has(x)) throw std::invalid_argument("extend_over_pendant: neighbor uncolored");
    if (L.list_size(v) < 3) throw std::invalid_argument("extend_over_pendant: |L(v)| >= 3 required");
    std::vector<Color> banned{phi.color(x)};
    const auto ux = unique_neighbor_colors(g, phi, x);
    if (!ux.empty()) banned.push_back(ux.front()); // protect one unique color at x
    phi.set(v, smallest_not_in(L.list(v), banned));
}

namespace {

// Cycle order of a 2-regular vertex set, starting at `start` and stepping to
// its smaller neighbor first.
std::vector<int> walk_cycle(const Graph& g, const std::vector<int>& members, int start) {
    std::set<int> in(members.begin(), members.end());
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (w != prev && in.count(w)) {
                next = w;
                break; // neighbors sorted: smaller first
            }
        }
        if (next == start || next == -1) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

SubcubicResult solve_subcubic(const Graph& g, const ListAssignment& L, std::uint64_t node_limit) {
    const int n = g.vertex_count();
    if (L.vertex_count() != n) throw std::invalid_argument("solve_subcubic: size mismatch");
    if (n < 1) throw std::invalid_argument("solve_subcubic: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("solve_subcubic: disconnected input");
    if (g.max_degree() > 3) throw std::invalid_argument("solve_subcubic: max degree 3 exceeded");
    for (int v = 0; v < n; ++v)
        if (L.list_size(v) < g.degree(v) + 2)
            throw std::invalid_argument("solve_subcubic: |L(v)| >= degree+2 required");
    if (is_cycle_graph(g) && n == 5)
        throw std::invalid_argument("solve_subcubic: the 5-cycle is the excluded graph");

    SubcubicResult res;
    res.coloring = PartialColoring(n);
    PartialColoring& phi = res.coloring;

    if (n == 1) {
        phi.set(0, L.list(0).front());
        return res;
    }
    if (n == 2) {
        phi.set(0, L.list(0).front());
        phi.set(1, smallest_not_in(L.list(1), {phi.color(0)}));
        return res;
    }

    if (is_cycle_graph(g)) {
        auto cyc = shortest_cycle(g);
        const CycleSolve cs = solve_cycle_pcf(*cyc, L);
        if (cs.status != CycleSolve::Status::Solved)
            throw InternalContradictionError("solve_subcubic: cycle branch failed off the 5-cycle");
        phi = cs.coloring;
        return res;
    }

    const PeelSequence peel = peel_degree_one(g);
    const auto& core_ids = peel.core_vertices;
    std::size_t reattach_from = peel.removals.size(); // re-attach [0, reattach_from) in reverse

    const bool core_is_edge = core_ids.size() == 2;
    bool core_is_cycle = !core_is_edge;
    for (int v : core_ids)
        if (peel.core.degree(v) != 2) core_is_cycle = false;

    if (core_is_edge) {
        const int x = core_ids[0], y = core_ids[1];
        phi.set(x, L.list(x).front());
        phi.set(y, smallest_not_in(L.list(y), {phi.color(x)}));
    } else if (core_is_cycle) {
        // Color the core cycle together with the last peeled pendant: start the
        // cycle at the pendant's attachment w1, color w2, w3, ... forward, close
        // with w1 avoiding its neighbors' and successors' colors, and give the
        // pendant a color differing from w1 and w2.
        const auto [pendant, w1] = peel.removals.back();
        --reattach_from;
        const std::vector<int> ws = walk_cycle(peel.core, core_ids, w1);
        const int t = static_cast<int>(ws.size());
        phi.set(ws[1], L.list(ws[1]).front());
        phi.set(ws[2], smallest_not_in(L.list(ws[2]), {phi.color(ws[1])}));
        for (int j = 3; j < t; ++j)
            phi.set(ws[j], smallest_not_in(L.list(ws[j]), {phi.color(ws[j - 1]), phi.color(ws[j - 2])}));
        phi.set(w1, smallest_not_in(L.list(w1), {phi.color(ws[1]), phi.color(ws[2]),
                                                 phi.color(ws[t - 2]), phi.color(ws[t - 1])}));
        phi.set(pendant, smallest_not_in(L.list(pendant), {phi.color(w1), phi.color(ws[1])}));
    } else {
        // Core keeps a degree-3 vertex: no constructive recipe covers it here,
        // so the exhaustive oracle colors the core (lists are generous: every
        // core vertex kept size >= its core degree + 2).
        res.used_oracle_core = true;
        const InducedSubgraph core = induced_subgraph(peel.core, core_ids);
        std::vector<std::vector<Color>> core_lists(core.to_old.size());
        for (std::size_t i = 0; i < core.to_old.size(); ++i) core_lists[i] = L.list(core.to_old[i]);
        const SolveOutcome o = solve_exhaustive(core.graph, ListAssignment(std::move(core_lists)), node_limit);
        if (o.status == SolveOutcome::Status::ResourceLimit)
            throw ResourceLimitError("solve_subcubic: oracle budget exhausted on the core");
        if (o.status != SolveOutcome::Status::Satisfiable)
            throw InternalContradictionError("solve_subcubic: core reported unsatisfiable");
        for (std::size_t i = 0; i < core.to_old.size(); ++i)
            phi.set(core.to_old[i], o.witness.color(static_cast<int>(i)));
    }

    for (std::size_t i = reattach_from; i-- > 0;) {
        const auto [v, x] = peel.removals[i];
        extend_over_pendant(g, phi, v, x, L);
    }

    if (auto bad = verify_pcf(g, L, phi))
        throw InternalContradictionError("solve_subcubic: " + bad->describe());
    return res;
}

// --- 1-subdivisions -------------------------------------------------------------

SubdivisionInstance make_subdivision_instance(const Graph& base, ListAssignment lists) {
    SubdivisionInstance inst{base, subdivide(base), std::move(lists)};
    const int nb = base.vertex_count();
    if (inst.lists.vertex_count() != inst.sub.graph.vertex_count())
        throw std::invalid_argument("subdivision instance: list count != subdivision size");
    for (int v = 0; v < nb; ++v)
        if (inst.lists.list_size(v) < base.degree(v) + 2)
            throw std::invalid_argument("subdivision instance: branch vertex list too small");
    for (int m = nb; m < inst.sub.graph.vertex_count(); ++m)
        if (inst.lists.list_size(m) < 4)
            throw std::invalid_argument("subdivision instance: midpoint list smaller than 4");
    return inst;
}

namespace {

struct SubdivisionSolver {
    const Graph& base;
    const Graph& sgraph;
    ListAssignment work; // midpoints trimmed to exactly 4 colors; branch lists shrink during recursion
    PartialColoring phi;
    std::vector<char> alive;
    std::map<std::pair<int, int>, int> mid;

    explicit SubdivisionSolver(const SubdivisionInstance& inst)
        : base(inst.base), sgraph(inst.sub.graph), work(inst.lists),
          phi(inst.sub.graph.vertex_count()), alive(inst.base.vertex_count(), 1) {
        for (const auto& [e, m] : inst.sub.midpoint_of) {
            mid[e] = m;
            // The sparse-color counting below needs midpoint lists of size
            // exactly 4; any PCF coloring from the trimmed lists is one from
            // the originals.
            work.set_list(m, first_four(work.list(m)));
        }
    }

    int midpoint(int u, int v) const { return mid.at(u < v ? std::make_pair(u, v) : std::make_pair(v, u)); }

    std::vector<int> alive_neighbors(int v) const {
        std::vector<int> out;
        for (int w : base.neighbors(v))
            if (alive[w]) out.push_back(w);
        return out;
    }

    std::vector<std::vector<int>> pieces(const std::vector<int>& verts) const {
        std::set<int> in(verts.begin(), verts.end());
        std::set<int> todo = in;
        std::vector<std::vector<int>> out;
        while (!todo.empty()) {
            std::vector<int> comp, stack{*todo.begin()};
            todo.erase(todo.begin());
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (int w : base.neighbors(u)) {
                    if (in.count(w) && todo.count(w)) {
                        todo.erase(w);
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Color min_unique(int v) const {
        const auto u = unique_neighbor_colors(sgraph, phi, v);
        if (u.empty())
            throw InternalContradictionError("subdivision: expected a unique neighbor color");
        return u.front();
    }

    void solve_component(const std::vector<int>& comp) {
        if (comp.size() == 1) {
            phi.set(comp[0], work.list(comp[0]).front());
            return;
        }
        if (comp.size() == 2) {
            const int v1 = comp[0], v2 = comp[1];
            phi.set(v1, work.list(v1).front());
            phi.set(v2, smallest_not_in(work.list(v2), {phi.color(v1)}));
            const int m = midpoint(v1, v2);
            phi.set(m, smallest_not_in(work.list(m), {phi.color(v1), phi.color(v2)}));
            return;
        }

        // Degree-1 branch vertex: color it first, shield its neighbor.
        for (int v : comp) {
            if (alive_neighbors(v).size() != 1) continue;
            const int x = alive_neighbors(v)[0];
            const Color alpha = work.list(v).front();
            work.erase_color(x, alpha);
            alive[v] = 0;
            std::vector<int> rest = comp;
            rest.erase(std::find(rest.begin(), rest.end(), v));
            solve_component(rest);
            const Color c2 = min_unique(x);
            phi.set(v, alpha);
            const int m = midpoint(v, x);
            phi.set(m, smallest_not_in(work.list(m), {phi.color(x), c2, alpha}));
            return;
        }

        // All degrees 2 now.  Identical lists everywhere means a subdivided
        // cycle with nothing to distinguish any vertex: hand it to the cycle
        // solver.  (The subdivision of a cycle is the even cycle twice as long.)
        bool all_two = true;
        for (int v : comp) all_two = all_two && alive_neighbors(v).size() == 2;
        if (all_two) {
            bool identical = true;
            const auto& ref = work.list(comp[0]);
            for (int v : comp) identical = identical && work.list(v) == ref;
            for (int v : comp)
                for (int w : alive_neighbors(v))
                    if (v < w) identical = identical && work.list(midpoint(v, w)) == ref;
            if (identical) {
                const std::vector<int> order = walk_cycle_base(comp);
                std::vector<int> s_cycle;
                const int m = static_cast<int>(order.size());
                for (int i = 0; i < m; ++i) {
                    s_cycle.push_back(order[i]);
                    s_cycle.push_back(midpoint(order[i], order[(i + 1) % m]));
                }
                const CycleSolve cs = solve_cycle_pcf(CyclePath{s_cycle}, work);
                if (cs.status != CycleSolve::Status::Solved)
                    throw InternalContradictionError("subdivision: even cycle reported unsolvable");
                for (int v : s_cycle) phi.set(v, cs.coloring.color(v));
                return;
            }
        }

        // Main case: peel a branch vertex around a sparse color.
        const int v1 = pick_branch_vertex(comp);
        const auto nbrs = alive_neighbors(v1);
        const int d = static_cast<int>(nbrs.size());
        std::vector<std::vector<int>> holders; // per color of L(v1): midpoints containing it
        const std::vector<Color> lv1 = work.list(v1);
        Color alpha = -1;
        std::vector<int> blocked;
        for (Color c : lv1) {
            std::vector<int> hold;
            for (int w : nbrs) {
                const int m = midpoint(v1, w);
                if (in_sorted(work.list(m), c)) hold.push_back(m);
            }
            if (static_cast<int>(hold.size()) <= std::min(3, d - 1)) {
                alpha = c;
                blocked = std::move(hold);
                break;
            }
        }
        if (alpha < 0)
            throw InternalContradictionError("subdivision: no sparse color at the branch vertex");

        // Re-anchor: nbrs[anchor] plays the role of the guaranteed-unblocked edge.
        int anchor = -1;
        for (int i = 0; i < d; ++i) {
            if (!in_sorted(work.list(midpoint(v1, nbrs[i])), alpha)) {
                anchor = i;
                break;
            }
        }
        if (anchor < 0)
            throw InternalContradictionError("subdivision: sparse color blocked on every edge");

        alive[v1] = 0;
        for (int w : nbrs) work.erase_color(w, alpha);
        std::vector<int> rest = comp;
        rest.erase(std::find(rest.begin(), rest.end(), v1));
        for (const auto& piece : pieces(rest)) solve_component(piece);

        phi.set(v1, alpha);
        std::vector<Color> cvals(d);
        for (int i = 0; i < d; ++i) cvals[i] = min_unique(nbrs[i]);
        std::set<int> blocked_set(blocked.begin(), blocked.end());
        std::vector<Color> blocked_colors;
        for (int i = 0; i < d; ++i) {
            const int m = midpoint(v1, nbrs[i]);
            if (!blocked_set.count(m)) continue;
            phi.set(m, smallest_not_in(work.list(m), {phi.color(nbrs[i]), cvals[i], alpha}));
            blocked_colors.push_back(phi.color(m));
        }
        std::sort(blocked_colors.begin(), blocked_colors.end());

        // beta becomes the color that stays unique in v1's neighborhood.
        Color beta = -1;
        const int anchor_mid = midpoint(v1, nbrs[anchor]);
        const int distinct = static_cast<int>(std::set<Color>(blocked_colors.begin(), blocked_colors.end()).size());
        if (distinct <= 1) {
            std::vector<Color> ban{phi.color(nbrs[anchor]), cvals[anchor], alpha};
            if (distinct == 1) ban.push_back(blocked_colors.front());
            beta = smallest_not_in(work.list(anchor_mid), ban);
            phi.set(anchor_mid, beta);
        } else {
            for (Color c : blocked_colors) {
                if (std::count(blocked_colors.begin(), blocked_colors.end(), c) == 1) {
                    beta = c;
                    break;
                }
            }
            if (beta < 0)
                throw InternalContradictionError("subdivision: no unique color among blocked midpoints");
        }
        for (int i = 0; i < d; ++i) {
            const int m = midpoint(v1, nbrs[i]);
            if (phi.has(m)) continue;
            phi.set(m, smallest_not_in(work.list(m), {phi.color(nbrs[i]), cvals[i], alpha, beta}));
        }
    }

    std::vector<int> walk_cycle_base(const std::vector<int>& comp) const {
        std::vector<int> order{comp[0]};
        int prev = -1, cur = comp[0];
        while (true) {
            int next = -1;
            for (int w : alive_neighbors(cur)) {
                if (w != prev) {
                    next = w;
                    break;
                }
            }
            if (next == comp[0] || next < 0) break;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        return order;
    }

    int pick_branch_vertex(const std::vector<int>& comp) const {
        for (int v : comp) {
            const auto nb = alive_neighbors(v);
            if (nb.size() >= 3) return v;
            if (nb.size() == 2) {
                for (int w : nb)
                    if (work.list(midpoint(v, w)) != work.list(v)) return v;
            }
        }
        throw InternalContradictionError("subdivision: no branch vertex in a non-uniform component");
    }
};

} // namespace

SubdivisionResult solve_subdivision(const SubdivisionInstance& inst, std::uint64_t node_limit) {
    SubdivisionResult res;
    try {
        SubdivisionSolver solver(inst);
        std::vector<int> all(inst.base.vertex_count());
        for (int v = 0; v < inst.base.vertex_count(); ++v) all[v] = v;
        for (const auto& comp : solver.pieces(all)) solver.solve_component(comp);
        res.coloring = solver.phi;
        if (auto bad = verify_pcf(inst.sub.graph, inst.lists, res.coloring))
            throw InternalContradictionError("subdivision: " + bad->describe());
        return res;
    } catch (const InternalContradictionError&) {
        res.internal_contradiction = true;
    }
    const SolveOutcome o = solve_exhaustive(inst.sub.graph, inst.lists, node_limit);
    if (o.status == SolveOutcome::Status::ResourceLimit)
        throw ResourceLimitError("solve_subdivision: fallback oracle budget exhausted");
    if (o.status != SolveOutcome::Status::Satisfiable)
        throw InternalContradictionError("solve_subdivision: instance reported unsatisfiable");
    res.coloring = o.witness;
    return res;
}

} // namespace pcf
