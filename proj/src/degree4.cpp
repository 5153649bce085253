#include "pcf/degree4.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "pcf/constructive.hpp"
#include "pcf/errors.hpp"
#include "pcf/oracle.hpp"

namespace pcf {

bool blocks(const BoundaryContext& ctx, int i, Color alpha, Color beta) {
    const int k = ctx.cycle.length();
    if (i < 0 || i >= k) throw std::out_of_range("blocks: position out of range");
    const auto& off = ctx.off_neighbors[i];
    if (off.size() == 1) return alpha == beta && beta == ctx.phi.color(off[0]);
    if (off.size() == 2) {
        const Color p = ctx.phi.color(off[0]), q = ctx.phi.color(off[1]);
        if (alpha == beta) return false;
        return (alpha == p && beta == q) || (alpha == q && beta == p);
    }
    return false;
}

std::vector<std::pair<Color, Color>> blocked_pairs(const BoundaryContext& ctx, int i) {
    const auto& off = ctx.off_neighbors.at(i);
    if (off.size() == 1) {
        const Color p = ctx.phi.color(off[0]);
        return {{p, p}};
    }
    if (off.size() == 2) {
        const Color p = ctx.phi.color(off[0]), q = ctx.phi.color(off[1]);
        if (p == q) return {};
        return {{p, q}, {q, p}};
    }
    return {};
}

Graph build_gpp(const Graph& g, const CyclePath& cycle) {
    if (cycle.length() < 5) throw std::invalid_argument("build_gpp: cycle length >= 5 required");
    Graph out = delete_vertices(g, cycle.vertices);
    std::set<int> on_cycle(cycle.vertices.begin(), cycle.vertices.end());
    std::set<int> seen_off; // off a shortest cycle of length >= 5 no vertex has two cycle neighbors
    for (int v : cycle.vertices) {
        std::vector<int> off;
        for (int w : g.neighbors(v))
            if (!on_cycle.count(w)) off.push_back(w);
        for (int w : off)
            if (!seen_off.insert(w).second)
                throw InternalContradictionError("build_gpp: overlapping off-cycle neighborhoods");
        if (off.size() == 2) out.add_edge(off[0], off[1]);
    }
    return out;
}

Color choose_cu(const Graph& gprime, const PartialColoring& phi, int u) {
    if (!phi.has(u)) throw std::invalid_argument("choose_cu: vertex must be colored");
    const auto uniq = unique_neighbor_colors(gprime, phi, u);
    if (!uniq.empty()) return uniq.front();
    std::set<Color> seen;
    int colored = 0;
    for (int w : gprime.neighbors(u)) {
        if (phi.has(w)) {
            seen.insert(phi.color(w));
            ++colored;
        }
    }
    if (colored == 0) throw std::invalid_argument("choose_cu: no colored neighbor");
    if (seen.size() != 1)
        throw InternalContradictionError("choose_cu: empty unique set with several repeated colors");
    return *seen.begin();
}

std::vector<std::vector<Color>> boundary_lists(const Graph& g, const CyclePath& cycle,
                                               const ListAssignment& L,
                                               const PartialColoring& phi,
                                               const std::map<int, Color>& protected_colors) {
    const std::set<int> on_cycle(cycle.vertices.begin(), cycle.vertices.end());
    std::vector<std::vector<Color>> out;
    for (int v : cycle.vertices) {
        std::set<Color> banned;
        for (int w : g.neighbors(v)) {
            if (on_cycle.count(w)) continue;
            banned.insert(phi.color(w));
            if (auto it = protected_colors.find(w); it != protected_colors.end())
                banned.insert(it->second);
        }
        std::vector<Color> lst;
        for (Color c : L.list(v))
            if (!banned.count(c)) lst.push_back(c);
        const std::size_t need = g.degree(v) == 3 ? 4 : 3;
        if (lst.size() < need)
            throw InternalContradictionError("boundary_lists: residual list too small at vertex " +
                                             std::to_string(v));
        out.push_back(std::move(lst));
    }
    return out;
}

bool AuxGraphH::has_short(int i, Color a) const {
    const auto& s = shared_colors.at(i);
    return std::binary_search(s.begin(), s.end(), a);
}

bool AuxGraphH::has_long(int i, Color a, Color b) const {
    const auto& e = long_edges.at(i);
    return std::find(e.begin(), e.end(), std::make_pair(a, b)) != e.end();
}

AuxGraphH build_aux_H(const std::vector<std::vector<Color>>& lists,
                      const std::function<bool(int, Color, Color)>& blocked_at) {
    AuxGraphH h;
    h.k = static_cast<int>(lists.size());
    h.classes = lists;
    for (auto& cls : h.classes) {
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    }
    h.shared_colors.resize(h.k);
    h.long_edges.resize(h.k);
    for (int i = 0; i < h.k; ++i) {
        const auto& a = h.classes[i];
        const auto& b = h.classes[(i + 1) % h.k];
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(h.shared_colors[i]));
        for (Color x : h.classes[i])
            for (Color y : h.classes[(i + 2) % h.k])
                if (blocked_at(i, x, y)) h.long_edges[i].emplace_back(x, y);
    }
    return h;
}

AuxGraphH build_aux_H(const BoundaryContext& ctx) {
    const int k = ctx.cycle.length();
    return build_aux_H(ctx.lists, [&ctx, k](int i, Color a, Color b) {
        return blocks(ctx, (i + 1) % k, a, b);
    });
}

std::optional<std::vector<Color>> find_transversal_IS(const AuxGraphH& h) {
    const int k = h.k;
    if (k < 3) throw std::invalid_argument("find_transversal_IS: k >= 3 required");
    for (const auto& cls : h.classes)
        if (cls.empty()) return std::nullopt;

    Color x0 = -1, x1 = -1;
    std::map<std::tuple<int, Color, Color>, bool> memo;

    // admissible(i, p2, p1, c): c can sit at position i after p2, p1.
    auto admissible = [&](int i, Color p2, Color p1, Color c) {
        if (c == p1) return false;                       // consecutive classes share the pick
        if (h.has_long((i + k - 2) % k, p2, c)) return false;
        if (i == k - 2 && h.has_long(i, c, x0)) return false;
        if (i == k - 1 && (c == x0 || h.has_long(i, c, x1))) return false;
        return true;
    };
    auto feasible = [&](auto&& self, int i, Color p2, Color p1) -> bool {
        if (i == k) return true;
        const auto key = std::make_tuple(i, p2, p1);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool ok = false;
        for (Color c : h.classes[i]) {
            if (admissible(i, p2, p1, c) && self(self, i + 1, p1, c)) {
                ok = true;
                break;
            }
        }
        memo[key] = ok;
        return ok;
    };

    for (Color c0 : h.classes[0]) {
        x0 = c0;
        for (Color c1 : h.classes[1]) {
            if (c1 == c0) continue;
            // On a triangle the seed classes are also two apart, so the long
            // edge between them must hold as well.
            if (k == 3 && h.has_long(1, c1, c0)) continue;
            x1 = c1;
            memo.clear();
            if (!feasible(feasible, 2, c0, c1)) continue;
            std::vector<Color> x{c0, c1};
            for (int i = 2; i < k; ++i) {
                for (Color c : h.classes[i]) {
                    if (admissible(i, x[i - 2], x[i - 1], c) && feasible(feasible, i + 1, x[i - 1], c)) {
                        x.push_back(c);
                        break;
                    }
                }
            }
            if (static_cast<int>(x.size()) != k)
                throw InternalContradictionError("find_transversal_IS: reconstruction diverged");
            return x;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Color>> extend_small_cycle(const Graph& g, const BoundaryContext& ctx) {
    const int k = ctx.cycle.length();
    if (k != 3 && k != 4)
        throw std::invalid_argument("extend_small_cycle: cycle length 3 or 4 required");
    for (const auto& lst : ctx.lists)
        if (lst.empty()) return std::nullopt;

    std::set<int> audit(ctx.cycle.vertices.begin(), ctx.cycle.vertices.end());
    for (const auto& off : ctx.off_neighbors) audit.insert(off.begin(), off.end());

    PartialColoring trial = ctx.phi;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) trial.set(ctx.cycle.vertices[i], ctx.lists[i][idx[i]]);
        bool ok = true;
        for (int i = 0; ok && i < k; ++i) {
            const int v = ctx.cycle.vertices[i];
            for (int w : g.neighbors(v)) {
                if (trial.has(w) && trial.color(w) == trial.color(v)) {
                    ok = false;
                    break;
                }
            }
        }
        for (int v : audit) {
            if (!ok) break;
            ok = !unique_neighbor_colors(g, trial, v).empty();
        }
        if (ok) {
            std::vector<Color> out(k);
            for (int i = 0; i < k; ++i) out[i] = ctx.lists[i][idx[i]];
            return out;
        }
        // next tuple, lexicographically
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == ctx.lists[pos].size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        for (int i = 0; i < k; ++i) trial.clear(ctx.cycle.vertices[i]);
    }
}

// --- full solver ---------------------------------------------------------------

namespace {

struct D4Solver {
    const ListAssignment& L;
    const Degree4Options& opts;
    Degree4Stats stats;
    PartialColoring phi;

    D4Solver(int n, const ListAssignment& lists, const Degree4Options& options)
        : L(lists), opts(options), phi(n) {}

    void oracle_on(const Graph& h, const std::vector<int>& comp, bool trivial) {
        const InducedSubgraph ind = induced_subgraph(h, comp);
        std::vector<std::vector<Color>> ls(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) ls[i] = L.list(ind.to_old[i]);
        const SolveOutcome o =
            solve_exhaustive(ind.graph, ListAssignment(std::move(ls)), opts.node_limit);
        if (o.status == SolveOutcome::Status::ResourceLimit)
            throw ResourceLimitError("degree-4 solver: oracle budget exhausted");
        if (o.status != SolveOutcome::Status::Satisfiable)
            throw InternalContradictionError("degree-4 solver: subproblem reported unsatisfiable");
        for (std::size_t i = 0; i < comp.size(); ++i)
            phi.set(ind.to_old[i], o.witness.color(static_cast<int>(i)));
        if (trivial) {
            ++stats.trivial_oracle_calls;
        } else {
            ++stats.fallback_count;
            stats.fallback_used = true;
        }
    }

    // comp must be a whole connected component of h (so h.degree is the
    // within-component degree).
    void rec(const Graph& h, const std::vector<int>& comp, int depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        try {
            step(h, comp, depth);
        } catch (const InternalContradictionError&) {
            oracle_on(h, comp, false);
        }
    }

    void step(const Graph& h, const std::vector<int>& comp, int depth) {
        const int n = static_cast<int>(comp.size());
        long total_degree = 0;
        int min_degree = h.vertex_count();
        for (int v : comp) {
            total_degree += h.degree(v);
            min_degree = std::min(min_degree, h.degree(v));
        }
        const long m = total_degree / 2;
        if (n <= 4 || m == n - 1) {
            oracle_on(h, comp, true);
            return;
        }
        if (min_degree <= 2) {
            low_degree(h, comp, depth);
            return;
        }
        cycle_branch(h, comp, depth);
    }

    struct Elimination {
        int v;
        std::vector<int> nbrs; // neighbors at removal time (1 or 2)
        bool added = false;    // the bypass edge was new
    };

    void low_degree(const Graph& h, const std::vector<int>& comp, int depth) {
        Graph work = h;
        std::set<int> alive(comp.begin(), comp.end());
        std::vector<Elimination> elims;
        while (alive.size() > 2) {
            int pick = -1;
            for (int v : alive) {
                if (work.degree(v) == 1) {
                    pick = v;
                    break;
                }
            }
            if (pick < 0) {
                for (int v : alive) {
                    if (work.degree(v) == 2) {
                        pick = v;
                        break;
                    }
                }
            }
            if (pick < 0) break;
            Elimination e{pick, work.neighbors(pick), false};
            for (int u : e.nbrs) work.remove_edge(pick, u);
            if (e.nbrs.size() == 2) {
                // Bypass edge: the recursion must give the two exposed
                // neighbors distinct colors or the replayed vertex would see
                // no unique color.
                e.added = !work.has_edge(e.nbrs[0], e.nbrs[1]);
                if (e.added) work.add_edge(e.nbrs[0], e.nbrs[1]);
            }
            alive.erase(pick);
            elims.push_back(std::move(e));
        }
        stats.low_degree_steps += static_cast<int>(elims.size());

        std::vector<char> mask(work.vertex_count(), 0);
        for (int v : alive) mask[v] = 1;
        for (const auto& piece : connected_components(work, &mask)) rec(work, piece, depth + 1);

        for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
            if (it->added) work.remove_edge(it->nbrs[0], it->nbrs[1]);
            for (int u : it->nbrs) work.add_edge(it->v, u);
            if (it->nbrs.size() == 1) {
                extend_over_pendant(work, phi, it->v, it->nbrs[0], L);
            } else {
                const int u1 = it->nbrs[0], u2 = it->nbrs[1];
                const std::vector<Color> ban{phi.color(u1), phi.color(u2),
                                             choose_cu(work, phi, u1), choose_cu(work, phi, u2)};
                Color picked = -1;
                for (Color c : L.list(it->v)) {
                    if (!std::count(ban.begin(), ban.end(), c)) {
                        picked = c;
                        break;
                    }
                }
                if (picked < 0)
                    throw InternalContradictionError("degree-4 solver: replay ran out of colors");
                phi.set(it->v, picked);
            }
        }
    }

    BoundaryContext make_context(const Graph& h, const CyclePath& cycle, const Graph& gprime) {
        const std::set<int> on_cycle(cycle.vertices.begin(), cycle.vertices.end());
        BoundaryContext ctx;
        ctx.cycle = cycle;
        for (int v : cycle.vertices) {
            ctx.cycle_degrees.push_back(h.degree(v));
            std::vector<int> off;
            for (int w : h.neighbors(v))
                if (!on_cycle.count(w)) off.push_back(w);
            ctx.off_neighbors.push_back(std::move(off));
        }
        ctx.phi = phi;
        for (const auto& off : ctx.off_neighbors) {
            for (int u : off) {
                if (ctx.protected_colors.count(u)) continue;
                // Vertices with no colored neighbor off the cycle carry no
                // protected color; their unique sets are audited directly.
                const auto& nb = gprime.neighbors(u);
                const bool anchored = std::any_of(nb.begin(), nb.end(),
                                                  [this](int w) { return phi.has(w); });
                if (anchored) ctx.protected_colors[u] = choose_cu(gprime, phi, u);
            }
        }
        ctx.lists = boundary_lists(h, cycle, L, phi, ctx.protected_colors);
        return ctx;
    }

    bool extension_valid(const Graph& h, const BoundaryContext& ctx) const {
        std::set<int> audit(ctx.cycle.vertices.begin(), ctx.cycle.vertices.end());
        for (const auto& off : ctx.off_neighbors) audit.insert(off.begin(), off.end());
        for (int v : ctx.cycle.vertices)
            for (int w : h.neighbors(v))
                if (phi.has(w) && phi.color(w) == phi.color(v)) return false;
        for (int v : audit)
            if (unique_neighbor_colors(h, phi, v).empty()) return false;
        return true;
    }

    void cycle_branch(const Graph& h, const std::vector<int>& comp, int depth) {
        const InducedSubgraph ind = induced_subgraph(h, comp);
        const auto local = shortest_cycle(ind.graph);
        if (!local)
            throw InternalContradictionError("degree-4 solver: expected a cycle at min degree 3");
        CyclePath cycle;
        for (int v : local->vertices) cycle.vertices.push_back(ind.to_old[v]);
        const int k = cycle.length();

        const std::set<int> on_cycle(cycle.vertices.begin(), cycle.vertices.end());
        std::vector<int> rest;
        for (int v : comp)
            if (!on_cycle.count(v)) rest.push_back(v);

        if (k <= 4) {
            const Graph hp = delete_vertices(h, cycle.vertices);
            std::vector<char> mask(hp.vertex_count(), 0);
            for (int v : rest) mask[v] = 1;
            for (const auto& piece : connected_components(hp, &mask)) rec(hp, piece, depth + 1);
            const BoundaryContext ctx = make_context(h, cycle, hp);
            const auto x = extend_small_cycle(h, ctx);
            if (opts.observer) opts.observer(ctx, build_aux_H(ctx), x);
            if (!x)
                throw InternalContradictionError("degree-4 solver: no extension over a short cycle");
            for (int i = 0; i < k; ++i) phi.set(cycle.vertices[i], (*x)[i]);
            ++stats.small_cycle_extensions;
            return;
        }

        const Graph gpp = build_gpp(h, cycle);
        std::vector<char> mask(gpp.vertex_count(), 0);
        for (int v : rest) mask[v] = 1;
        for (const auto& piece : connected_components(gpp, &mask)) rec(gpp, piece, depth + 1);

        const Graph gprime = delete_vertices(h, cycle.vertices);
        const BoundaryContext ctx = make_context(h, cycle, gprime);
        const AuxGraphH aux = build_aux_H(ctx);
        const auto x = find_transversal_IS(aux);
        if (opts.observer) opts.observer(ctx, aux, x);
        if (!x)
            throw InternalContradictionError("degree-4 solver: no transversal for the cycle extension");
        for (int i = 0; i < k; ++i) phi.set(cycle.vertices[i], (*x)[i]);
        if (!extension_valid(h, ctx))
            throw InternalContradictionError("degree-4 solver: cycle extension failed validation");
        ++stats.long_cycle_extensions;
    }
};

void validate_inputs(const Graph& g, const ListAssignment& L, int extra) {
    if (L.vertex_count() != g.vertex_count())
        throw std::invalid_argument("degree-4 solver: list/graph size mismatch");
    if (g.max_degree() > 4) throw std::invalid_argument("degree-4 solver: max degree 4 exceeded");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (L.list_size(v) < g.degree(v) + extra)
            throw std::invalid_argument("degree-4 solver: |L(v)| >= degree+3 required");
}

} // namespace

Degree4Result solve_maxdeg4(const Graph& g, const ListAssignment& L, const Degree4Options& options) {
    if (g.vertex_count() < 1) throw std::invalid_argument("degree-4 solver: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("degree-4 solver: disconnected input");
    validate_inputs(g, L, 3);

    D4Solver solver(g.vertex_count(), L, options);
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    solver.rec(g, all, 0);
    if (auto bad = verify_pcf(g, L, solver.phi))
        throw InternalContradictionError("degree-4 solver: " + bad->describe());
    return {std::move(solver.phi), solver.stats};
}

Degree4Result solve_maxdeg4_components(const Graph& g, const ListAssignment& L,
                                       const Degree4Options& options) {
    validate_inputs(g, L, 3);
    Degree4Result out;
    out.coloring = PartialColoring(g.vertex_count());
    for (const auto& comp : connected_components(g)) {
        const InducedSubgraph ind = induced_subgraph(g, comp);
        std::vector<std::vector<Color>> ls(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) ls[i] = L.list(ind.to_old[i]);
        const Degree4Result part = solve_maxdeg4(ind.graph, ListAssignment(std::move(ls)), options);
        for (std::size_t i = 0; i < comp.size(); ++i)
            out.coloring.set(ind.to_old[i], part.coloring.color(static_cast<int>(i)));
        out.stats.max_depth = std::max(out.stats.max_depth, part.stats.max_depth);
        out.stats.low_degree_steps += part.stats.low_degree_steps;
        out.stats.small_cycle_extensions += part.stats.small_cycle_extensions;
        out.stats.long_cycle_extensions += part.stats.long_cycle_extensions;
        out.stats.trivial_oracle_calls += part.stats.trivial_oracle_calls;
        out.stats.fallback_count += part.stats.fallback_count;
        out.stats.fallback_used = out.stats.fallback_used || part.stats.fallback_used;
    }
    return out;
}

} // namespace pcf
