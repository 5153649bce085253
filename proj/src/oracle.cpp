#include "pcf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Shared backtracking engine.  Vertices are colored in descending-degree order
// (ties by id), colors ascending.  Prunes on properness and, whenever the last
// neighbor of some vertex w is colored, on w's unique set being empty; both
// prunes are exact, so a finished search is a proof of unsatisfiability and
// counting is not affected.
struct Search {
    const Graph& g;
    const ListAssignment& L;
    std::uint64_t node_limit;
    std::uint64_t node_cap_for_count; // only used by count mode

    std::vector<int> order;          // position -> vertex
    PartialColoring phi;
    std::vector<int> colored_neighbors;
    std::uint64_t nodes = 0;
    bool limit_hit = false;

    // count mode
    bool counting = false;
    std::uint64_t found = 0;
    std::uint64_t cap = 0;

    Search(const Graph& graph, const ListAssignment& lists, std::uint64_t limit)
        : g(graph), L(lists), node_limit(limit), node_cap_for_count(limit),
          phi(graph.vertex_count()), colored_neighbors(graph.vertex_count(), 0) {
        const int n = g.vertex_count();
        if (L.vertex_count() != n) throw std::invalid_argument("solve: lists/graph size mismatch");
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool unique_set_empty(int w) const {
        std::map<Color, int> count;
        for (int x : g.neighbors(w))
            if (phi.has(x)) ++count[phi.color(x)];
        for (const auto& [c, k] : count)
            if (k == 1) return false;
        return true;
    }

    // Returns true when the search should stop early (witness found or limit hit).
    bool run(int pos) {
        if (pos == static_cast<int>(order.size())) {
            if (counting) {
                ++found;
                return found >= cap;
            }
            return true;
        }
        const int v = order[pos];
        for (Color c : L.list(v)) {
            if (++nodes > node_limit) {
                limit_hit = true;
                return true;
            }
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (phi.has(w) && phi.color(w) == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi.set(v, c);
            for (int w : g.neighbors(v)) ++colored_neighbors[w];
            for (int w : g.neighbors(v)) {
                if (colored_neighbors[w] == g.degree(w) && g.degree(w) > 0 && unique_set_empty(w)) {
                    ok = false;
                    break;
                }
            }
            if (ok && run(pos + 1)) return true;
            for (int w : g.neighbors(v)) --colored_neighbors[w];
            phi.clear(v);
        }
        return false;
    }
};

} // namespace

SolveOutcome solve_exhaustive(const Graph& g, const ListAssignment& L, std::uint64_t node_limit) {
    Search s(g, L, node_limit);
    const bool stopped = s.run(0);
    SolveOutcome out;
    out.nodes = s.nodes;
    if (s.limit_hit) {
        out.status = SolveOutcome::Status::ResourceLimit;
        out.witness = PartialColoring(g.vertex_count());
        return out;
    }
    if (stopped) {
        out.status = SolveOutcome::Status::Satisfiable;
        out.witness = s.phi;
        if (verify_pcf(g, L, out.witness))
            throw InternalContradictionError("solve_exhaustive: witness failed verification");
    } else {
        out.status = SolveOutcome::Status::Unsatisfiable;
        out.witness = PartialColoring(g.vertex_count());
    }
    return out;
}

std::uint64_t count_solutions(const Graph& g, const ListAssignment& L, std::uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("count_solutions: cap >= 1 required");
    Search s(g, L, UINT64_MAX);
    s.counting = true;
    s.cap = cap;
    s.run(0);
    return s.found;
}

ListAssignment canonicalize_lists(const ListAssignment& L) {
    std::map<Color, Color> rename;
    std::vector<std::vector<Color>> out(L.vertex_count());
    for (int v = 0; v < L.vertex_count(); ++v) {
        for (Color c : L.list(v)) {
            auto [it, fresh] = rename.emplace(c, static_cast<Color>(rename.size()));
            out[v].push_back(it->second);
            (void)fresh;
        }
    }
    return ListAssignment(std::move(out));
}

namespace {

// Candidate lists for the next vertex of the canonical enumeration: any
// f-subset of the colors used so far, topped up with the next block of fresh
// colors.  Fresh colors always take the smallest unused names, which is
// exactly what the first-occurrence renaming produces.
std::vector<std::vector<Color>> canonical_candidates(int used, int f) {
    std::vector<std::vector<Color>> out;
    std::vector<int> idx;
    for (int fresh = 0; fresh <= f; ++fresh) {
        const int from_old = f - fresh;
        if (from_old > used) continue;
        // all from_old-subsets of {0..used-1}, lexicographic
        idx.assign(from_old, 0);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Color> lst(idx.begin(), idx.end());
            for (int t = 0; t < fresh; ++t) lst.push_back(used + t);
            out.push_back(std::move(lst));
            if (from_old == 0) break;
            int i = from_old - 1;
            while (i >= 0 && idx[i] == used - from_old + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < from_old; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ChoosableSearch {
    const Graph& g;
    const std::vector<int>& f;
    const ChoosabilityBudget& budget;

    std::vector<std::vector<Color>> lists;
    std::deque<PartialColoring> witnesses; // most recently useful first
    ChoosabilityVerdict verdict;
    bool done = false;

    ChoosableSearch(const Graph& graph, const std::vector<int>& demands,
                    const ChoosabilityBudget& b)
        : g(graph), f(demands), budget(b), lists(graph.vertex_count()) {}

    bool witness_fits(const PartialColoring& w) const {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!std::binary_search(lists[v].begin(), lists[v].end(), w.color(v))) return false;
        }
        return true;
    }

    void leaf() {
        if (++verdict.assignments_tested > budget.max_assignments) {
            verdict.status = ChoosabilityVerdict::Status::ResourceLimit;
            done = true;
            return;
        }
        for (auto it = witnesses.begin(); it != witnesses.end(); ++it) {
            if (witness_fits(*it)) {
                if (it != witnesses.begin()) std::rotate(witnesses.begin(), it, it + 1);
                return;
            }
        }
        const SolveOutcome o = solve_exhaustive(g, ListAssignment(lists), budget.node_limit);
        if (o.status == SolveOutcome::Status::Satisfiable) {
            witnesses.push_front(o.witness);
            if (witnesses.size() > 64) witnesses.pop_back();
            return;
        }
        if (o.status == SolveOutcome::Status::ResourceLimit) {
            verdict.status = ChoosabilityVerdict::Status::ResourceLimit;
        } else {
            verdict.status = ChoosabilityVerdict::Status::NotChoosable;
            verdict.counterexample = ListAssignment(lists);
        }
        done = true;
    }

    void descend(int v, int used) {
        if (done) return;
        if (v == g.vertex_count()) {
            leaf();
            return;
        }
        for (const auto& cand : canonical_candidates(used, f[v])) {
            lists[v] = cand;
            const int fresh = cand.empty() ? 0 : std::max(0, cand.back() - used + 1);
            descend(v + 1, used + fresh);
            if (done) return;
        }
    }
};

} // namespace

ChoosabilityVerdict check_pcf_choosable(const Graph& g, const std::vector<int>& f,
                                        const ChoosabilityBudget& budget) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("check_pcf_choosable: demand vector size mismatch");
    for (int v = 0; v < n; ++v)
        if (f[v] < 1) throw std::invalid_argument("check_pcf_choosable: demands must be >= 1");
    if (n > budget.guard_n)
        throw std::invalid_argument("check_pcf_choosable: graph larger than the enumeration guard");

    ChoosableSearch search(g, f, budget);
    search.descend(0, 0);
    return search.verdict;
}

} // namespace pcf
