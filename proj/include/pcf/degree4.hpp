#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// Boundary data around a chordless cycle C of g after the rest of the graph
// has been colored: for each cycle position i, the off-cycle neighbors of v_i,
// the protected color c_u of every off-cycle neighbor u (a color that must
// stay unique in u's neighborhood; absent for vertices isolated off the
// cycle), and the residual lists the cycle vertices may still use.
struct BoundaryContext {
    CyclePath cycle;
    std::vector<int> cycle_degrees;            // deg_g(v_i)
    std::vector<std::vector<int>> off_neighbors; // per position, sorted
    PartialColoring phi;                        // colors of g - V(C)
    std::map<int, Color> protected_colors;      // off-cycle vertex -> c_u
    std::vector<std::vector<Color>> lists;      // residual list per position
};

// True iff coloring v_{i-1} with alpha and v_{i+1} with beta would leave
// position i of the cycle with no unique neighbor color, given the already
// colored off-cycle neighbors of v_i:
//   deg 4: off-cycle colors {p, q}, blocked iff alpha != beta and {alpha,beta} == {p,q}
//   deg 3: off-cycle color p, blocked iff alpha == beta == p
// Anything else never blocks.
bool blocks(const BoundaryContext& ctx, int i, Color alpha, Color beta);

// All ordered blocked pairs at position i (at most two; if two, they are
// (a,b),(b,a) with a != b).
std::vector<std::pair<Color, Color>> blocked_pairs(const BoundaryContext& ctx, int i);

// g with V(C) detached (same id space, cycle vertices left isolated) plus an
// edge u_i w_i for every cycle vertex of degree 4, forcing the recursion to
// give its two off-cycle neighbors distinct colors.  Requires |C| >= 5; off a
// shortest cycle of that length no vertex can neighbor two cycle vertices, and
// this is asserted rather than assumed.
Graph build_gpp(const Graph& g, const CyclePath& cycle);

// Protected color of u after g-V(C) has been colored: the smallest color of
// u's unique set in gprime, or, when that set is empty (all neighbors of u
// share one color), that repeated color.  Requires u colored and non-isolated
// in gprime.
Color choose_cu(const Graph& gprime, const PartialColoring& phi, int u);

// Residual lists: L(v_i) minus the protected colors and the actual colors of
// v_i's off-cycle neighbors.  Asserts that at least 3 colors survive per
// position (4 when deg_g(v_i) == 3), the bound the extension steps rely on.
std::vector<std::vector<Color>> boundary_lists(const Graph& g, const CyclePath& cycle,
                                               const ListAssignment& L,
                                               const PartialColoring& phi,
                                               const std::map<int, Color>& protected_colors);

// Auxiliary cyclic structure on the residual lists: class X_i carries the
// colors of lists[i]; a short edge joins equal colors in consecutive classes;
// a long edge joins (alpha in X_i, beta in X_{i+2}) when the pair is blocked
// at position i+1.  Choosing one color per class avoiding all edges yields a
// valid cycle extension.
struct AuxGraphH {
    int k = 0;
    std::vector<std::vector<Color>> classes;
    // shared_colors[i]: colors present in both classes i and i+1 (mod k)
    std::vector<std::vector<Color>> shared_colors;
    // long_edges[i]: blocked (alpha at i, beta at i+2 mod k) pairs
    std::vector<std::vector<std::pair<Color, Color>>> long_edges;

    bool has_short(int i, Color a) const;
    bool has_long(int i, Color a, Color b) const;
};

// From a boundary context...
AuxGraphH build_aux_H(const BoundaryContext& ctx);
// ...or directly from lists plus a blocking predicate, for fixtures and tests.
AuxGraphH build_aux_H(const std::vector<std::vector<Color>>& lists,
                      const std::function<bool(int, Color, Color)>& blocked_at);

// Lexicographically least choice of one color per class such that consecutive
// choices differ and no long edge is hit (wrap-around included); nullopt if no
// such transversal exists.  Cyclic DP seeded over all (x0, x1) pairs.
std::optional<std::vector<Color>> find_transversal_IS(const AuxGraphH& h);

// Extension over a triangle or 4-cycle: exhaustive scan of the residual-list
// tuples (at most 7^4) for the lexicographically least assignment that is
// proper on the cycle and leaves every cycle vertex and every off-cycle
// neighbor with a nonempty unique set.
std::optional<std::vector<Color>> extend_small_cycle(const Graph& g, const BoundaryContext& ctx);

// --- full solver ---------------------------------------------------------------

struct Degree4Stats {
    int max_depth = 0;
    int low_degree_steps = 0;       // degree-1/degree-2 eliminations replayed
    int small_cycle_extensions = 0; // k in {3,4}
    int long_cycle_extensions = 0;  // k >= 5 transversal extensions
    int trivial_oracle_calls = 0;   // n <= 4 / forest base cases (expected)
    int fallback_count = 0;         // constructive step failed, oracle stood in
    bool fallback_used = false;
};

struct Degree4Options {
    std::uint64_t node_limit = 100'000'000;
    // Observer for every cycle-extension boundary context (after the
    // extension search); used by structural audits.
    std::function<void(const BoundaryContext&, const AuxGraphH&,
                       const std::optional<std::vector<Color>>&)>
        observer;
};

struct Degree4Result {
    PartialColoring coloring;
    Degree4Stats stats;
};

// PCF coloring of a connected graph with max degree <= 4 from lists of size >=
// degree+3.  Recursive: tiny graphs by exhaustive search; a vertex of degree
// <= 2 by elimination and replay; otherwise a shortest cycle C is detached,
// g - V(C) (plus the distinctness edges of build_gpp) is colored recursively,
// and C is re-colored via extend_small_cycle or the transversal DP.  Always
// succeeds on valid inputs; if a constructive step ever fails, the exhaustive
// oracle finishes and the fallback flag is raised.
Degree4Result solve_maxdeg4(const Graph& g, const ListAssignment& L,
                            const Degree4Options& options = {});

// Convenience driver for possibly-disconnected inputs.
Degree4Result solve_maxdeg4_components(const Graph& g, const ListAssignment& L,
                                       const Degree4Options& options = {});

} // namespace pcf
