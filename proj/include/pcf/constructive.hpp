#pragma once

#include <cstdint>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// --- cycles -------------------------------------------------------------------

struct CycleSolve {
    enum class Status { Solved, UnsolvableFiveCycle };
    Status status = Status::Solved;
    PartialColoring coloring; // on the host id space; complete on the cycle iff Solved
    bool used_dp = false;     // solved by the cyclic DP rather than the direct recipe
};

// PCF-colors a cycle from lists of size >= 4 (indexed by host vertex id).
//   length <= 4            -> distinct colors via a lexicographically least SDR
//   length >= 6, all lists
//   equal                  -> cyclic DP over the first four common colors
//   otherwise              -> rotate so the first and last vertex have different
//                             lists, color greedily (each vertex avoids its two
//                             predecessors, the last avoids three earlier picks),
//                             verify, and fall back to the cyclic DP if the
//                             greedy pass produced a violation
// Length 5 goes straight to the DP and reports UnsolvableFiveCycle honestly
// when the DP exhausts (identical 4-lists on a 5-cycle always do).
CycleSolve solve_cycle_pcf(const CyclePath& cycle, const ListAssignment& L);

// Extends a PCF coloring of g-v over the pendant vertex v with neighbor x:
// v avoids phi(x) and one protected color from x's unique set.  Requires
// phi(x) set and |L(v)| >= 3.
void extend_over_pendant(const Graph& g, PartialColoring& phi, int v, int x,
                         const ListAssignment& L);

// --- subcubic graphs ------------------------------------------------------------

struct SubcubicResult {
    PartialColoring coloring;
    bool used_oracle_core = false; // core had a degree-3 vertex; exhaustive search stood in
};

// PCF coloring of a connected graph with max degree <= 3 from lists of size
// >= degree+2.  The 5-cycle is rejected (std::invalid_argument): it is the one
// excluded graph.  Pipeline: K1/K2 directly; a pure cycle via solve_cycle_pcf;
// otherwise peel degree-1 vertices, color the core (single edge directly; a
// cycle core together with the last peeled pendant by a fixed greedy order;
// any core with a degree-3 vertex by exhaustive search, flagged in the
// result), then re-attach the peeled vertices in reverse order.
SubcubicResult solve_subcubic(const Graph& g, const ListAssignment& L,
                              std::uint64_t node_limit = 100'000'000);

// --- 1-subdivisions -------------------------------------------------------------

// A base graph, its 1-subdivision, and lists on the subdivision satisfying
// |L(branch v)| >= deg_base(v)+2 and |L(midpoint)| >= 4.
struct SubdivisionInstance {
    Graph base;
    Subdivision sub;
    ListAssignment lists;
};

// Builds and validates an instance (lists indexed by subdivision ids).
SubdivisionInstance make_subdivision_instance(const Graph& base, ListAssignment lists);

struct SubdivisionResult {
    PartialColoring coloring;
    // A guaranteed-nonempty choice set came up empty somewhere and the
    // exhaustive oracle finished the job.  Never expected on valid inputs.
    bool internal_contradiction = false;
};

// PCF coloring of the 1-subdivision S(G) from the instance lists.  Recursive:
// isolated base vertices and K2 components directly; a degree-1 base vertex is
// colored first and its color removed from the neighbor's list before
// recursing; an all-degree-2 component whose lists are all identical is a
// subdivided cycle and goes to the cycle solver; otherwise a branch vertex
// with a sparse color (few incident midpoint lists containing it) is peeled,
// the recursion colors the rest, and the midpoints around it are filled in a
// fixed order that keeps one color unique at every affected vertex.
SubdivisionResult solve_subdivision(const SubdivisionInstance& inst,
                                    std::uint64_t node_limit = 100'000'000);

} // namespace pcf
