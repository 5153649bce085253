#pragma once

#include <cstdint>
#include <optional>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

// Outcome of an exhaustive search.  `witness` is complete iff Satisfiable.
struct SolveOutcome {
    enum class Status { Satisfiable, Unsatisfiable, ResourceLimit };
    Status status = Status::Unsatisfiable;
    PartialColoring witness;
    std::uint64_t nodes = 0; // color placements explored
};

// Exhaustive backtracking for a PCF coloring from L.  Vertices are tried in
// descending-degree order (ties by id), colors in ascending order, so the
// witness is deterministic.  Prunes on properness and, once the last neighbor
// of a vertex w is colored, on w's unique-color set being empty.
SolveOutcome solve_exhaustive(const Graph& g, const ListAssignment& L,
                              std::uint64_t node_limit = kDefaultNodeLimit);

// Number of distinct complete PCF L-colorings, truncated at cap (cap >= 1).
std::uint64_t count_solutions(const Graph& g, const ListAssignment& L, std::uint64_t cap);

struct ChoosabilityBudget {
    std::uint64_t max_assignments = 10'000'000; // list assignments examined
    std::uint64_t node_limit = kDefaultNodeLimit;
    int guard_n = 7; // refuse larger graphs (enumeration blows up fast)
};

struct ChoosabilityVerdict {
    enum class Status { Choosable, NotChoosable, ResourceLimit };
    Status status = Status::Choosable;
    std::optional<ListAssignment> counterexample; // set iff NotChoosable
    std::uint64_t assignments_tested = 0;
};

// Decides whether g is PCF f-choosable by enumerating list assignments with
// |L(v)| = f(v) over a universe of size sum(f): any assignment uses at most
// that many distinct colors, so renaming maps it into the universe.  Color
// permutations are collapsed by enumerating canonical assignments only (colors
// renumbered by first occurrence when lists are scanned vertex-ascending,
// each list ascending).  Reports the first failing assignment in enumeration
// order.  Throws std::invalid_argument if n > budget.guard_n.
ChoosabilityVerdict check_pcf_choosable(const Graph& g, const std::vector<int>& f,
                                        const ChoosabilityBudget& budget = {});

// Canonical form of a list assignment under the first-occurrence renaming
// described above.  Exposed so tests can relate raw and canonical enumeration.
ListAssignment canonicalize_lists(const ListAssignment& L);

} // namespace pcf
