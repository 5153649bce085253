#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

// Simple undirected graph on a dense vertex range 0..n-1.
// No self-loops; adding an existing edge is a no-op.  Neighbor lists are kept
// sorted so every traversal below is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v); // no-op if absent
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// A simple cycle given as its vertex sequence v0, v1, ..., v_{k-1} (k >= 3);
// consecutive vertices and the wrap-around pair are adjacent in the host graph.
struct CyclePath {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    // Throws std::invalid_argument if the sequence is not a simple cycle of g.
    void validate(const Graph& g) const;
};

// Result of repeatedly deleting degree-1 vertices.  `removals` lists (vertex,
// unique neighbor at removal time) in removal order.  `core` keeps the original
// id space: removed vertices are left isolated and `core_vertices` lists the
// vertices that remain.
struct PeelSequence {
    std::vector<std::pair<int, int>> removals;
    Graph core;
    std::vector<int> core_vertices;
};

// --- constructors -----------------------------------------------------------

Graph make_path(int n);              // n >= 1
Graph make_cycle(int n);             // n >= 3
Graph make_complete(int n);          // n >= 1
Graph make_complete_bipartite(int a, int b);
Graph make_petersen();

// Seeded connected simple graph with max degree <= max_degree.  Uniform
// edge-insertion with rejection; connectivity is enforced by retrying (capped
// at 10000 attempts, then throws std::invalid_argument for infeasible or
// hopeless parameter combinations such as n=2, max_degree=0).
Graph random_bounded_degree(int n, int max_degree, std::uint64_t seed);

// --- structure --------------------------------------------------------------

bool is_connected(const Graph& g);
// Components among `active` vertices only (empty mask = all); each component
// is sorted ascending and components are ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::vector<char>* active = nullptr);
// True iff g is a single cycle (connected and 2-regular).
bool is_cycle_graph(const Graph& g);

// Same id space, but all edges incident to `removed` deleted.
Graph delete_vertices(const Graph& g, const std::vector<int>& removed);

// Induced subgraph on `vertices` (sorted ascending), relabeled to 0..k-1.
// to_old[new_id] = old_id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// A shortest cycle of g, or nullopt if g is a forest.  Deterministic: among all
// shortest cycles the lexicographically least vertex sequence is returned,
// where each cycle is first rotated/reflected to start at its smallest vertex.
std::optional<CyclePath> shortest_cycle(const Graph& g);

// 1-subdivision: every edge (u, v) is replaced by a path u - m - v through a
// fresh midpoint vertex.  Midpoints are n, n+1, ... in lexicographic edge
// order; midpoint_of lists ((u, v), midpoint) in that order.
struct Subdivision {
    Graph graph;
    std::vector<std::pair<std::pair<int, int>, int>> midpoint_of;

    int midpoint(int u, int v) const; // throws std::invalid_argument if (u,v) is not a base edge
};
Subdivision subdivide(const Graph& g);

// Repeatedly removes a degree-1 vertex (smallest id first) until the remainder
// is a single edge or has min degree >= 2.  Requires g connected with n >= 2.
PeelSequence peel_degree_one(const Graph& g);

// --- text format -------------------------------------------------------------
//
//   g <n> <m>
//   <u> <v>        (m lines, 0 <= u < v < n)
//
// Lines starting with '#' and blank lines are skipped.

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

} // namespace pcf
