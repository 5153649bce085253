#pragma once

#include <cstdint>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

// Canonical isomorphism key for small graphs (n <= 11, so the 55 triangle
// bits fit): the lexicographically greatest upper-triangle adjacency bitstring
// (read column by column) over all vertex orderings, found by
// branch-and-bound.  Equal keys <=> isomorphic graphs of equal order.
std::uint64_t canonical_key(const Graph& g);

// All connected graphs with max degree <= max_degree on 1..max_n vertices, one
// representative per isomorphism class, built level by level (every connected
// graph arises from a connected graph one vertex smaller by attaching the new
// vertex to a nonempty set of low-degree vertices).  Deterministic order:
// by vertex count, then by canonical key.  Guard: max_n <= 9.
std::vector<Graph> enumerate_connected_graphs(int max_n, int max_degree);

} // namespace pcf
