#pragma once

#include <string>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// A graph + list assignment built to admit no PCF coloring, with enough
// provenance to reproduce it.
struct GadgetInstance {
    Graph graph;
    ListAssignment lists;
    std::string construction; // "t4" or "subdiv"
    std::string params;       // human-readable parameter summary
};

// Non-choosability gadget: take h, pick v0 with d = deg_h(v0), and attach
// d+1 four-cycles through a center v that replaces v0.  Cycle i's three new
// vertices all get the color triple {3i, 3i+1, 3i+2}; the center gets
// {0, ..., 3d+2} (size 3d+3, one more than its degree 3d+2); every other
// vertex u gets {0, ..., deg(u)} (size deg(u)+1).  Each four-cycle is forced
// to spend all three of its colors on the neighbors of v, so v's list runs
// dry: the instance has no PCF coloring even though every list exceeds the
// vertex degree.
GadgetInstance t4_gadget(const Graph& h, int v0);

// Subdivided-cycle counterexample: C_{6k+2} (the 1-subdivision of C_{3k+1})
// with the identical triple {0,1,2} everywhere — size degree+1, yet
// unsatisfiable because the cycle length is not divisible by 3.
GadgetInstance subdivision_counterexample(int k); // k >= 1

// Standard graph/lists serialization preceded by a provenance comment line
// ("# gadget <construction> <params>").
std::string serialize_gadget_graph(const GadgetInstance& g);
std::string serialize_gadget_lists(const GadgetInstance& g);

} // namespace pcf
