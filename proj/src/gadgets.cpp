#include "pcf/gadgets.hpp"

#include <stdexcept>

namespace pcf {

GadgetInstance t4_gadget(const Graph& h, int v0) {
    const int nh = h.vertex_count();
    if (nh < 1) throw std::invalid_argument("t4_gadget: base graph must be nonempty");
    if (v0 < 0 || v0 >= nh) throw std::invalid_argument("t4_gadget: v0 out of range");
    const int d = h.degree(v0);

    Graph g(nh + 3 * (d + 1));
    for (const auto& [u, w] : h.edges()) g.add_edge(u, w);
    for (int i = 0; i <= d; ++i) {
        const int a = nh + 3 * i, b = a + 1, c = a + 2;
        g.add_edge(v0, a);
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(c, v0);
    }

    std::vector<std::vector<Color>> lists(g.vertex_count());
    for (int u = 0; u < nh; ++u) {
        if (u == v0) continue;
        for (Color c = 0; c <= g.degree(u); ++c) lists[u].push_back(c);
    }
    for (Color c = 0; c <= 3 * d + 2; ++c) lists[v0].push_back(c);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < 3; ++j) lists[nh + 3 * i + j] = {3 * i, 3 * i + 1, 3 * i + 2};

    GadgetInstance out{std::move(g), ListAssignment(std::move(lists)), "t4", ""};
    out.params = "base n=" + std::to_string(nh) + " m=" + std::to_string(h.edge_count()) +
                 " v0=" + std::to_string(v0);
    return out;
}

GadgetInstance subdivision_counterexample(int k) {
    if (k < 1) throw std::invalid_argument("subdivision_counterexample: k >= 1 required");
    const int n = 6 * k + 2;
    Graph g = make_cycle(n);
    std::vector<std::vector<Color>> lists(n, {0, 1, 2});
    GadgetInstance out{std::move(g), ListAssignment(std::move(lists)), "subdiv", ""};
    out.params = "k=" + std::to_string(k) + " cycle n=" + std::to_string(n);
    return out;
}

std::string serialize_gadget_graph(const GadgetInstance& g) {
    return "# gadget " + g.construction + " " + g.params + "\n" + serialize_graph(g.graph);
}

std::string serialize_gadget_lists(const GadgetInstance& g) {
    return "# gadget " + g.construction + " " + g.params + "\n" + serialize_lists(g.lists);
}

} // namespace pcf
