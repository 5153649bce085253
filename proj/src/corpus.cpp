#include "pcf/corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pcf {

// Column-by-column upper triangle: placing position p appends the p bits
// (0,p), ..., (p-1,p), so every permutation prefix determines a bit prefix and
// an optimistic all-ones completion bounds the branch.
std::uint64_t canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical_key: n <= 11 required");
    if (n <= 1) return 0;
    const int total_bits = n * (n - 1) / 2;

    std::uint64_t best = 0;
    std::vector<int> chosen;
    std::vector<char> used(n, 0);

    auto rec = [&](auto&& self, std::uint64_t prefix, int bits) -> void {
        const int p = static_cast<int>(chosen.size());
        if (p == n) {
            best = std::max(best, prefix);
            return;
        }
        for (int o = 0; o < n; ++o) {
            if (used[o]) continue;
            std::uint64_t block = 0;
            for (int i = 0; i < p; ++i)
                block = (block << 1) | (g.has_edge(chosen[i], o) ? 1u : 0u);
            const std::uint64_t value = (prefix << p) | block;
            const int rem = total_bits - (bits + p);
            const std::uint64_t optimistic =
                (value << rem) | ((rem == 0) ? 0 : ((std::uint64_t{1} << rem) - 1));
            if (optimistic <= best && best != 0) continue;
            used[o] = 1;
            chosen.push_back(o);
            self(self, value, bits + p);
            chosen.pop_back();
            used[o] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

std::vector<Graph> enumerate_connected_graphs(int max_n, int max_degree) {
    if (max_n < 1 || max_n > 9)
        throw std::invalid_argument("enumerate_connected_graphs: 1 <= max_n <= 9 required");
    if (max_degree < 0) throw std::invalid_argument("enumerate_connected_graphs: bad degree bound");

    std::vector<Graph> out{Graph(1)};
    std::vector<Graph> level{Graph(1)};
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::uint64_t, Graph> next; // key -> representative, sorted by key
        for (const Graph& parent : level) {
            // Attachment sets: nonempty subsets of parent vertices that still
            // have spare degree, of size <= max_degree (the new vertex's
            // degree).  Every connected graph has a vertex whose removal
            // keeps it connected, so this reaches every isomorphism class.
            std::vector<int> room;
            for (int v = 0; v < parent.vertex_count(); ++v)
                if (parent.degree(v) < max_degree) room.push_back(v);
            const int r = static_cast<int>(room.size());
            for (std::uint32_t sub = 1; sub < (1u << r); ++sub) {
                if (static_cast<int>(__builtin_popcount(sub)) > max_degree) continue;
                Graph child(n);
                for (const auto& [u, w] : parent.edges()) child.add_edge(u, w);
                for (int b = 0; b < r; ++b)
                    if (sub & (1u << b)) child.add_edge(room[b], n - 1);
                const std::uint64_t key = canonical_key(child);
                next.emplace(key, std::move(child));
            }
        }
        level.clear();
        for (auto& [key, graph] : next) {
            out.push_back(graph);
            level.push_back(std::move(graph));
        }
    }
    return out;
}

} // namespace pcf
