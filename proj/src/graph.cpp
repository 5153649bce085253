#include "pcf/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pcf/errors.hpp"
#include "pcf/random.hpp"

namespace pcf {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(n);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("graph: vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loop rejected");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return; // duplicate: no-op
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v) return;
    nu.erase(it);
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max<int>(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& nb : adj_) d = std::min<int>(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void CyclePath::validate(const Graph& g) const {
    const int k = length();
    if (k < 3) throw std::invalid_argument("cycle: fewer than 3 vertices");
    std::vector<int> seen = vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("cycle: repeated vertex");
    for (int i = 0; i < k; ++i) {
        if (!g.has_edge(vertices[i], vertices[(i + 1) % k]))
            throw std::invalid_argument("cycle: consecutive vertices not adjacent");
    }
}

// --- constructors -----------------------------------------------------------

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n >= 1 required");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: n >= 3 required");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: n >= 1 required");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: sides >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);           // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);   // inner pentagram
        g.add_edge(i, 5 + i);                 // spokes
    }
    return g;
}

Graph random_bounded_degree(int n, int max_degree, std::uint64_t seed) {
    if (n < 1 || max_degree < 0)
        throw std::invalid_argument("random_bounded_degree: need n >= 1 and max_degree >= 0");
    if (n == 1) return Graph(1);
    if (max_degree < 1)
        throw std::invalid_argument("random_bounded_degree: infeasible (n >= 2, max_degree 0)");

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    Rng rng(seed);
    const int cap = std::min<int>(static_cast<int>(pairs.size()), n * max_degree / 2);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        // Shuffle candidate edges, pick a target size, insert while degrees allow.
        for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i) {
            const int j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i + 1)));
            std::swap(pairs[i], pairs[j]);
        }
        const int target =
            n - 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(std::max(1, cap - (n - 1) + 1))));
        Graph g(n);
        for (const auto& [u, v] : pairs) {
            if (g.edge_count() >= target) break;
            if (g.degree(u) < max_degree && g.degree(v) < max_degree) g.add_edge(u, v);
        }
        if (is_connected(g)) return g;
    }
    throw std::invalid_argument("random_bounded_degree: no connected graph found in 10000 attempts");
}

// --- structure --------------------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<char>* active) {
    const int n = g.vertex_count();
    std::vector<char> vis(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (vis[s] || (active && !(*active)[s])) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        vis[s] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (vis[w] || (active && !(*active)[w])) continue;
                vis[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return connected_components(g).size() == 1;
}

bool is_cycle_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

Graph delete_vertices(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) gone.at(v) = 1;
    Graph out(g.vertex_count());
    for (const auto& [u, v] : g.edges())
        if (!gone[u] && !gone[v]) out.add_edge(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> to_old = vertices;
    std::sort(to_old.begin(), to_old.end());
    std::vector<int> to_new(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(to_old.size()); ++i) to_new[to_old[i]] = i;
    Graph sub(static_cast<int>(to_old.size()));
    for (const auto& [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0) sub.add_edge(to_new[u], to_new[v]);
    return {std::move(sub), std::move(to_old)};
}

namespace {

// Rotate/reflect a cycle sequence to start at its smallest vertex, taking the
// lexicographically smaller direction.
std::vector<int> canonical_cycle(std::vector<int> c) {
    const int k = static_cast<int>(c.size());
    const int at = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
    std::vector<int> fwd(k), bwd(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = c[(at + i) % k];
        bwd[i] = c[(at - i % k + k) % k];
    }
    return fwd <= bwd ? fwd : bwd;
}

} // namespace

std::optional<CyclePath> shortest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    int best_len = std::numeric_limits<int>::max();
    std::vector<int> best_seq;

    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
            }
        }
        // Each non-tree edge closes a walk through the root; the minimum over
        // all roots and edges is the girth, and at that minimum the two tree
        // paths only meet at the root, so the reconstruction is a simple cycle.
        for (const auto& [u, w] : g.edges()) {
            if (dist[u] < 0 || dist[w] < 0) continue;
            if (parent[u] == w || parent[w] == u) continue;
            const int len = dist[u] + dist[w] + 1;
            if (len > best_len) continue;
            std::vector<int> pu, pw;
            for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
            for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
            // Keep only reconstructions that are simple cycles of this length.
            std::vector<int> seq(pu.rbegin(), pu.rend()); // root .. u
            seq.insert(seq.end(), pw.begin(), pw.end() - 1); // w .. just before root
            if (static_cast<int>(seq.size()) != len) continue;
            std::vector<int> sorted = seq;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            std::vector<int> canon = canonical_cycle(std::move(seq));
            if (len < best_len || canon < best_seq) {
                best_len = len;
                best_seq = std::move(canon);
            }
        }
    }
    if (best_seq.empty()) return std::nullopt;
    CyclePath c{std::move(best_seq)};
    c.validate(g);
    return c;
}

int Subdivision::midpoint(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& [e, m] : midpoint_of)
        if (e.first == u && e.second == v) return m;
    throw std::invalid_argument("subdivision: not a base edge");
}

Subdivision subdivide(const Graph& g) {
    const auto base_edges = g.edges();
    const int n = g.vertex_count();
    Subdivision s;
    s.graph = Graph(n + static_cast<int>(base_edges.size()));
    int next = n;
    for (const auto& [u, v] : base_edges) {
        s.graph.add_edge(u, next);
        s.graph.add_edge(v, next);
        s.midpoint_of.push_back({{u, v}, next});
        ++next;
    }
    return s;
}

PeelSequence peel_degree_one(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("peel_degree_one: n >= 2 required");
    if (!is_connected(g)) throw std::invalid_argument("peel_degree_one: disconnected input");

    PeelSequence out;
    out.core = g;
    std::vector<char> alive(n, 1);
    int alive_count = n;
    while (alive_count > 2) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (alive[v] && out.core.degree(v) == 1) {
                pick = v;
                break;
            }
        }
        if (pick < 0) break; // min degree >= 2
        const int nb = out.core.neighbors(pick)[0];
        out.removals.emplace_back(pick, nb);
        out.core.remove_edge(pick, nb);
        alive[pick] = 0;
        --alive_count;
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) out.core_vertices.push_back(v);
    return out;
}

// --- text format -------------------------------------------------------------

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int n = 0, m = 0, edges_read = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!header_seen) {
            std::string tag;
            if (!(ls >> tag >> n >> m) || tag != "g" || n < 0 || m < 0)
                throw ParseError("graph line " + std::to_string(lineno) + ": expected header 'g <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError("graph line " + std::to_string(lineno) + ": trailing tokens");
            header_seen = true;
            g = Graph(n);
            continue;
        }
        std::string tag;
        std::istringstream probe(line);
        if (probe >> tag && tag == "g")
            throw ParseError("graph line " + std::to_string(lineno) + ": duplicate header");
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("graph line " + std::to_string(lineno) + ": malformed edge");
        std::string extra;
        if (ls >> extra) throw ParseError("graph line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v >= n || u >= n || v < 0)
            throw ParseError("graph line " + std::to_string(lineno) + ": vertex id out of range");
        if (u >= v) throw ParseError("graph line " + std::to_string(lineno) + ": edges need u < v");
        ++edges_read;
        if (edges_read > m) throw ParseError("graph: more edge lines than the header promised");
        if (g.has_edge(u, v)) throw ParseError("graph line " + std::to_string(lineno) + ": duplicate edge");
        g.add_edge(u, v);
    }
    if (!header_seen) throw ParseError("graph: missing header");
    if (edges_read != m) throw ParseError("graph: edge count mismatch with header");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace pcf
