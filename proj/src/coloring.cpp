#include "pcf/coloring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pcf/errors.hpp"
#include "pcf/random.hpp"

namespace pcf {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        auto& lst = lists_[v];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        if (lst.empty())
            throw std::invalid_argument("lists: empty list at vertex " + std::to_string(v));
        if (lst.front() < 0)
            throw std::invalid_argument("lists: negative color at vertex " + std::to_string(v));
    }
}

const std::vector<Color>& ListAssignment::list(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("lists: vertex out of range");
    return lists_[v];
}

bool ListAssignment::contains(int v, Color c) const {
    const auto& lst = list(v);
    return std::binary_search(lst.begin(), lst.end(), c);
}

void ListAssignment::set_list(int v, std::vector<Color> colors) {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("lists: vertex out of range");
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    if (colors.empty() || colors.front() < 0)
        throw std::invalid_argument("lists: invalid replacement list");
    lists_[v] = std::move(colors);
}

void ListAssignment::erase_color(int v, Color c) {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("lists: vertex out of range");
    auto& lst = lists_[v];
    auto it = std::lower_bound(lst.begin(), lst.end(), c);
    if (it == lst.end() || *it != c) return;
    if (lst.size() == 1) throw std::invalid_argument("lists: erase would empty the list");
    lst.erase(it);
}

Color PartialColoring::color(int v) const {
    const Color c = values_.at(v);
    if (c == kNone) throw std::logic_error("coloring: vertex " + std::to_string(v) + " unassigned");
    return c;
}

void PartialColoring::set(int v, Color c) {
    if (c < 0) throw std::invalid_argument("coloring: colors are nonnegative");
    values_.at(v) = c;
}

bool PartialColoring::complete() const {
    for (Color c : values_)
        if (c == kNone) return false;
    return true;
}

int PartialColoring::assigned_count() const {
    int k = 0;
    for (Color c : values_)
        if (c != kNone) ++k;
    return k;
}

std::string Violation::describe() const {
    switch (kind) {
        case Kind::IncompleteVertex:
            return "vertex " + std::to_string(u) + " has no color";
        case Kind::OffList:
            return "vertex " + std::to_string(u) + " is colored outside its list";
        case Kind::ImproperEdge:
            return "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") endpoints share a color";
        case Kind::EmptyUniqueSet:
            return "vertex " + std::to_string(u) + " has no uniquely colored neighbor";
    }
    return "unknown violation";
}

std::vector<Color> unique_neighbor_colors(const Graph& g, const PartialColoring& phi, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("unique_neighbor_colors: vertex out of range");
    std::map<Color, int> count;
    for (int w : g.neighbors(v))
        if (phi.has(w)) ++count[phi.color(w)];
    std::vector<Color> out;
    for (const auto& [c, k] : count)
        if (k == 1) out.push_back(c);
    return out;
}

std::optional<Violation> verify_pcf(const Graph& g, const ListAssignment& L,
                                    const PartialColoring& phi) {
    const int n = g.vertex_count();
    if (L.vertex_count() != n || phi.vertex_count() != n)
        throw std::invalid_argument("verify_pcf: size mismatch");
    for (int v = 0; v < n; ++v) {
        if (!phi.has(v)) return Violation{Violation::Kind::IncompleteVertex, v, -1};
        if (!L.contains(v, phi.color(v))) return Violation{Violation::Kind::OffList, v, -1};
    }
    for (const auto& [u, v] : g.edges())
        if (phi.color(u) == phi.color(v)) return Violation{Violation::Kind::ImproperEdge, u, v};
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue; // isolated vertices are exempt
        if (unique_neighbor_colors(g, phi, v).empty())
            return Violation{Violation::Kind::EmptyUniqueSet, v, -1};
    }
    return std::nullopt;
}

ListAssignment degree_plus_k_lists(const Graph& g, int k, int universe, std::uint64_t seed) {
    const int n = g.vertex_count();
    Rng rng(seed);
    std::vector<std::vector<Color>> lists(n);
    for (int v = 0; v < n; ++v) {
        const int size = g.degree(v) + k;
        if (size < 1)
            throw std::invalid_argument("degree_plus_k_lists: empty list at vertex " + std::to_string(v));
        if (universe < size)
            throw std::invalid_argument("degree_plus_k_lists: universe smaller than degree+k");
        lists[v] = sample_subset(rng, universe, size);
    }
    return ListAssignment(std::move(lists));
}

// --- text formats -------------------------------------------------------------

namespace {

bool skippable(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

} // namespace

ListAssignment parse_lists(const std::string& text, int vertex_count) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Color>> lists(vertex_count);
    std::vector<char> seen(vertex_count, 0);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream ls(line);
        int v;
        char colon;
        if (!(ls >> v >> colon) || colon != ':')
            throw ParseError("lists line " + std::to_string(lineno) + ": expected '<v>: c1 c2 ...'");
        if (v < 0 || v >= vertex_count)
            throw ParseError("lists line " + std::to_string(lineno) + ": vertex id out of range");
        if (seen[v]) throw ParseError("lists line " + std::to_string(lineno) + ": duplicate vertex");
        seen[v] = 1;
        Color c;
        while (ls >> c) {
            if (c < 0) throw ParseError("lists line " + std::to_string(lineno) + ": negative color");
            lists[v].push_back(c);
        }
        if (!ls.eof()) throw ParseError("lists line " + std::to_string(lineno) + ": malformed color");
        if (lists[v].empty()) throw ParseError("lists line " + std::to_string(lineno) + ": empty list");
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v]) throw ParseError("lists: missing list for vertex " + std::to_string(v));
    return ListAssignment(std::move(lists));
}

std::string serialize_lists(const ListAssignment& L) {
    std::ostringstream out;
    for (int v = 0; v < L.vertex_count(); ++v) {
        out << v << ':';
        for (Color c : L.list(v)) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

PartialColoring parse_coloring(const std::string& text, int vertex_count) {
    std::istringstream in(text);
    std::string line;
    PartialColoring phi(vertex_count);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream ls(line);
        int v;
        char eq;
        Color c;
        if (!(ls >> v >> eq >> c) || eq != '=')
            throw ParseError("coloring line " + std::to_string(lineno) + ": expected '<v> = c'");
        std::string extra;
        if (ls >> extra) throw ParseError("coloring line " + std::to_string(lineno) + ": trailing tokens");
        if (v < 0 || v >= vertex_count)
            throw ParseError("coloring line " + std::to_string(lineno) + ": vertex id out of range");
        if (c < 0) throw ParseError("coloring line " + std::to_string(lineno) + ": negative color");
        if (phi.has(v)) throw ParseError("coloring line " + std::to_string(lineno) + ": duplicate vertex");
        phi.set(v, c);
    }
    return phi;
}

std::string serialize_coloring(const PartialColoring& phi) {
    std::ostringstream out;
    for (int v = 0; v < phi.vertex_count(); ++v)
        if (phi.has(v)) out << v << " = " << phi.color(v) << '\n';
    return out.str();
}

} // namespace pcf
