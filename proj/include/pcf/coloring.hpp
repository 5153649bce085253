#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

using Color = int;

// Per-vertex color lists (sorted, duplicate-free, nonempty, colors >= 0).
class ListAssignment {
public:
    ListAssignment() = default;
    // Validates and normalizes (sorts, checks nonempty lists and colors >= 0).
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    int vertex_count() const { return static_cast<int>(lists_.size()); }
    const std::vector<Color>& list(int v) const;
    int list_size(int v) const { return static_cast<int>(list(v).size()); }
    bool contains(int v, Color c) const;

    void set_list(int v, std::vector<Color> colors); // re-validates
    void erase_color(int v, Color c);                // throws if list would become empty

    bool operator==(const ListAssignment&) const = default;

private:
    std::vector<std::vector<Color>> lists_;
};

// Partial vertex coloring; unassigned vertices carry no color.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int n) : values_(n, kNone) {}

    int vertex_count() const { return static_cast<int>(values_.size()); }
    bool has(int v) const { return values_.at(v) != kNone; }
    Color color(int v) const; // throws std::logic_error if unassigned
    void set(int v, Color c);  // c >= 0
    void clear(int v) { values_.at(v) = kNone; }
    bool complete() const;
    int assigned_count() const;

    bool operator==(const PartialColoring&) const = default;

private:
    static constexpr Color kNone = -1;
    std::vector<Color> values_;
};

// First failed check of a candidate coloring, with a witness vertex or edge.
struct Violation {
    enum class Kind {
        IncompleteVertex, // vertex has no color
        OffList,          // assigned color not in the vertex's list
        ImproperEdge,     // both endpoints share a color
        EmptyUniqueSet,   // no neighbor color appears exactly once
    };
    Kind kind;
    int u = -1;
    int v = -1; // second endpoint for ImproperEdge, else -1

    std::string describe() const;
};

// Colors that appear on exactly one *colored* neighbor of v (sorted).
// Uncolored neighbors contribute nothing.
std::vector<Color> unique_neighbor_colors(const Graph& g, const PartialColoring& phi, int v);

// Checks that phi is a complete proper coloring from L in which every
// non-isolated vertex has some color appearing exactly once in its
// neighborhood.  Isolated vertices only need an on-list color.  Returns the
// first violation in a fixed scan order (vertices ascending for completeness
// and list membership, then edges lexicographically for properness, then
// vertices ascending for the unique-color rule), or nullopt if phi is valid.
std::optional<Violation> verify_pcf(const Graph& g, const ListAssignment& L,
                                    const PartialColoring& phi);

// Seeded random lists: vertex v gets a uniform (degree(v) + k)-subset of
// {0, ..., universe-1}.  Throws std::invalid_argument if universe < degree+k
// for some vertex or a list would be empty.
ListAssignment degree_plus_k_lists(const Graph& g, int k, int universe, std::uint64_t seed);

// --- text formats -------------------------------------------------------------
//
// lists:     "<v>: c1 c2 c3 ..."  one line per vertex, colors ascending
// coloring:  "<v> = c"            one line per assigned vertex
//
// '#'-comment lines and blank lines are skipped by the parsers.

ListAssignment parse_lists(const std::string& text, int vertex_count);
std::string serialize_lists(const ListAssignment& L);

PartialColoring parse_coloring(const std::string& text, int vertex_count);
std::string serialize_coloring(const PartialColoring& phi);

} // namespace pcf
