#ifndef QBMG_COLORED_DIGRAPH_HPP
#define QBMG_COLORED_DIGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "qbmg/undirected_graph.hpp"

namespace qbmg {

using Arc = std::pair<std::string, std::string>;

// Partition of a digraph's vertex set into classes sharing the same
// out- and in-neighborhoods.
struct EquivalenceClasses {
    struct Block {
        std::vector<std::string> members;  // sorted
        std::vector<std::string> shared_out;
        std::vector<std::string> shared_in;
    };
    std::vector<Block> blocks;  // sorted by first member

    std::vector<std::vector<std::string>> partition() const;
    bool same_partition(const EquivalenceClasses& other) const;
};

// Immutable two-colored directed graph. Vertex ids are opaque strings
// kept in lexicographic order.
class ColoredDigraph {
public:
    ColoredDigraph() = default;

    // Validates ids, colors in {0,1}, no self-loops, no duplicate arcs.
    // Arcs inside a color class are rejected unless allow_improper_coloring
    // (used when parsing general digraphs).
    static ColoredDigraph make(const std::vector<std::pair<std::string, int>>& colored_vertices,
                               const std::vector<Arc>& arcs,
                               bool allow_improper_coloring = false);

    int size() const { return static_cast<int>(ids_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    bool has_vertex(const std::string& id) const;
    int index_of(const std::string& id) const;  // throws std::invalid_argument
    const std::string& id_of(int v) const { return ids_[v]; }
    int color(int v) const { return color_[v]; }
    std::vector<std::pair<std::string, int>> colored_vertices() const;

    bool has_arc(int u, int v) const;
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    const std::vector<std::pair<int, int>>& arc_indices() const { return arcs_; }
    std::vector<Arc> arcs() const;

    bool properly_colored() const;

    UndirectedGraph underlying() const;
    ColoredDigraph induced_subdigraph(const std::vector<std::string>& subset) const;
    EquivalenceClasses equivalence_classes() const;

    bool operator==(const ColoredDigraph& other) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<int> color_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::pair<int, int>> arcs_;  // sorted
};

}  // namespace qbmg

#endif
