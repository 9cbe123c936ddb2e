#ifndef QBMG_UNDIRECTED_GRAPH_HPP
#define QBMG_UNDIRECTED_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace qbmg {

using Edge = std::pair<std::string, std::string>;

// Immutable undirected graph with a two-coloring of the vertices.
// Vertices are opaque string ids kept in lexicographic order; all
// index-based accessors refer to that order.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    // Validates ids, colors in {0,1}, no self-loops, no duplicate edges.
    // Same-color edges are rejected unless allow_improper_coloring.
    static UndirectedGraph make(const std::vector<std::pair<std::string, int>>& colored_vertices,
                                const std::vector<Edge>& edges,
                                bool allow_improper_coloring = false);

    int size() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    bool has_vertex(const std::string& id) const;
    int index_of(const std::string& id) const;  // throws std::invalid_argument
    const std::string& id_of(int v) const { return ids_[v]; }
    int color(int v) const { return color_[v]; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Pairs (u, v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edge_indices() const { return edges_; }
    std::vector<Edge> edges() const;

    // Every edge joins the two color classes.
    bool properly_two_colored() const;
    // Structural test by BFS 2-coloring; ignores the stored colors.
    bool is_bipartite() const;

    UndirectedGraph induced_subgraph(const std::vector<std::string>& subset) const;

    // Connected components as sorted index lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

    bool operator==(const UndirectedGraph& other) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<int> color_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace qbmg

#endif
