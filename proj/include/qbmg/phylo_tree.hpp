#ifndef QBMG_PHYLO_TREE_HPP
#define QBMG_PHYLO_TREE_HPP

#include <map>
#include <string>
#include <vector>

#include "qbmg/colored_digraph.hpp"

namespace qbmg {

// Rooted phylogenetic tree (every inner node has >= 2 children) with
// colored leaves. Parsed from a Newick-like format with mandatory inner
// labels and leaf:color annotations: ((a1:A,b1:B)v,b2:B)rho;
class PhyloTree {
public:
    struct Node {
        std::string label;
        int parent = -1;            // -1 for the root
        std::vector<int> children;  // in input order
        int depth = 0;
        std::string color;          // empty for inner nodes
        bool is_leaf() const { return children.empty(); }
    };

    static PhyloTree parse(const std::string& newick);  // throws parse_error

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int v) const { return nodes_[v]; }
    int root() const { return root_; }
    const std::vector<int>& leaves() const { return leaves_; }
    bool has_node(const std::string& label) const;
    int node_by_label(const std::string& label) const;  // throws std::invalid_argument
    // Distinct leaf colors, sorted.
    const std::vector<std::string>& colors() const { return colors_; }

    // Deepest common ancestor; throws on unknown node index.
    int lca(int x, int y) const;
    // True when anc lies on the root-to-desc path (desc <= anc in the tree order).
    bool is_ancestor_or_equal(int anc, int desc) const;

    std::string newick() const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    std::vector<int> leaves_;
    std::vector<std::string> colors_;
    std::map<std::string, int> by_label_;

    void finalize();  // depths, leaves, colors, label map, shape validation
};

// Assigns each (leaf, color) a node on the root-to-leaf path; identity on
// the leaf's own color, root by default elsewhere.
class TruncationMap {
public:
    static TruncationMap all_root(const PhyloTree& t);
    // Lines "u <leaf> <color> <node>"; '#' comments. Unspecified pairs
    // default to the root. Throws parse_error on off-path nodes, unknown
    // names, duplicates, or reassigning the own-color entry.
    static TruncationMap parse(const PhyloTree& t, const std::string& text);
    // Programmatic construction; entries as (leaf index, color, node index).
    static TruncationMap from_entries(
        const PhyloTree& t,
        const std::vector<std::tuple<int, std::string, int>>& entries);

    int node_for(int leaf, const std::string& color) const;
    std::string render(const PhyloTree& t) const;

private:
    // keyed by (leaf index, color), complete over leaves x colors
    std::map<std::pair<int, std::string>, int> map_;
};

// Leaves of the given color whose lca with x is deepest. Throws when x is
// not a leaf or s is x's own color; empty only if no leaf has color s.
std::vector<std::string> best_matches(const PhyloTree& t, const std::string& leaf,
                                      const std::string& color);

// Arc (x,y) iff y is a best match of x and lca(x,y) lies at or below the
// truncation node u(x, color(y)). Requires exactly two leaf colors; they
// map to {0,1} in lexicographic order.
ColoredDigraph build_qbmg(const PhyloTree& t, const TruncationMap& u);
ColoredDigraph build_bmg(const PhyloTree& t);

}  // namespace qbmg

#endif
