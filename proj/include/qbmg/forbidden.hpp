#ifndef QBMG_FORBIDDEN_HPP
#define QBMG_FORBIDDEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "qbmg/undirected_graph.hpp"

namespace qbmg {

struct ForbiddenReport {
    std::optional<std::vector<std::string>> p6;
    std::optional<std::vector<std::string>> c6;
    // cycle vertices in order, then the pendant of each cycle vertex
    std::optional<std::vector<std::string>> sunlet4;
    bool chordal_bipartite = false;
    int longest_induced_path = 0;  // vertices; search capped at 12

    bool any_forbidden() const { return p6 || c6 || sunlet4; }
    std::string render() const;
    std::string render_tsv() const;
};

// Depth-first extension with independence pruning; first witness in
// lexicographic order. k >= 2.
std::optional<std::vector<std::string>> find_induced_path(const UndirectedGraph& g, int k);
// Induced k-cycle, k >= 4; returned in cycle order starting at its
// smallest vertex.
std::optional<std::vector<std::string>> find_induced_cycle(const UndirectedGraph& g, int k);

// Subset-scan oracles, independent of the DFS route; intended for graphs
// with at most ~10 vertices.
std::optional<std::vector<std::string>> find_induced_path_bruteforce(const UndirectedGraph& g,
                                                                     int k);
std::optional<std::vector<std::string>> find_induced_cycle_bruteforce(const UndirectedGraph& g,
                                                                      int k);

// Bipartite (structurally) with no induced cycle of length >= 6.
bool is_chordal_bipartite(const UndirectedGraph& g);

// Eight vertices inducing exactly a 4-cycle with one pendant per cycle
// vertex; targeted pattern search.
std::optional<std::vector<std::string>> find_sunlet4(const UndirectedGraph& g);

// All searches; every returned witness is re-induced and verified.
ForbiddenReport forbidden_report(const UndirectedGraph& g);

// Re-induction checks used on every witness before it is reported.
bool induces_exact_path(const UndirectedGraph& g, const std::vector<std::string>& seq);
bool induces_exact_cycle(const UndirectedGraph& g, const std::vector<std::string>& seq);
bool induces_exact_sunlet4(const UndirectedGraph& g, const std::vector<std::string>& seq);

}  // namespace qbmg

#endif
