#ifndef QBMG_TESTS_SUPPORT_HPP
#define QBMG_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "qbmg/colored_digraph.hpp"
#include "qbmg/undirected_graph.hpp"

namespace qbmg::test {

inline ColoredDigraph digraph(std::vector<std::pair<std::string, int>> vertices,
                              std::vector<Arc> arcs, bool allow_improper = false) {
    return ColoredDigraph::make(vertices, arcs, allow_improper);
}

inline UndirectedGraph graph(std::vector<std::pair<std::string, int>> vertices,
                             std::vector<Edge> edges, bool allow_improper = false) {
    return UndirectedGraph::make(vertices, edges, allow_improper);
}

// Reference digraphs over the 5-path, vertices v1..v5 with v2, v4 in the
// second color class.
inline std::vector<std::pair<std::string, int>> p5_vertices() {
    return {{"v1", 0}, {"v2", 1}, {"v3", 0}, {"v4", 1}, {"v5", 0}};
}

inline ColoredDigraph p5a() {
    return digraph(p5_vertices(), {{"v1", "v2"}, {"v3", "v2"}, {"v3", "v4"}, {"v4", "v5"}});
}

inline ColoredDigraph p5b() {
    return digraph(p5_vertices(), {{"v1", "v2"}, {"v3", "v2"}, {"v3", "v4"}, {"v5", "v4"}});
}

}  // namespace qbmg::test

#endif
