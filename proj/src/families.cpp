#include "qbmg/families.hpp"

#include <stdexcept>

namespace qbmg {

namespace {

std::string vid(int i) { return "v" + std::to_string(i); }

}  // namespace

UndirectedGraph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::pair<std::string, int>> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i) vs.emplace_back(vid(i), (i - 1) % 2);
    for (int i = 1; i < k; ++i) es.emplace_back(vid(i), vid(i + 1));
    return UndirectedGraph::make(vs, es);
}

UndirectedGraph cycle_graph(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("two-colored cycle needs even length >= 4");
    std::vector<std::pair<std::string, int>> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i) vs.emplace_back(vid(i), (i - 1) % 2);
    for (int i = 1; i < k; ++i) es.emplace_back(vid(i), vid(i + 1));
    es.emplace_back(vid(k), vid(1));
    return UndirectedGraph::make(vs, es);
}

UndirectedGraph sunlet4_graph() {
    std::vector<std::pair<std::string, int>> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= 4; ++i) {
        vs.emplace_back(vid(i), (i - 1) % 2);
        vs.emplace_back(vid(i + 4), i % 2);  // pendant takes the opposite color
        es.emplace_back(vid(i), vid(i + 4));
    }
    for (int i = 1; i < 4; ++i) es.emplace_back(vid(i), vid(i + 1));
    es.emplace_back(vid(4), vid(1));
    return UndirectedGraph::make(vs, es);
}

}  // namespace qbmg
