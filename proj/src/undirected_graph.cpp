#include "qbmg/undirected_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qbmg {

UndirectedGraph UndirectedGraph::make(
    const std::vector<std::pair<std::string, int>>& colored_vertices,
    const std::vector<Edge>& edges, bool allow_improper_coloring) {
    UndirectedGraph g;
    for (const auto& [id, color] : colored_vertices) {
        if (id.empty()) throw std::invalid_argument("empty vertex id");
        if (color != 0 && color != 1)
            throw std::invalid_argument("vertex '" + id + "': color must be 0 or 1");
        g.ids_.push_back(id);
    }
    std::sort(g.ids_.begin(), g.ids_.end());
    if (std::adjacent_find(g.ids_.begin(), g.ids_.end()) != g.ids_.end())
        throw std::invalid_argument("duplicate vertex id");

    g.color_.resize(g.ids_.size());
    for (const auto& [id, color] : colored_vertices) g.color_[g.index_of(id)] = color;
    g.adj_.resize(g.ids_.size());

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int u = g.index_of(a);
        int v = g.index_of(b);
        if (u == v) throw std::invalid_argument("self-loop at '" + a + "'");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge " + a + " " + b);
        if (!allow_improper_coloring && g.color_[u] == g.color_[v])
            throw std::invalid_argument("edge " + a + " " + b +
                                        " joins vertices of the same color");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool UndirectedGraph::has_vertex(const std::string& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

int UndirectedGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw std::invalid_argument("unknown vertex '" + id + "'");
    return static_cast<int>(it - ids_.begin());
}

bool UndirectedGraph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) out.emplace_back(ids_[u], ids_[v]);
    return out;
}

bool UndirectedGraph::properly_two_colored() const {
    for (const auto& [u, v] : edges_)
        if (color_[u] == color_[v]) return false;
    return true;
}

bool UndirectedGraph::is_bipartite() const {
    std::vector<int> side(ids_.size(), -1);
    std::vector<int> stack;
    for (int s = 0; s < size(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

UndirectedGraph UndirectedGraph::induced_subgraph(const std::vector<std::string>& subset) const {
    std::set<int> keep;
    for (const auto& id : subset) keep.insert(index_of(id));
    std::vector<std::pair<std::string, int>> vs;
    for (int v : keep) vs.emplace_back(ids_[v], color_[v]);
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_)
        if (keep.count(u) && keep.count(v)) es.emplace_back(ids_[u], ids_[v]);
    return make(vs, es, /*allow_improper_coloring=*/true);
}

std::vector<std::vector<int>> UndirectedGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(ids_.size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace qbmg
