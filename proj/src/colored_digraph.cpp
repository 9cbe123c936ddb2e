#include "qbmg/colored_digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qbmg {

std::vector<std::vector<std::string>> EquivalenceClasses::partition() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.members);
    return out;
}

bool EquivalenceClasses::same_partition(const EquivalenceClasses& other) const {
    return partition() == other.partition();
}

ColoredDigraph ColoredDigraph::make(
    const std::vector<std::pair<std::string, int>>& colored_vertices,
    const std::vector<Arc>& arcs, bool allow_improper_coloring) {
    ColoredDigraph g;
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
    g.out_.resize(g.ids_.size());
    g.in_.resize(g.ids_.size());

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : arcs) {
        int u = g.index_of(a);
        int v = g.index_of(b);
        if (u == v) throw std::invalid_argument("self-loop at '" + a + "'");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate arc " + a + " " + b);
        if (!allow_improper_coloring && g.color_[u] == g.color_[v])
            throw std::invalid_argument("arc " + a + " " + b +
                                        " joins vertices of the same color");
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    g.arcs_.assign(seen.begin(), seen.end());
    for (auto& nbrs : g.out_) std::sort(nbrs.begin(), nbrs.end());
    for (auto& nbrs : g.in_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool ColoredDigraph::has_vertex(const std::string& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

int ColoredDigraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw std::invalid_argument("unknown vertex '" + id + "'");
    return static_cast<int>(it - ids_.begin());
}

std::vector<std::pair<std::string, int>> ColoredDigraph::colored_vertices() const {
    std::vector<std::pair<std::string, int>> out;
    out.reserve(ids_.size());
    for (int v = 0; v < size(); ++v) out.emplace_back(ids_[v], color_[v]);
    return out;
}

bool ColoredDigraph::has_arc(int u, int v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Arc> ColoredDigraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for (const auto& [u, v] : arcs_) out.emplace_back(ids_[u], ids_[v]);
    return out;
}

bool ColoredDigraph::properly_colored() const {
    for (const auto& [u, v] : arcs_)
        if (color_[u] == color_[v]) return false;
    return true;
}

UndirectedGraph ColoredDigraph::underlying() const {
    std::set<std::pair<int, int>> edge_set;
    for (const auto& [u, v] : arcs_) edge_set.insert(std::minmax(u, v));
    std::vector<Edge> edges;
    for (const auto& [u, v] : edge_set) edges.emplace_back(ids_[u], ids_[v]);
    return UndirectedGraph::make(colored_vertices(), edges, /*allow_improper_coloring=*/true);
}

ColoredDigraph ColoredDigraph::induced_subdigraph(const std::vector<std::string>& subset) const {
    std::set<int> keep;
    for (const auto& id : subset) keep.insert(index_of(id));
    std::vector<std::pair<std::string, int>> vs;
    for (int v : keep) vs.emplace_back(ids_[v], color_[v]);
    std::vector<Arc> as;
    for (const auto& [u, v] : arcs_)
        if (keep.count(u) && keep.count(v)) as.emplace_back(ids_[u], ids_[v]);
    return make(vs, as, /*allow_improper_coloring=*/true);
}

EquivalenceClasses ColoredDigraph::equivalence_classes() const {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> by_signature;
    for (int v = 0; v < size(); ++v) by_signature[{out_[v], in_[v]}].push_back(v);

    EquivalenceClasses result;
    for (const auto& [sig, members] : by_signature) {
        EquivalenceClasses::Block block;
        for (int v : members) block.members.push_back(ids_[v]);
        for (int w : sig.first) block.shared_out.push_back(ids_[w]);
        for (int w : sig.second) block.shared_in.push_back(ids_[w]);
        result.blocks.push_back(std::move(block));
    }
    std::sort(result.blocks.begin(), result.blocks.end(),
              [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
    return result;
}

}  // namespace qbmg
