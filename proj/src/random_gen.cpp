#include "qbmg/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qbmg {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Recursive split of a shuffled leaf block into 2..4 nonempty parts.
void emit_subtree(std::ostringstream& os, std::mt19937_64& rng,
                  const std::vector<std::string>& leaves, std::size_t lo, std::size_t hi,
                  int& inner_counter) {
    if (hi - lo == 1) {
        os << leaves[lo];
        return;
    }
    const int span = static_cast<int>(hi - lo);
    const int parts = uniform(rng, 2, std::min(span, 4));
    std::vector<int> cuts(span - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());

    os << '(';
    std::size_t start = lo;
    for (int i = 0; i <= static_cast<int>(cuts.size()); ++i) {
        std::size_t end = i < static_cast<int>(cuts.size()) ? lo + cuts[i] : hi;
        if (i) os << ',';
        emit_subtree(os, rng, leaves, start, end, inner_counter);
        start = end;
    }
    os << ')' << 'n' << ++inner_counter;
}

}  // namespace

PhyloTree random_tree(std::mt19937_64& rng, int min_leaves, int max_leaves) {
    const int n = uniform(rng, min_leaves, max_leaves);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double bias = 0.2 + 0.6 * unit(rng);

    std::vector<int> colors(n);
    do {
        for (int i = 0; i < n; ++i) colors[i] = unit(rng) < bias ? 0 : 1;
    } while (n >= 2 && (std::count(colors.begin(), colors.end(), 0) == 0 ||
                        std::count(colors.begin(), colors.end(), 0) == n));

    std::vector<std::string> leaves(n);
    for (int i = 0; i < n; ++i) {
        std::ostringstream name;
        name << 'l' << (i < 9 ? "0" : "") << i + 1 << ':' << (colors[i] == 0 ? 'A' : 'B');
        leaves[i] = name.str();
    }
    std::shuffle(leaves.begin(), leaves.end(), rng);

    std::ostringstream os;
    int inner_counter = 0;
    emit_subtree(os, rng, leaves, 0, leaves.size(), inner_counter);
    os << ';';
    return PhyloTree::parse(os.str());
}

TruncationMap random_truncation_map(std::mt19937_64& rng, const PhyloTree& t) {
    std::vector<std::tuple<int, std::string, int>> entries;
    for (int leaf : t.leaves()) {
        for (const auto& color : t.colors()) {
            if (color == t.node(leaf).color) continue;
            std::vector<int> path;
            for (int v = leaf; v != -1; v = t.node(v).parent) path.push_back(v);
            entries.emplace_back(leaf, color, path[uniform(rng, 0, static_cast<int>(path.size()) - 1)]);
        }
    }
    return TruncationMap::from_entries(t, entries);
}

ColoredDigraph random_digraph(std::mt19937_64& rng, int max_vertices) {
    const int n = uniform(rng, 1, max_vertices);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = 0.1 + 0.4 * unit(rng);

    std::vector<std::pair<std::string, int>> vertices;
    for (int i = 0; i < n; ++i)
        vertices.emplace_back("v" + std::to_string(i + 1), uniform(rng, 0, 1));
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && unit(rng) < density)
                arcs.emplace_back(vertices[i].first, vertices[j].first);
    return ColoredDigraph::make(vertices, arcs, /*allow_improper_coloring=*/true);
}

}  // namespace qbmg
