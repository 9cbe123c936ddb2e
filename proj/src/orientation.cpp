#include "qbmg/orientation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qbmg/errors.hpp"

namespace qbmg {

ColoredDigraph Orientation::oriented() const {
    return ColoredDigraph::make(base.colored_vertices(), kept_arcs,
                                /*allow_improper_coloring=*/true);
}

std::vector<std::pair<std::string, std::string>> symmetric_pairs(const ColoredDigraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : g.arc_indices())
        if (u < v && g.has_arc(v, u)) out.emplace_back(g.id_of(u), g.id_of(v));
    return out;
}

bool check_star_condition(const ColoredDigraph& g) {
    std::set<std::string> endpoints;
    for (const auto& [u, v] : symmetric_pairs(g)) {
        if (!endpoints.insert(u).second) return false;
        if (!endpoints.insert(v).second) return false;
    }
    return true;
}

namespace {

// keep[i] == false keeps (u,v) of pair i (u < v), true keeps (v,u)
Orientation build_orientation(const ColoredDigraph& g,
                              const std::vector<std::pair<std::string, std::string>>& pairs,
                              const std::vector<char>& keep_reversed) {
    std::set<Arc> dropped;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (keep_reversed[i])
            dropped.insert({pairs[i].first, pairs[i].second});
        else
            dropped.insert({pairs[i].second, pairs[i].first});
    }
    Orientation o;
    o.base = g;
    for (const auto& arc : g.arcs())
        if (!dropped.count(arc)) o.kept_arcs.push_back(arc);
    return o;
}

bool preserves_partition(const ColoredDigraph& g, const Orientation& o) {
    return g.equivalence_classes().same_partition(o.oriented().equivalence_classes());
}

}  // namespace

std::optional<Orientation> consistent_orientation(const ColoredDigraph& g) {
    const auto pairs = symmetric_pairs(g);
    if (pairs.empty()) {
        Orientation o;
        o.base = g;
        o.kept_arcs = g.arcs();
        return o;
    }
    const auto base_classes = g.equivalence_classes();

    if (check_star_condition(g)) {
        // Pairs are vertex-disjoint: decide each one on its own against the
        // base partition, then validate the combined result.
        std::vector<char> choice(pairs.size(), 0);
        bool decided = true;
        for (std::size_t i = 0; i < pairs.size() && decided; ++i) {
            decided = false;
            for (char rev : {0, 1}) {
                std::set<Arc> dropped{rev ? Arc{pairs[i].first, pairs[i].second}
                                          : Arc{pairs[i].second, pairs[i].first}};
                std::vector<Arc> kept;
                for (const auto& arc : g.arcs())
                    if (!dropped.count(arc)) kept.push_back(arc);
                auto candidate = ColoredDigraph::make(g.colored_vertices(), kept, true);
                if (base_classes.same_partition(candidate.equivalence_classes())) {
                    choice[i] = rev;
                    decided = true;
                    break;
                }
            }
        }
        if (decided) {
            Orientation o = build_orientation(g, pairs, choice);
            if (preserves_partition(g, o)) return o;
        }
        // fall through to the exhaustive search on pathological inputs
    }

    if (static_cast<int>(pairs.size()) > kOrientationPairGuard)
        throw guard_error("exhaustive orientation search limited to " +
                          std::to_string(kOrientationPairGuard) + " symmetric pairs, got " +
                          std::to_string(pairs.size()));
    const std::uint64_t total = 1ull << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<char> choice(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) choice[i] = (mask >> i) & 1;
        Orientation o = build_orientation(g, pairs, choice);
        if (preserves_partition(g, o)) return o;
    }
    return std::nullopt;
}

std::optional<std::vector<std::string>> topological_order(const ColoredDigraph& g) {
    if (!symmetric_pairs(g).empty())
        throw std::invalid_argument("digraph has a symmetric pair; orient it first");
    std::vector<int> in_degree(g.size(), 0);
    for (const auto& [u, v] : g.arc_indices()) {
        (void)u;
        ++in_degree[v];
    }
    std::set<int> sources;
    for (int v = 0; v < g.size(); ++v)
        if (in_degree[v] == 0) sources.insert(v);

    std::vector<std::string> order;
    while (!sources.empty()) {
        int v = *sources.begin();
        sources.erase(sources.begin());
        order.push_back(g.id_of(v));
        for (int w : g.out_neighbors(v))
            if (--in_degree[w] == 0) sources.insert(w);
    }
    if (static_cast<int>(order.size()) != g.size()) return std::nullopt;
    return order;
}

std::optional<std::vector<std::string>> topological_order(const Orientation& o) {
    return topological_order(o.oriented());
}

namespace {

struct ComponentDecomposition {
    std::vector<int> biclique;
    std::vector<int> stable;
};

// Maximal bicliques of a connected, properly colored component arise as
// neighborhood-intersection closures of subsets of the smaller color side.
std::optional<ComponentDecomposition> decompose_component(const UndirectedGraph& g,
                                                          const std::vector<int>& comp) {
    if (comp.size() == 1) return ComponentDecomposition{{}, comp};
    if (static_cast<int>(comp.size()) > kBicliqueComponentGuard)
        throw guard_error("biclique search limited to components of " +
                          std::to_string(kBicliqueComponentGuard) + " vertices, got " +
                          std::to_string(comp.size()));

    std::set<int> in_comp(comp.begin(), comp.end());
    std::vector<int> side[2];
    for (int v : comp) side[g.color(v)].push_back(v);
    const std::vector<int>& seeds = side[side[0].size() <= side[1].size() ? 0 : 1];

    auto common_neighbors = [&](const std::vector<int>& vs) {
        std::vector<int> acc;
        bool first = true;
        for (int v : vs) {
            std::vector<int> nbrs;
            for (int w : g.neighbors(v))
                if (in_comp.count(w)) nbrs.push_back(w);
            if (first) {
                acc = nbrs;
                first = false;
            } else {
                std::vector<int> merged;
                std::set_intersection(acc.begin(), acc.end(), nbrs.begin(), nbrs.end(),
                                      std::back_inserter(merged));
                acc = merged;
            }
            if (acc.empty()) break;
        }
        return acc;
    };

    std::set<std::vector<int>> candidates;
    const std::uint64_t total = 1ull << seeds.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < seeds.size(); ++i)
            if ((mask >> i) & 1) subset.push_back(seeds[i]);
        std::vector<int> other = common_neighbors(subset);
        if (other.empty()) continue;
        std::vector<int> closed = common_neighbors(other);
        std::vector<int> biclique;
        std::set_union(closed.begin(), closed.end(), other.begin(), other.end(),
                       std::back_inserter(biclique));
        candidates.insert(biclique);
    }

    std::vector<std::vector<int>> ordered(candidates.begin(), candidates.end());
    std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        auto ids = [&](const std::vector<int>& vs) {
            std::vector<std::string> out;
            for (int v : vs) out.push_back(g.id_of(v));
            return out;
        };
        return ids(a) < ids(b);
    });

    for (const auto& biclique : ordered) {
        std::set<int> in_k(biclique.begin(), biclique.end());
        std::vector<int> rest;
        for (int v : comp)
            if (!in_k.count(v)) rest.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < rest.size() && ok; ++i) {
            bool dominated = false;
            for (int w : g.neighbors(rest[i])) {
                if (in_k.count(w)) dominated = true;
                if (std::binary_search(rest.begin(), rest.end(), w)) ok = false;
            }
            if (!dominated) ok = false;
        }
        if (ok) return ComponentDecomposition{biclique, rest};
    }
    return std::nullopt;
}

}  // namespace

std::optional<KSDecomposition> ks_decomposition(const UndirectedGraph& g) {
    if (!g.properly_two_colored())
        throw std::invalid_argument("graph is not properly two-colored");
    KSDecomposition ks;
    for (const auto& comp : g.components()) {
        auto dec = decompose_component(g, comp);
        if (!dec) return std::nullopt;
        for (int v : dec->biclique) ks.biclique.push_back(g.id_of(v));
        for (int v : dec->stable) ks.stable.push_back(g.id_of(v));
    }
    std::sort(ks.biclique.begin(), ks.biclique.end());
    std::sort(ks.stable.begin(), ks.stable.end());
    if (!validate_ks(g, ks)) throw std::logic_error("decomposition failed validation");
    return ks;
}

bool validate_ks(const UndirectedGraph& g, const KSDecomposition& ks) {
    std::set<int> in_k, in_s;
    try {
        for (const auto& id : ks.biclique) in_k.insert(g.index_of(id));
        for (const auto& id : ks.stable) in_s.insert(g.index_of(id));
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (static_cast<int>(in_k.size() + in_s.size()) != g.size()) return false;
    for (int v : in_k)
        if (in_s.count(v)) return false;

    // S is stable
    for (int v : in_s)
        for (int w : g.neighbors(v))
            if (in_s.count(w)) return false;

    for (const auto& comp : g.components()) {
        std::vector<int> kc, sc;
        for (int v : comp) (in_k.count(v) ? kc : sc).push_back(v);
        if (comp.size() == 1) {
            if (!kc.empty()) return false;  // isolated vertices belong to S
            continue;
        }
        if (kc.empty()) return false;
        // complete bipartite across the color classes, both sides nonempty
        bool side_seen[2] = {false, false};
        for (int v : kc) side_seen[g.color(v)] = true;
        if (!side_seen[0] || !side_seen[1]) return false;
        for (int u : kc)
            for (int v : kc) {
                if (u >= v) continue;
                bool expect = g.color(u) != g.color(v);
                if (g.has_edge(u, v) != expect) return false;
            }
        // K_c dominates its component
        for (int v : sc) {
            bool dominated = false;
            for (int w : g.neighbors(v))
                if (in_k.count(w)) dominated = true;
            if (!dominated) return false;
        }
    }
    return true;
}

std::optional<BicliquePipelineResult> dominating_biclique_pipeline(const ColoredDigraph& g) {
    AxiomReport report = is_2qbmg(g, /*first_only=*/true);
    if (!report.pass())
        throw precondition_error("input is not a 2qBMG:\n" + report.render());

    auto orientation = consistent_orientation(g);
    if (!orientation) return std::nullopt;

    auto ks = ks_decomposition(g.underlying());
    if (!ks) throw std::logic_error("2qBMG without a dominating biclique decomposition");

    auto induced = orientation->oriented().induced_subdigraph(ks->biclique);
    auto topo = topological_order(induced);
    if (!topo) throw std::logic_error("oriented biclique subgraph is not acyclic");

    return BicliquePipelineResult{std::move(*orientation), ks->biclique, ks->stable,
                                  std::move(*topo)};
}

AxiomReport biclique_no_symmetric_is_2qbmg(const ColoredDigraph& g,
                                           const std::vector<std::string>& biclique) {
    ColoredDigraph sub = g.induced_subdigraph(biclique);
    UndirectedGraph under = sub.underlying();
    for (int u = 0; u < under.size(); ++u)
        for (int v = u + 1; v < under.size(); ++v)
            if (under.color(u) != under.color(v) && !under.has_edge(u, v))
                throw precondition_error("vertex set does not induce a biclique: " +
                                         under.id_of(u) + " and " + under.id_of(v) +
                                         " are non-adjacent");
    if (auto pairs = symmetric_pairs(sub); !pairs.empty())
        throw precondition_error("induced subgraph has a symmetric pair: " + pairs.front().first +
                                 " <-> " + pairs.front().second);
    return is_2qbmg(sub);
}

}  // namespace qbmg
