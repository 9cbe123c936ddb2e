#ifndef QBMG_ORIENTATION_HPP
#define QBMG_ORIENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qbmg/colored_digraph.hpp"
#include "qbmg/recognition.hpp"

namespace qbmg {

// Arc subset of a digraph keeping exactly one arc per symmetric pair and
// every non-symmetric arc.
struct Orientation {
    ColoredDigraph base;
    std::vector<Arc> kept_arcs;  // sorted

    ColoredDigraph oriented() const;
};

// All unordered pairs {u,v} (u < v) with both arcs present.
std::vector<std::pair<std::string, std::string>> symmetric_pairs(const ColoredDigraph& g);

// Condition (*): no two symmetric pairs share an endpoint.
bool check_star_condition(const ColoredDigraph& g);

inline constexpr int kOrientationPairGuard = 20;

// An orientation whose equivalence partition equals the base's, or empty
// when none exists. Pairs are decided independently when (*) holds; the
// result is validated and a 2^pairs exhaustive search (guarded at
// kOrientationPairGuard) covers the rest.
std::optional<Orientation> consistent_orientation(const ColoredDigraph& g);

// Kahn's algorithm, smallest available vertex first. Throws
// std::invalid_argument when the input still has a symmetric pair.
std::optional<std::vector<std::string>> topological_order(const ColoredDigraph& g);
std::optional<std::vector<std::string>> topological_order(const Orientation& o);

struct KSDecomposition {
    std::vector<std::string> biclique;  // K, sorted
    std::vector<std::string> stable;    // S, sorted
};

inline constexpr int kBicliqueComponentGuard = 24;

// Partition per connected component: isolated vertices join S; every other
// component contributes a biclique K_c that dominates it, with a stable
// complement. Candidates are closures of subsets of the smaller color side,
// tried in decreasing size then lexicographic order. Requires a proper
// 2-coloring.
std::optional<KSDecomposition> ks_decomposition(const UndirectedGraph& g);

// Independent re-check of the per-component invariants.
bool validate_ks(const UndirectedGraph& g, const KSDecomposition& ks);

struct BicliquePipelineResult {
    Orientation orientation;
    std::vector<std::string> biclique;          // K
    std::vector<std::string> stable;            // S
    std::vector<std::string> biclique_topo_order;  // of the oriented subgraph on K
};

// Consistent orientation plus a dominating biclique K whose induced
// oriented subgraph is acyclic. Input must pass is_2qbmg
// (precondition_error otherwise); empty only when no consistent
// orientation exists.
std::optional<BicliquePipelineResult> dominating_biclique_pipeline(const ColoredDigraph& g);

// Runs is_2qbmg on the subdigraph induced by a biclique vertex set that
// has no symmetric pair; precondition_error when the set is not a
// biclique or has a symmetric pair.
AxiomReport biclique_no_symmetric_is_2qbmg(const ColoredDigraph& g,
                                           const std::vector<std::string>& biclique);

}  // namespace qbmg

#endif
