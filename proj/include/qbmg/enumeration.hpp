#ifndef QBMG_ENUMERATION_HPP
#define QBMG_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qbmg/colored_digraph.hpp"
#include "qbmg/isomorphism.hpp"
#include "qbmg/undirected_graph.hpp"

namespace qbmg {

inline constexpr int kAssignmentEdgeGuard = 16;  // 3^|E| search space

struct EnumerationResult {
    std::vector<ColoredDigraph> representatives;  // first of each class, in scan order
    std::uint64_t assignments = 0;                // 3^|E|
    std::uint64_t passing = 0;                    // raw, before dedup
};

// Scans every forward/backward/both assignment over the edges (base-3
// odometer, edges in lexicographic order), keeps the digraphs passing
// is_2qbmg, and dedups them under are_isomorphic in the given mode.
// Requires a properly 2-colored base; throws guard_error above
// kAssignmentEdgeGuard edges.
EnumerationResult enumerate_2qbmgs(const UndirectedGraph& base, IsoMode mode);

struct Un2qbmgResult {
    bool value = false;
    std::uint64_t assignments_total = 0;
    std::uint64_t assignments_examined = 0;  // stops at the first passing one
};

// Membership via existence of a realizing 2qBMG over the same edge set.
Un2qbmgResult is_un2qbmg(const UndirectedGraph& base);

struct ClaimResult {
    std::string name;
    std::string expected;
    std::string got_preserving;
    std::string got_swap;
    bool ok = false;
};

struct PaperClaimsReport {
    std::vector<ClaimResult> claims;
    std::string matching_mode;  // iso mode reproducing all three class counts
    bool all_ok = false;

    std::string render() const;  // one line per claim
    std::string render_tsv() const;
};

// Class counts for P4 (4), P5 (6), C4 (10) under both isomorphism modes,
// plus non-membership of P6, C6 and Sunlet4.
PaperClaimsReport verify_paper_claims();

struct HereditaryCheckReport {
    int samples = 0;
    int subdigraph_checks = 0;
    int membership_checks = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
    std::string render() const;
};

// Samples random trees and truncations, takes random induced subdigraphs
// of the resulting 2qBMGs, and checks that each passes is_2qbmg and (when
// the underlying edge count allows the assignment scan) that the
// underlying graph is an un2qBMG.
HereditaryCheckReport hereditary_spot_check(int samples, std::uint64_t seed,
                                            int max_edges_for_membership = 12);

}  // namespace qbmg

#endif
