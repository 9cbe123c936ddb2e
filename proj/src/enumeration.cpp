#include "qbmg/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbmg/errors.hpp"
#include "qbmg/families.hpp"
#include "qbmg/random_gen.hpp"
#include "qbmg/recognition.hpp"

namespace qbmg {

namespace {

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

// states per edge (u,v) with u < v: 0 = u->v, 1 = v->u, 2 = both
ColoredDigraph realize(const UndirectedGraph& base, const std::vector<Edge>& edges,
                       std::uint64_t code) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        switch (code % 3) {
            case 0: arcs.emplace_back(u, v); break;
            case 1: arcs.emplace_back(v, u); break;
            default:
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
        }
        code /= 3;
    }
    std::vector<std::pair<std::string, int>> vertices;
    for (int v = 0; v < base.size(); ++v) vertices.emplace_back(base.id_of(v), base.color(v));
    return ColoredDigraph::make(vertices, arcs);
}

void check_assignment_preconditions(const UndirectedGraph& base) {
    if (!base.properly_two_colored())
        throw std::invalid_argument("base graph is not properly two-colored");
    if (base.edge_count() > kAssignmentEdgeGuard)
        throw guard_error("assignment scan limited to " + std::to_string(kAssignmentEdgeGuard) +
                          " edges (3^|E| space), got " + std::to_string(base.edge_count()));
}

}  // namespace

EnumerationResult enumerate_2qbmgs(const UndirectedGraph& base, IsoMode mode) {
    check_assignment_preconditions(base);
    const auto edges = base.edges();
    EnumerationResult result;
    result.assignments = pow3(static_cast<int>(edges.size()));
    for (std::uint64_t code = 0; code < result.assignments; ++code) {
        ColoredDigraph g = realize(base, edges, code);
        if (!is_2qbmg(g, /*first_only=*/true).pass()) continue;
        ++result.passing;
        bool seen = std::any_of(result.representatives.begin(), result.representatives.end(),
                                [&](const ColoredDigraph& r) { return are_isomorphic(g, r, mode); });
        if (!seen) result.representatives.push_back(std::move(g));
    }
    return result;
}

Un2qbmgResult is_un2qbmg(const UndirectedGraph& base) {
    check_assignment_preconditions(base);
    const auto edges = base.edges();
    Un2qbmgResult result;
    result.assignments_total = pow3(static_cast<int>(edges.size()));
    for (std::uint64_t code = 0; code < result.assignments_total; ++code) {
        ++result.assignments_examined;
        if (is_2qbmg(realize(base, edges, code), /*first_only=*/true).pass()) {
            result.value = true;
            return result;
        }
    }
    return result;
}

namespace {

std::string count_claim(std::vector<ClaimResult>& claims, const std::string& name,
                        const UndirectedGraph& base, int expected) {
    auto strict = enumerate_2qbmgs(base, IsoMode::color_preserving);
    auto swap = enumerate_2qbmgs(base, IsoMode::color_swap_allowed);
    ClaimResult c;
    c.name = name;
    c.expected = std::to_string(expected);
    c.got_preserving = std::to_string(strict.representatives.size());
    c.got_swap = std::to_string(swap.representatives.size());
    c.ok = c.got_preserving == c.expected || c.got_swap == c.expected;
    claims.push_back(c);
    if (c.got_preserving == c.expected && c.got_swap == c.expected) return "both";
    if (c.got_preserving == c.expected) return to_string(IsoMode::color_preserving);
    if (c.got_swap == c.expected) return to_string(IsoMode::color_swap_allowed);
    return "none";
}

void membership_claim(std::vector<ClaimResult>& claims, const std::string& name,
                      const UndirectedGraph& base) {
    auto r = is_un2qbmg(base);
    ClaimResult c;
    c.name = name;
    c.expected = "0/" + std::to_string(r.assignments_total);
    std::string got = (r.value ? "some/" : "0/") + std::to_string(r.assignments_total);
    c.got_preserving = got;
    c.got_swap = got;
    c.ok = !r.value;
    claims.push_back(c);
}

}  // namespace

PaperClaimsReport verify_paper_claims() {
    PaperClaimsReport report;
    std::vector<std::string> modes;
    modes.push_back(count_claim(report.claims, "p4-classes", path_graph(4), 4));
    modes.push_back(count_claim(report.claims, "p5-classes", path_graph(5), 6));
    modes.push_back(count_claim(report.claims, "c4-classes", cycle_graph(4), 10));
    membership_claim(report.claims, "p6-not-un2qbmg", path_graph(6));
    membership_claim(report.claims, "c6-not-un2qbmg", cycle_graph(6));
    membership_claim(report.claims, "sunlet4-not-un2qbmg", sunlet4_graph());

    auto matches = [&](const char* mode) {
        return std::all_of(modes.begin(), modes.end(), [&](const std::string& m) {
            return m == mode || m == "both";
        });
    };
    if (matches(to_string(IsoMode::color_swap_allowed)))
        report.matching_mode = to_string(IsoMode::color_swap_allowed);
    else if (matches(to_string(IsoMode::color_preserving)))
        report.matching_mode = to_string(IsoMode::color_preserving);
    else
        report.matching_mode = "none";

    report.all_ok = report.matching_mode != "none" &&
                    std::all_of(report.claims.begin(), report.claims.end(),
                                [](const ClaimResult& c) { return c.ok; });
    return report;
}

std::string PaperClaimsReport::render() const {
    std::ostringstream os;
    for (const auto& c : claims)
        os << c.name << " expected=" << c.expected << " color-preserving=" << c.got_preserving
           << " color-swap-allowed=" << c.got_swap << ' ' << (c.ok ? "ok" : "MISMATCH") << '\n';
    os << "matching-mode: " << matching_mode << '\n';
    os << "verdict: " << (all_ok ? "pass" : "fail") << '\n';
    return os.str();
}

std::string PaperClaimsReport::render_tsv() const {
    std::ostringstream os;
    for (const auto& c : claims)
        os << c.name << '\t' << c.expected << '\t' << c.got_preserving << '\t' << c.got_swap
           << '\t' << (c.ok ? "ok" : "MISMATCH") << '\n';
    os << "matching-mode\t" << matching_mode << "\t\t\t\n";
    os << "verdict\t" << (all_ok ? "pass" : "fail") << "\t\t\t\n";
    return os.str();
}

HereditaryCheckReport hereditary_spot_check(int samples, std::uint64_t seed,
                                            int max_edges_for_membership) {
    std::mt19937_64 rng(seed);
    HereditaryCheckReport report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        PhyloTree tree = random_tree(rng);
        TruncationMap trunc = random_truncation_map(rng, tree);
        ColoredDigraph g = build_qbmg(tree, trunc);

        std::vector<std::string> subset;
        for (const auto& id : g.vertex_ids())
            if (rng() % 2 == 0) subset.push_back(id);
        ColoredDigraph sub = g.induced_subdigraph(subset);

        ++report.subdigraph_checks;
        if (!is_2qbmg(sub, /*first_only=*/true).pass()) {
            report.counterexamples.push_back("induced subdigraph of " + tree.newick() +
                                             " fails the axioms");
            continue;
        }
        UndirectedGraph under = sub.underlying();
        if (under.edge_count() <= max_edges_for_membership) {
            ++report.membership_checks;
            if (!is_un2qbmg(under).value)
                report.counterexamples.push_back("underlying induced subgraph of " +
                                                 tree.newick() + " is not an un2qBMG");
        }
    }
    return report;
}

std::string HereditaryCheckReport::render() const {
    std::ostringstream os;
    os << "samples: " << samples << '\n';
    os << "subdigraph-checks: " << subdigraph_checks << '\n';
    os << "membership-checks: " << membership_checks << '\n';
    if (counterexamples.empty()) {
        os << "counterexamples: none\n";
    } else {
        for (const auto& c : counterexamples) os << "counterexample: " << c << '\n';
    }
    return os.str();
}

}  // namespace qbmg
