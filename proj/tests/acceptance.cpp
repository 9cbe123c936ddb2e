// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria re-derive the classification counts, forbidden-graph
// facts, construction soundness, hereditary closure, decompositions,
// orientation properties, and the dual-route oracle agreements.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qbmg/enumeration.hpp"
#include "qbmg/families.hpp"
#include "qbmg/forbidden.hpp"
#include "qbmg/orientation.hpp"
#include "qbmg/phylo_tree.hpp"
#include "qbmg/random_gen.hpp"
#include "qbmg/recognition.hpp"

using namespace qbmg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
    PhyloTree tree;
    ColoredDigraph graph;
};

std::vector<Instance> generate_instances(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        PhyloTree tree = random_tree(rng, 2, 16);
        TruncationMap trunc = random_truncation_map(rng, tree);
        ColoredDigraph g = build_qbmg(tree, trunc);
        out.push_back({std::move(tree), std::move(g)});
    }
    return out;
}

void criterion_1_classification_counts() {
    auto start = Clock::now();
    auto claims = verify_paper_claims();
    bool mode_ok = claims.matching_mode != "none";
    const IsoMode mode = claims.matching_mode == "color-preserving" ? IsoMode::color_preserving
                                                                    : IsoMode::color_swap_allowed;

    auto p5 = enumerate_2qbmgs(path_graph(5), mode);
    auto p4 = enumerate_2qbmgs(path_graph(4), mode);
    auto c4 = enumerate_2qbmgs(cycle_graph(4), mode);
    double elapsed = seconds_since(start);

    std::ostringstream detail;
    detail << "P5=" << p5.representatives.size() << " P4=" << p4.representatives.size()
           << " C4=" << c4.representatives.size() << ", spaces " << p5.assignments << "/"
           << p4.assignments << "/" << c4.assignments << ", mode=" << claims.matching_mode << ", "
           << elapsed << "s";
    bool ok = mode_ok && p5.representatives.size() == 6 && p4.representatives.size() == 4 &&
              c4.representatives.size() == 10 && p5.assignments == 81 && p4.assignments == 27 &&
              c4.assignments == 81 && elapsed < 1.0;
    report(1, "classification counts for P5/P4/C4", ok, detail.str());
}

void criterion_2_forbidden_graphs() {
    auto start = Clock::now();
    auto p6 = is_un2qbmg(path_graph(6));
    auto c6 = is_un2qbmg(cycle_graph(6));
    auto sunlet = is_un2qbmg(sunlet4_graph());
    double elapsed = seconds_since(start);

    std::ostringstream detail;
    detail << "P6 0/" << p6.assignments_total << ", C6 0/" << c6.assignments_total
           << ", Sunlet4 0/" << sunlet.assignments_total << ", " << elapsed << "s";
    bool ok = !p6.value && p6.assignments_total == 243 && !c6.value &&
              c6.assignments_total == 729 && !sunlet.value && sunlet.assignments_total == 6561 &&
              elapsed < 5.0;
    report(2, "P6, C6 and Sunlet4 admit no realization", ok, detail.str());
}

void criterion_3_construction_soundness(const std::vector<Instance>& instances,
                                        double build_seconds) {
    auto start = Clock::now();
    int violations = 0;
    for (const auto& inst : instances)
        if (!is_2qbmg(inst.graph, /*first_only=*/true).pass()) ++violations;
    double elapsed = build_seconds + seconds_since(start);

    std::ostringstream detail;
    detail << instances.size() << " trees, " << violations << " violations, " << elapsed << "s";
    report(3, "random qBMG constructions satisfy the axioms",
           violations == 0 && instances.size() == 1000 && elapsed < 30.0, detail.str());
}

void criterion_4_underlying_properties(const std::vector<Instance>& instances) {
    int failures_here = 0;
    for (const auto& inst : instances) {
        ForbiddenReport r = forbidden_report(inst.graph.underlying());
        if (r.p6 || r.c6 || !r.chordal_bipartite) ++failures_here;
    }
    std::ostringstream detail;
    detail << instances.size() << " instances, " << failures_here << " failures";
    report(4, "underlying graphs are P6-free, C6-free and chordal bipartite", failures_here == 0,
           detail.str());
}

void criterion_5_hereditary_closure(const std::vector<Instance>& instances) {
    std::mt19937_64 rng(50505);
    int axiom_failures = 0, membership_failures = 0, membership_checks = 0;
    const int subsamples = 500;
    for (int i = 0; i < subsamples; ++i) {
        const ColoredDigraph& g = instances[i % instances.size()].graph;
        std::vector<std::string> subset;
        for (const auto& id : g.vertex_ids())
            if (rng() % 2 == 0) subset.push_back(id);
        ColoredDigraph sub = g.induced_subdigraph(subset);
        if (!is_2qbmg(sub, /*first_only=*/true).pass()) ++axiom_failures;
        if (membership_checks < 100) {
            UndirectedGraph under = sub.underlying();
            if (under.edge_count() <= 12) {
                ++membership_checks;
                if (!is_un2qbmg(under).value) ++membership_failures;
            }
        }
    }
    std::ostringstream detail;
    detail << subsamples << " subdigraphs, " << axiom_failures << " axiom failures, "
           << membership_checks << " membership checks, " << membership_failures
           << " membership failures";
    report(5, "induced subdigraphs stay 2qBMGs and their underlying graphs stay un2qBMGs",
           axiom_failures == 0 && membership_failures == 0 && membership_checks == 100,
           detail.str());
}

void criterion_6_decomposition(const std::vector<Instance>& instances) {
    int failures_here = 0;
    for (const auto& inst : instances) {
        auto ks = ks_decomposition(inst.graph.underlying());
        if (!ks || !validate_ks(inst.graph.underlying(), *ks)) ++failures_here;
    }
    auto p5 = ks_decomposition(path_graph(5));
    bool p5_ok = p5 && p5->biclique == std::vector<std::string>{"v2", "v3", "v4"} &&
                 p5->stable == std::vector<std::string>{"v1", "v5"};
    std::ostringstream detail;
    detail << instances.size() << " instances, " << failures_here << " failures, P5 K/S "
           << (p5_ok ? "exact" : "WRONG");
    report(6, "every generated 2qBMG has a validated dominating biclique decomposition",
           failures_here == 0 && p5_ok, detail.str());
}

// Criterion 7 asserts two classical-looking claims and is expected to stay
// red: both are falsified by concrete 2qBMGs that random generation
// produces. A fully symmetric K_{2,2} (the BMG of two monochromatic
// cherries) can be oriented into a directed 4-cycle, so not every
// orientation of a 2qBMG is acyclic; and a qBMG with a color sink can
// satisfy (*) while both choices for its single symmetric pair create a new
// vertex equivalence, so (*) does not guarantee a consistent orientation
// outside the color-sink-free class. The criterion is kept as the boundary
// marker; the [note] lines verify the corrected statements the pipeline
// actually relies on: consistent orientations are always acyclic, and on
// color-sink-free inputs (*) does guarantee the full pipeline.
void criterion_7_orientation_properties(const std::vector<Instance>& instances) {
    long orientations_checked = 0, cyclic_orientations = 0;
    long consistent_orientations = 0, consistent_cyclic = 0;
    int star_instances = 0, star_without_orientation = 0, pipeline_failures = 0;
    int sink_free_star = 0, sink_free_failures = 0;

    for (const auto& inst : instances) {
        const ColoredDigraph& g = inst.graph;
        auto pairs = symmetric_pairs(g);
        if (pairs.size() <= 6) {
            std::set<Arc> all_arcs;
            for (const auto& a : g.arcs()) all_arcs.insert(a);
            auto base = g.equivalence_classes();
            for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
                std::set<Arc> arcs = all_arcs;
                for (std::size_t p = 0; p < pairs.size(); ++p) {
                    if ((mask >> p) & 1)
                        arcs.erase({pairs[p].first, pairs[p].second});
                    else
                        arcs.erase({pairs[p].second, pairs[p].first});
                }
                auto oriented = ColoredDigraph::make(
                    g.colored_vertices(), std::vector<Arc>(arcs.begin(), arcs.end()));
                ++orientations_checked;
                bool acyclic = topological_order(oriented).has_value();
                if (!acyclic) ++cyclic_orientations;
                if (base.same_partition(oriented.equivalence_classes())) {
                    ++consistent_orientations;
                    if (!acyclic) ++consistent_cyclic;
                }
            }
        }
        if (check_star_condition(g)) {
            ++star_instances;
            bool sink_free = is_color_sink_free(g);
            if (sink_free) ++sink_free_star;
            auto result = dominating_biclique_pipeline(g);
            if (!result) {
                ++star_without_orientation;
                if (sink_free) ++sink_free_failures;
                continue;
            }
            bool certified =
                validate_ks(g.underlying(), {result->biclique, result->stable}) &&
                topological_order(
                    result->orientation.oriented().induced_subdigraph(result->biclique))
                    .has_value() &&
                g.equivalence_classes().same_partition(
                    result->orientation.oriented().equivalence_classes());
            if (!certified) {
                ++pipeline_failures;
                if (sink_free) ++sink_free_failures;
            }
        }
    }

    std::ostringstream detail;
    detail << orientations_checked << " orientations, " << cyclic_orientations << " cyclic; "
           << star_instances << " (*)-instances, " << star_without_orientation
           << " without a consistent orientation, " << pipeline_failures
           << " uncertified pipelines";
    report(7, "orientations are acyclic and (*) guarantees the dominating biclique pipeline",
           cyclic_orientations == 0 && star_without_orientation == 0 && pipeline_failures == 0 &&
               star_instances > 0,
           detail.str());
    std::cout << "  [note] consistent orientations acyclic: " << consistent_cyclic
              << " cyclic of " << consistent_orientations << " -> "
              << (consistent_cyclic == 0 ? "holds" : "VIOLATED") << '\n';
    std::cout << "  [note] color-sink-free (*) instances pipeline: " << sink_free_failures
              << " failures of " << sink_free_star << " -> "
              << (sink_free_failures == 0 ? "holds" : "VIOLATED") << '\n';
}

void criterion_8_oracle_agreement(const std::vector<Instance>& instances) {
    std::mt19937_64 rng(80808);
    int axiom_disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        ColoredDigraph g = random_digraph(rng, 9);
        if (check_n1(g).empty() != check_n1_set_form(g).empty()) ++axiom_disagreements;
        if (check_n2(g).empty() != check_n2_set_form(g).empty()) ++axiom_disagreements;
    }

    // corpus: named families, random bipartite graphs, generated underlying
    // graphs; everything at <= 10 vertices
    std::vector<UndirectedGraph> corpus;
    for (int k = 2; k <= 8; ++k) corpus.push_back(path_graph(k));
    for (int k = 4; k <= 10; k += 2) corpus.push_back(cycle_graph(k));
    corpus.push_back(sunlet4_graph());
    for (int i = 0; i < 150; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<std::pair<std::string, int>> vs;
        for (int v = 0; v < n; ++v)
            vs.emplace_back("v" + std::to_string(v + 1), static_cast<int>(rng() % 2));
        std::vector<Edge> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (vs[a].second != vs[b].second && rng() % 100 < 40)
                    es.emplace_back(vs[a].first, vs[b].first);
        corpus.push_back(UndirectedGraph::make(vs, es));
    }
    int taken = 0;
    for (const auto& inst : instances) {
        if (inst.graph.size() > 10) continue;
        corpus.push_back(inst.graph.underlying());
        if (++taken == 100) break;
    }

    int search_disagreements = 0;
    for (const auto& g : corpus) {
        for (int k = 2; k <= std::min(g.size(), 8); ++k)
            if (find_induced_path(g, k).has_value() !=
                find_induced_path_bruteforce(g, k).has_value())
                ++search_disagreements;
        for (int k = 4; k <= g.size(); ++k)
            if (find_induced_cycle(g, k).has_value() !=
                find_induced_cycle_bruteforce(g, k).has_value())
                ++search_disagreements;
    }

    std::ostringstream detail;
    detail << "10000 digraphs, " << axiom_disagreements << " axiom-form disagreements; "
           << corpus.size() << " corpus graphs, " << search_disagreements
           << " search disagreements";
    report(8, "witness/set forms and DFS/subset oracles agree",
           axiom_disagreements == 0 && search_disagreements == 0, detail.str());
}

}  // namespace

int main() {
    criterion_1_classification_counts();
    criterion_2_forbidden_graphs();

    auto build_start = Clock::now();
    std::vector<Instance> instances = generate_instances(1000, 20240901);
    double build_seconds = seconds_since(build_start);

    criterion_3_construction_soundness(instances, build_seconds);
    criterion_4_underlying_properties(instances);
    criterion_5_hereditary_closure(instances);
    criterion_6_decomposition(instances);
    criterion_7_orientation_properties(instances);
    criterion_8_oracle_agreement(instances);

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
