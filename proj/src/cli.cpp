#include "qbmg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "qbmg/enumeration.hpp"
#include "qbmg/errors.hpp"
#include "qbmg/forbidden.hpp"
#include "qbmg/io.hpp"
#include "qbmg/orientation.hpp"
#include "qbmg/phylo_tree.hpp"
#include "qbmg/recognition.hpp"

namespace qbmg {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string join(const std::vector<std::string>& ids, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << sep;
        os << ids[i];
    }
    return os.str();
}

int cmd_check(const std::string& path, bool first_only, bool tsv, std::ostream& out) {
    auto g = load_digraph(path);
    AxiomReport report = is_2qbmg(g, first_only);
    out << (tsv ? report.render_tsv() : report.render());
    out << "2qBMG: " << (report.pass() ? "pass" : "fail") << '\n';
    return report.pass() ? 0 : 1;
}

int cmd_build(const std::string& tree_path, const std::string& trunc_path, bool bmg,
              std::ostream& out) {
    PhyloTree tree = load_tree(tree_path);
    ColoredDigraph g = bmg || trunc_path.empty()
                           ? (bmg ? build_bmg(tree)
                                  : build_qbmg(tree, TruncationMap::all_root(tree)))
                           : build_qbmg(tree, load_truncation(tree, trunc_path));
    out << render_digraph(g);
    return 0;
}

int cmd_forbidden(const std::string& path, bool tsv, std::ostream& out) {
    auto g = load_undirected(path);
    ForbiddenReport report = forbidden_report(g);
    out << (tsv ? report.render_tsv() : report.render());
    return report.any_forbidden() ? 1 : 0;
}

void print_ks(const KSDecomposition& ks, bool tsv, std::ostream& out) {
    auto line = [&](const char* name, const std::vector<std::string>& ids) {
        out << name;
        for (const auto& id : ids) out << (tsv ? '\t' : ' ') << id;
        out << '\n';
    };
    line(tsv ? "K" : "K:", ks.biclique);
    line(tsv ? "S" : "S:", ks.stable);
}

int cmd_decompose(const std::string& path, bool tsv, std::ostream& out) {
    if (ends_with(path, ".qdg")) {
        auto g = load_digraph(path);
        auto result = dominating_biclique_pipeline(g);
        if (!result) {
            out << "no consistent orientation exists\n";
            return 1;
        }
        print_ks(KSDecomposition{result->biclique, result->stable}, tsv, out);
        for (const auto& [u, v] : result->orientation.kept_arcs)
            out << (tsv ? "a\t" + u + "\t" + v : "a " + u + " " + v) << '\n';
        out << (tsv ? "biclique-order\t" + join(result->biclique_topo_order, "\t")
                    : "biclique-order: " + join(result->biclique_topo_order))
            << '\n';
        return 0;
    }
    auto g = load_undirected(path);
    auto ks = ks_decomposition(g);
    if (!ks) {
        out << "no dominating biclique decomposition exists\n";
        return 1;
    }
    print_ks(*ks, tsv, out);
    return 0;
}

int cmd_orient(const std::string& path, std::ostream& out) {
    auto g = load_digraph(path);
    auto orientation = consistent_orientation(g);
    if (!orientation) {
        out << "no consistent orientation exists\n";
        return 1;
    }
    out << render_digraph(orientation->oriented());
    return 0;
}

int cmd_enumerate(const std::string& path, IsoMode mode, bool tsv, std::ostream& out) {
    auto g = load_undirected(path);
    EnumerationResult result = enumerate_2qbmgs(g, mode);
    const char sep = tsv ? '\t' : ' ';
    out << "assignments:" << sep << result.assignments << '\n';
    out << "passing:" << sep << result.passing << '\n';
    out << "classes:" << sep << result.representatives.size() << '\n';
    for (std::size_t i = 0; i < result.representatives.size(); ++i) {
        std::vector<std::string> arcs;
        for (const auto& [u, v] : result.representatives[i].arcs()) arcs.push_back(u + ">" + v);
        out << "class" << sep << i + 1 << sep << join(arcs, tsv ? "\t" : " ") << '\n';
    }
    return 0;
}

int cmd_is_un2qbmg(const std::string& path, std::ostream& out) {
    auto g = load_undirected(path);
    Un2qbmgResult r = is_un2qbmg(g);
    if (r.value) {
        out << "un2qBMG (passing assignment " << r.assignments_examined << " of "
            << r.assignments_total << ")\n";
        return 0;
    }
    out << "not an un2qBMG (" << r.assignments_total << " assignments, 0 pass)\n";
    return 1;
}

int cmd_verify_paper(bool tsv, std::ostream& out) {
    PaperClaimsReport report = verify_paper_claims();
    out << (tsv ? report.render_tsv() : report.render());
    return report.all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-colored quasi-best match graph toolkit"};
    app.require_subcommand(1);

    std::string path, trunc_path;
    bool first_only = false, tsv = false;
    std::string mode_name = "swap";

    auto* check = app.add_subcommand("check", "test the (N1)/(N2)/(N3) neighborhood axioms");
    check->add_option("file", path, ".qdg digraph")->required();
    check->add_flag("--first", first_only, "stop at the first witness per axiom");
    check->add_flag("--tsv", tsv, "tab-separated output");

    auto* bq = app.add_subcommand("build-qbmg", "build the qBMG of a tree and truncation map");
    bq->add_option("tree", path, "Newick-like tree file")->required();
    bq->add_option("--truncation", trunc_path, "truncation map file (default: all-root)");

    auto* bb = app.add_subcommand("build-bmg", "build the BMG of a tree");
    bb->add_option("tree", path, "Newick-like tree file")->required();

    auto* forb = app.add_subcommand("forbidden", "search induced P6, C6 and Sunlet4");
    forb->add_option("file", path, ".udg graph")->required();
    forb->add_flag("--tsv", tsv, "tab-separated output");

    auto* dec = app.add_subcommand(
        "decompose", "dominating biclique K + stable S (.udg), full pipeline on .qdg");
    dec->add_option("file", path, ".udg or .qdg file")->required();
    dec->add_flag("--tsv", tsv, "tab-separated output");

    auto* ori = app.add_subcommand("orient", "consistent orientation of a digraph");
    ori->add_option("file", path, ".qdg digraph")->required();

    auto* en = app.add_subcommand("enumerate", "all 2qBMGs over an underlying graph");
    en->add_option("file", path, ".udg graph")->required();
    en->add_option("--mode", mode_name, "isomorphism mode: preserving|swap (default swap)")
        ->check(CLI::IsMember({"preserving", "swap"}));
    en->add_flag("--tsv", tsv, "tab-separated output");

    auto* un = app.add_subcommand("is-un2qbmg", "does any arc assignment satisfy the axioms");
    un->add_option("file", path, ".udg graph")->required();

    auto* vp = app.add_subcommand("verify-paper", "re-derive the small-case classification counts");
    vp->add_flag("--tsv", tsv, "tab-separated output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const IsoMode mode =
        mode_name == "preserving" ? IsoMode::color_preserving : IsoMode::color_swap_allowed;
    try {
        if (check->parsed()) return cmd_check(path, first_only, tsv, out);
        if (bq->parsed()) return cmd_build(path, trunc_path, false, out);
        if (bb->parsed()) return cmd_build(path, "", true, out);
        if (forb->parsed()) return cmd_forbidden(path, tsv, out);
        if (dec->parsed()) return cmd_decompose(path, tsv, out);
        if (ori->parsed()) return cmd_orient(path, out);
        if (en->parsed()) return cmd_enumerate(path, mode, tsv, out);
        if (un->parsed()) return cmd_is_un2qbmg(path, out);
        if (vp->parsed()) return cmd_verify_paper(tsv, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace qbmg
