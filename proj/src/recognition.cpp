#include "qbmg/recognition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qbmg {

std::string AxiomReport::render() const {
    std::ostringstream os;
    for (const auto& w : n1) os << "N1 [" << w.u << "," << w.t << "," << w.w << "," << w.v << "]\n";
    for (const auto& w : n2) os << "N2 (" << w.u << "," << w.v << "," << w.w << "," << w.t << ")\n";
    for (const auto& w : n3) os << "N3 {" << w.u << "," << w.v << "}\n";
    return os.str();
}

std::string AxiomReport::render_tsv() const {
    std::ostringstream os;
    for (const auto& w : n1) os << "N1\t" << w.u << "\t" << w.t << "\t" << w.w << "\t" << w.v << "\n";
    for (const auto& w : n2) os << "N2\t" << w.u << "\t" << w.v << "\t" << w.w << "\t" << w.t << "\n";
    for (const auto& w : n3) os << "N3\t" << w.u << "\t" << w.v << "\n";
    return os.str();
}

std::vector<N1Witness> check_n1(const ColoredDigraph& g, bool first_only) {
    std::vector<N1Witness> out;
    const int n = g.size();
    for (int u = 0; u < n; ++u)
        for (int t = 0; t < n; ++t) {
            if (t == u || !g.has_arc(u, t)) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == t || !g.has_arc(t, w)) continue;
                for (int v = 0; v < n; ++v) {
                    if (v == u || v == t || v == w) continue;
                    if (!g.has_arc(v, w)) continue;
                    if (g.has_arc(u, v) || g.has_arc(v, u)) continue;
                    out.push_back({g.id_of(u), g.id_of(t), g.id_of(w), g.id_of(v)});
                    if (first_only) return out;
                }
            }
        }
    return out;
}

std::vector<N2Witness> check_n2(const ColoredDigraph& g, bool first_only) {
    std::vector<N2Witness> out;
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.out_neighbors(u))
            for (int w : g.out_neighbors(v))
                for (int t : g.out_neighbors(w)) {
                    if (t != u && g.has_arc(u, t)) continue;
                    out.push_back({g.id_of(u), g.id_of(v), g.id_of(w), g.id_of(t)});
                    if (first_only) return out;
                }
    return out;
}

std::vector<N3Witness> check_n3(const ColoredDigraph& g, bool first_only) {
    std::vector<N3Witness> out;
    const int n = g.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = g.out_neighbors(u);
            const auto& b = g.out_neighbors(v);
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
            bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
            if (a_in_b || b_in_a) continue;
            out.push_back({g.id_of(u), g.id_of(v)});
            if (first_only) return out;
        }
    return out;
}

namespace {

std::set<int> out_of_set(const ColoredDigraph& g, const std::set<int>& s) {
    std::set<int> result;
    for (int v : s)
        for (int w : g.out_neighbors(v)) result.insert(w);
    return result;
}

}  // namespace

std::vector<N3Witness> check_n1_set_form(const ColoredDigraph& g) {
    std::vector<N3Witness> out;
    const int n = g.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_arc(u, v) || g.has_arc(v, u)) continue;
            std::set<int> nu(g.out_neighbors(u).begin(), g.out_neighbors(u).end());
            std::set<int> nv(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
            std::set<int> nnu = out_of_set(g, nu);
            std::set<int> nnv = out_of_set(g, nv);
            bool hit = std::any_of(nu.begin(), nu.end(), [&](int w) { return nnv.count(w); }) ||
                       std::any_of(nv.begin(), nv.end(), [&](int w) { return nnu.count(w); });
            if (hit) out.push_back({g.id_of(u), g.id_of(v)});
        }
    return out;
}

std::vector<std::string> check_n2_set_form(const ColoredDigraph& g) {
    std::vector<std::string> out;
    for (int u = 0; u < g.size(); ++u) {
        std::set<int> s1(g.out_neighbors(u).begin(), g.out_neighbors(u).end());
        std::set<int> s3 = out_of_set(g, out_of_set(g, s1));
        if (!std::includes(s1.begin(), s1.end(), s3.begin(), s3.end()))
            out.push_back(g.id_of(u));
    }
    return out;
}

AxiomReport is_2qbmg(const ColoredDigraph& g, bool first_only) {
    if (!g.properly_colored())
        throw std::invalid_argument("digraph is not properly two-colored");
    AxiomReport report;
    report.n1 = check_n1(g, first_only);
    report.n2 = check_n2(g, first_only);
    report.n3 = check_n3(g, first_only);
    return report;
}

bool is_color_sink_free(const ColoredDigraph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.out_neighbors(v).empty()) return false;
    return true;
}

}  // namespace qbmg
