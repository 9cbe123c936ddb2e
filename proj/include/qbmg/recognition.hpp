#ifndef QBMG_RECOGNITION_HPP
#define QBMG_RECOGNITION_HPP

#include <string>
#include <vector>

#include "qbmg/colored_digraph.hpp"

namespace qbmg {

// Four pairwise distinct vertices with arcs u->t, v->w, t->w and no arc
// between u and v in either direction.
struct N1Witness {
    std::string u, t, w, v;
    bool operator==(const N1Witness&) const = default;
};

// Chain u->v->w->t whose closing arc (u,t) is missing. The four vertices
// need not be distinct (a directed 4-cycle yields t == u).
struct N2Witness {
    std::string u, v, w, t;
    bool operator==(const N2Witness&) const = default;
};

// Unordered pair (u < v) with overlapping but incomparable out-neighborhoods.
struct N3Witness {
    std::string u, v;
    bool operator==(const N3Witness&) const = default;
};

struct AxiomReport {
    std::vector<N1Witness> n1;
    std::vector<N2Witness> n2;
    std::vector<N3Witness> n3;

    bool pass() const { return n1.empty() && n2.empty() && n3.empty(); }
    // One line per witness: "N1 [u,t,w,v]" / "N2 (u,v,w,t)" / "N3 {u,v}".
    std::string render() const;
    std::string render_tsv() const;
};

// Witness scans, in lexicographic order of the reported vertex tuple.
std::vector<N1Witness> check_n1(const ColoredDigraph& g, bool first_only = false);
std::vector<N2Witness> check_n2(const ColoredDigraph& g, bool first_only = false);
std::vector<N3Witness> check_n3(const ColoredDigraph& g, bool first_only = false);

// Set formulations, kept as an independent route and cross-checked against
// the witness scans: a violation exists iff a witness exists.
// N+(u) n N+(N+(v)) = N+(v) n N+(N+(u)) = {} for mutually independent u, v.
std::vector<N3Witness> check_n1_set_form(const ColoredDigraph& g);
// N+(N+(N+(u))) subset of N+(u).
std::vector<std::string> check_n2_set_form(const ColoredDigraph& g);

// All three axioms; throws std::invalid_argument on an improper coloring.
AxiomReport is_2qbmg(const ColoredDigraph& g, bool first_only = false);

// Every vertex has a nonempty out-neighborhood.
bool is_color_sink_free(const ColoredDigraph& g);

}  // namespace qbmg

#endif
