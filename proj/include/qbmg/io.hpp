#ifndef QBMG_IO_HPP
#define QBMG_IO_HPP

#include <iosfwd>
#include <string>

#include "qbmg/colored_digraph.hpp"
#include "qbmg/phylo_tree.hpp"
#include "qbmg/undirected_graph.hpp"

namespace qbmg {

// .qdg: lines "v <id> <0|1>" then "a <src> <dst>"; '#' starts a comment.
// Unknown directives, duplicates, self-loops, and undeclared ids are
// parse errors. Arcs inside a color class are accepted (general digraphs
// parse; operations that need a proper coloring reject them later).
ColoredDigraph parse_digraph(std::istream& in);
ColoredDigraph parse_digraph_text(const std::string& text);

// .udg: "v <id> <0|1>" then "e <u> <v>"; same rules, but same-color edges
// are parse errors.
UndirectedGraph parse_undirected(std::istream& in);
UndirectedGraph parse_undirected_text(const std::string& text);

PhyloTree parse_tree(std::istream& in);  // Newick-like, '#' comments

std::string render_digraph(const ColoredDigraph& g);
std::string render_undirected(const UndirectedGraph& g);

ColoredDigraph load_digraph(const std::string& path);
UndirectedGraph load_undirected(const std::string& path);
PhyloTree load_tree(const std::string& path);
TruncationMap load_truncation(const PhyloTree& t, const std::string& path);

}  // namespace qbmg

#endif
