#ifndef QBMG_RANDOM_GEN_HPP
#define QBMG_RANDOM_GEN_HPP

#include <random>

#include "qbmg/colored_digraph.hpp"
#include "qbmg/phylo_tree.hpp"

namespace qbmg {

// Uniform recursive splitting of a leaf set; leaf colors A/B with a bias
// redrawn per tree, both colors always present for >= 2 leaves.
PhyloTree random_tree(std::mt19937_64& rng, int min_leaves = 2, int max_leaves = 16);

// Samples a node uniformly along each root-to-leaf path for the cross
// color; identity on the leaf's own color.
TruncationMap random_truncation_map(std::mt19937_64& rng, const PhyloTree& t);

// General random digraph (coloring may be improper); exercises the
// recognition checks outside the 2qBMG class.
ColoredDigraph random_digraph(std::mt19937_64& rng, int max_vertices = 9);

}  // namespace qbmg

#endif
