#ifndef QBMG_FAMILIES_HPP
#define QBMG_FAMILIES_HPP

#include "qbmg/undirected_graph.hpp"

namespace qbmg {

// Named small graphs with alternating colorings on vertices v1..vk.

UndirectedGraph path_graph(int k);
UndirectedGraph cycle_graph(int k);  // k even
// 4-cycle v1..v4 with pendants v5..v8, pendant vi+4 attached to vi.
UndirectedGraph sunlet4_graph();

}  // namespace qbmg

#endif
