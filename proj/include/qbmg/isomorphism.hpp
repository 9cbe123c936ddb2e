#ifndef QBMG_ISOMORPHISM_HPP
#define QBMG_ISOMORPHISM_HPP

#include "qbmg/colored_digraph.hpp"

namespace qbmg {

enum class IsoMode {
    color_preserving,    // bijection must preserve vertex colors
    color_swap_allowed,  // the global color swap may be composed in
};

inline constexpr int kIsomorphismVertexGuard = 10;

const char* to_string(IsoMode mode);

// Arc-preserving and arc-reflecting bijection search, restricted to maps
// between color classes (or swapped classes). Exhaustive; throws
// guard_error above kIsomorphismVertexGuard vertices.
bool are_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b, IsoMode mode);

}  // namespace qbmg

#endif
