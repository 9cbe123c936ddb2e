#include "qbmg/isomorphism.hpp"

#include <algorithm>

#include "qbmg/errors.hpp"

namespace qbmg {

const char* to_string(IsoMode mode) {
    return mode == IsoMode::color_preserving ? "color-preserving" : "color-swap-allowed";
}

namespace {

// Tries every bijection mapping class0(a)->class0(b), class1(a)->class1(b)
// under the optional swap of b's classes.
bool search(const ColoredDigraph& a, const ColoredDigraph& b, bool swap) {
    std::vector<int> src[2], dst[2];
    for (int v = 0; v < a.size(); ++v) src[a.color(v)].push_back(v);
    for (int v = 0; v < b.size(); ++v) dst[b.color(v) ^ (swap ? 1 : 0)].push_back(v);
    if (src[0].size() != dst[0].size() || src[1].size() != dst[1].size()) return false;

    std::vector<int> map0 = dst[0], map1 = dst[1];
    std::sort(map0.begin(), map0.end());
    std::sort(map1.begin(), map1.end());
    std::vector<int> f(a.size(), -1);

    do {
        do {
            for (std::size_t i = 0; i < src[0].size(); ++i) f[src[0][i]] = map0[i];
            for (std::size_t i = 0; i < src[1].size(); ++i) f[src[1][i]] = map1[i];
            bool ok = true;
            for (int u = 0; u < a.size() && ok; ++u)
                for (int v = 0; v < a.size(); ++v) {
                    if (u == v) continue;
                    if (a.has_arc(u, v) != b.has_arc(f[u], f[v])) {
                        ok = false;
                        break;
                    }
                }
            if (ok) return true;
        } while (std::next_permutation(map1.begin(), map1.end()));
    } while (std::next_permutation(map0.begin(), map0.end()));
    return false;
}

}  // namespace

bool are_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b, IsoMode mode) {
    if (a.size() > kIsomorphismVertexGuard || b.size() > kIsomorphismVertexGuard)
        throw guard_error("isomorphism search limited to " +
                          std::to_string(kIsomorphismVertexGuard) + " vertices, got " +
                          std::to_string(std::max(a.size(), b.size())));
    if (a.size() != b.size() || a.arc_count() != b.arc_count()) return false;
    if (search(a, b, false)) return true;
    return mode == IsoMode::color_swap_allowed && search(a, b, true);
}

}  // namespace qbmg
