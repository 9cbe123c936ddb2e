#include "qbmg/forbidden.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbmg {

namespace {

std::vector<std::string> to_ids(const UndirectedGraph& g, const std::vector<int>& seq) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (int v : seq) out.push_back(g.id_of(v));
    return out;
}

// Extends an induced path: the candidate may touch only the current tail.
bool extend_path(const UndirectedGraph& g, std::vector<int>& path, int k) {
    if (static_cast<int>(path.size()) == k) return true;
    for (int w : g.neighbors(path.back())) {
        bool ok = std::find(path.begin(), path.end(), w) == path.end();
        for (std::size_t j = 0; ok && j + 1 < path.size(); ++j)
            if (g.has_edge(w, path[j])) ok = false;
        if (!ok) continue;
        path.push_back(w);
        if (extend_path(g, path, k)) return true;
        path.pop_back();
    }
    return false;
}

// Extends an induced cycle anchored at path[0], its smallest vertex. The
// closing vertex must touch exactly the tail and the anchor.
bool extend_cycle(const UndirectedGraph& g, std::vector<int>& path, int k) {
    const int m = static_cast<int>(path.size());
    const bool closing = m == k - 1;
    for (int w : g.neighbors(path.back())) {
        if (w <= path[0]) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        bool ok = closing ? g.has_edge(w, path[0]) : (m == 1 || !g.has_edge(w, path[0]));
        for (int j = 1; ok && j + 1 < m; ++j)
            if (g.has_edge(w, path[j])) ok = false;
        if (!ok) continue;
        path.push_back(w);
        if (closing || extend_cycle(g, path, k)) return true;
        path.pop_back();
    }
    return false;
}

// The subset, as a graph by itself, is a path: walk it to recover the order.
std::optional<std::vector<int>> subset_as_path(const UndirectedGraph& g,
                                               const std::vector<int>& subset) {
    auto degree = [&](int v) {
        int d = 0;
        for (int w : subset)
            if (w != v && g.has_edge(v, w)) ++d;
        return d;
    };
    if (subset.size() == 1) return subset;
    int endpoints = 0, start = -1;
    for (int v : subset) {
        int d = degree(v);
        if (d == 0 || d > 2) return std::nullopt;
        if (d == 1) {
            ++endpoints;
            if (start == -1) start = v;
        }
    }
    if (endpoints != 2) return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (order.size() < subset.size()) {
        int next = -1;
        for (int w : subset)
            if (w != prev && w != cur && g.has_edge(cur, w)) {
                if (next != -1) return std::nullopt;
                next = w;
            }
        if (next == -1) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<std::vector<int>> subset_as_cycle(const UndirectedGraph& g,
                                                const std::vector<int>& subset) {
    auto degree = [&](int v) {
        int d = 0;
        for (int w : subset)
            if (w != v && g.has_edge(v, w)) ++d;
        return d;
    };
    for (int v : subset)
        if (degree(v) != 2) return std::nullopt;
    int start = *std::min_element(subset.begin(), subset.end());
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : subset)
            if (w != prev && g.has_edge(cur, w)) {
                next = w;
                break;
            }
        if (next == start) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order.size() == subset.size() ? std::optional(order) : std::nullopt;
}

template <typename Check>
std::optional<std::vector<int>> scan_subsets(const UndirectedGraph& g, int k, Check check) {
    const int n = g.size();
    if (k > n) return std::nullopt;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        if (auto hit = check(subset)) return hit;
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace

bool induces_exact_path(const UndirectedGraph& g, const std::vector<std::string>& seq) {
    if (seq.size() < 2) return false;
    std::vector<int> idx;
    for (const auto& id : seq) idx.push_back(g.index_of(id));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            bool expect = j == i + 1;
            if (g.has_edge(idx[i], idx[j]) != expect) return false;
        }
    return true;
}

bool induces_exact_cycle(const UndirectedGraph& g, const std::vector<std::string>& seq) {
    const std::size_t k = seq.size();
    if (k < 4) return false;
    std::vector<int> idx;
    for (const auto& id : seq) idx.push_back(g.index_of(id));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool expect = j == i + 1 || (i == 0 && j == k - 1);
            if (g.has_edge(idx[i], idx[j]) != expect) return false;
        }
    return true;
}

bool induces_exact_sunlet4(const UndirectedGraph& g, const std::vector<std::string>& seq) {
    if (seq.size() != 8) return false;
    std::vector<int> idx;
    for (const auto& id : seq) idx.push_back(g.index_of(id));
    auto expect_edge = [&](std::size_t i, std::size_t j) {
        if (i < 4 && j < 4) return (j == i + 1) || (i == 0 && j == 3);
        if (i < 4 && j >= 4) return j == i + 4;
        return false;  // pendants pairwise non-adjacent
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            if (g.has_edge(idx[i], idx[j]) != expect_edge(i, j)) return false;
    return true;
}

std::optional<std::vector<std::string>> find_induced_path(const UndirectedGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("induced path search needs k >= 2");
    if (k > g.size()) return std::nullopt;
    for (int s = 0; s < g.size(); ++s) {
        std::vector<int> path{s};
        if (extend_path(g, path, k)) {
            auto ids = to_ids(g, path);
            if (!induces_exact_path(g, ids))
                throw std::logic_error("induced path witness failed re-induction");
            return ids;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::string>> find_induced_cycle(const UndirectedGraph& g, int k) {
    if (k < 4) throw std::invalid_argument("induced cycle search needs k >= 4");
    if (k > g.size()) return std::nullopt;
    for (int s = 0; s < g.size(); ++s) {
        std::vector<int> path{s};
        if (extend_cycle(g, path, k)) {
            auto ids = to_ids(g, path);
            if (!induces_exact_cycle(g, ids))
                throw std::logic_error("induced cycle witness failed re-induction");
            return ids;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::string>> find_induced_path_bruteforce(const UndirectedGraph& g,
                                                                     int k) {
    if (k < 2) throw std::invalid_argument("induced path search needs k >= 2");
    auto hit = scan_subsets(g, k, [&](const std::vector<int>& subset) {
        return subset_as_path(g, subset);
    });
    if (!hit) return std::nullopt;
    return to_ids(g, *hit);
}

std::optional<std::vector<std::string>> find_induced_cycle_bruteforce(const UndirectedGraph& g,
                                                                      int k) {
    if (k < 4) throw std::invalid_argument("induced cycle search needs k >= 4");
    auto hit = scan_subsets(g, k, [&](const std::vector<int>& subset) {
        return subset_as_cycle(g, subset);
    });
    if (!hit) return std::nullopt;
    return to_ids(g, *hit);
}

bool is_chordal_bipartite(const UndirectedGraph& g) {
    if (!g.is_bipartite()) return false;
    for (int k = 6; k <= g.size(); k += 2)
        if (find_induced_cycle(g, k)) return false;
    return true;
}

std::optional<std::vector<std::string>> find_sunlet4(const UndirectedGraph& g) {
    const int n = g.size();
    if (n < 8) return std::nullopt;
    for (int c0 = 0; c0 < n; ++c0)
        for (int c1 : g.neighbors(c0)) {
            if (c1 <= c0) continue;
            for (int c3 : g.neighbors(c0)) {
                if (c3 <= c1) continue;
                for (int c2 : g.neighbors(c1)) {
                    if (c2 <= c0 || c2 == c1 || c2 == c3) continue;
                    if (!g.has_edge(c2, c3)) continue;
                    if (g.has_edge(c0, c2) || g.has_edge(c1, c3)) continue;
                    const int cyc[4] = {c0, c1, c2, c3};
                    // pendant candidates per cycle vertex
                    std::vector<int> cand[4];
                    for (int i = 0; i < 4; ++i)
                        for (int p : g.neighbors(cyc[i])) {
                            bool ok = p != c0 && p != c1 && p != c2 && p != c3;
                            for (int j = 0; ok && j < 4; ++j)
                                if (j != i && g.has_edge(p, cyc[j])) ok = false;
                            if (ok) cand[i].push_back(p);
                        }
                    for (int p0 : cand[0])
                        for (int p1 : cand[1]) {
                            if (p1 == p0 || g.has_edge(p0, p1)) continue;
                            for (int p2 : cand[2]) {
                                if (p2 == p0 || p2 == p1 || g.has_edge(p2, p0) ||
                                    g.has_edge(p2, p1))
                                    continue;
                                for (int p3 : cand[3]) {
                                    if (p3 == p0 || p3 == p1 || p3 == p2 || g.has_edge(p3, p0) ||
                                        g.has_edge(p3, p1) || g.has_edge(p3, p2))
                                        continue;
                                    auto ids = to_ids(g, {c0, c1, c2, c3, p0, p1, p2, p3});
                                    if (!induces_exact_sunlet4(g, ids))
                                        throw std::logic_error(
                                            "sunlet witness failed re-induction");
                                    return ids;
                                }
                            }
                        }
                }
            }
        }
    return std::nullopt;
}

ForbiddenReport forbidden_report(const UndirectedGraph& g) {
    ForbiddenReport r;
    r.p6 = find_induced_path(g, 6);
    r.c6 = find_induced_cycle(g, 6);
    r.sunlet4 = find_sunlet4(g);
    r.chordal_bipartite = is_chordal_bipartite(g);
    int longest = g.size() > 0 ? 1 : 0;
    for (int k = 2; k <= std::min(g.size(), 12); ++k) {
        if (!find_induced_path(g, k)) break;
        longest = k;
    }
    r.longest_induced_path = longest;
    return r;
}

namespace {

std::string join(const std::vector<std::string>& ids, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << sep;
        os << ids[i];
    }
    return os.str();
}

}  // namespace

std::string ForbiddenReport::render() const {
    std::ostringstream os;
    os << "P6: " << (p6 ? join(*p6, " ") : "none") << '\n';
    os << "C6: " << (c6 ? join(*c6, " ") : "none") << '\n';
    os << "Sunlet4: " << (sunlet4 ? join(*sunlet4, " ") : "none") << '\n';
    os << "chordal-bipartite: " << (chordal_bipartite ? "yes" : "no") << '\n';
    os << "longest-induced-path: " << longest_induced_path << '\n';
    return os.str();
}

std::string ForbiddenReport::render_tsv() const {
    std::ostringstream os;
    os << "p6\t" << (p6 ? join(*p6, "\t") : "none") << '\n';
    os << "c6\t" << (c6 ? join(*c6, "\t") : "none") << '\n';
    os << "sunlet4\t" << (sunlet4 ? join(*sunlet4, "\t") : "none") << '\n';
    os << "chordal_bipartite\t" << (chordal_bipartite ? "1" : "0") << '\n';
    os << "longest_induced_path\t" << longest_induced_path << '\n';
    return os.str();
}

}  // namespace qbmg
