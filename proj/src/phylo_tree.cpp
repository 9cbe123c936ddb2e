#include "qbmg/phylo_tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qbmg/errors.hpp"

namespace qbmg {

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
           c == '+';
}

struct NewickParser {
    const std::string& text;
    std::size_t pos = 0;
    std::vector<PhyloTree::Node> nodes;

    explicit NewickParser(const std::string& t) : text(t) {}

    int line_at(std::size_t p) const {
        return 1 + static_cast<int>(std::count(text.begin(), text.begin() + p, '\n'));
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line_at(pos)); }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string name() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && name_char(text[pos])) ++pos;
        if (pos == start) fail("expected a name");
        return text.substr(start, pos - start);
    }

    // element := '(' element (',' element)+ ')' label | leaf ':' color
    int element(int parent) {
        if (peek() == '(') {
            ++pos;
            int self = static_cast<int>(nodes.size());
            nodes.emplace_back();
            nodes[self].parent = parent;
            std::vector<int> children;
            children.push_back(element(self));
            while (peek() == ',') {
                ++pos;
                children.push_back(element(self));
            }
            expect(')');
            nodes[self].children = children;
            nodes[self].label = name();
            if (children.size() < 2) fail("inner node '" + nodes[self].label +
                                          "' must have at least two children");
            return self;
        }
        int self = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[self].parent = parent;
        nodes[self].label = name();
        expect(':');
        nodes[self].color = name();
        return self;
    }
};

}  // namespace

PhyloTree PhyloTree::parse(const std::string& newick) {
    NewickParser p(newick);
    if (p.peek() == '\0') throw parse_error("empty tree");
    p.element(-1);
    p.expect(';');
    if (p.peek() != '\0') p.fail("trailing input after ';'");

    PhyloTree t;
    t.nodes_ = std::move(p.nodes);
    t.root_ = 0;
    t.finalize();
    return t;
}

void PhyloTree::finalize() {
    by_label_.clear();
    leaves_.clear();
    colors_.clear();
    for (int v = 0; v < node_count(); ++v) {
        if (!by_label_.emplace(nodes_[v].label, v).second)
            throw parse_error("duplicate node label '" + nodes_[v].label + "'");
    }
    // depths in parse order: parents precede children
    for (int v = 0; v < node_count(); ++v) {
        nodes_[v].depth = nodes_[v].parent < 0 ? 0 : nodes_[nodes_[v].parent].depth + 1;
        if (nodes_[v].is_leaf()) leaves_.push_back(v);
    }
    std::set<std::string> color_set;
    for (int leaf : leaves_) color_set.insert(nodes_[leaf].color);
    colors_.assign(color_set.begin(), color_set.end());
}

bool PhyloTree::has_node(const std::string& label) const { return by_label_.count(label) > 0; }

int PhyloTree::node_by_label(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw std::invalid_argument("unknown node '" + label + "'");
    return it->second;
}

int PhyloTree::lca(int x, int y) const {
    if (x < 0 || x >= node_count() || y < 0 || y >= node_count())
        throw std::invalid_argument("node index out of range");
    while (nodes_[x].depth > nodes_[y].depth) x = nodes_[x].parent;
    while (nodes_[y].depth > nodes_[x].depth) y = nodes_[y].parent;
    while (x != y) {
        x = nodes_[x].parent;
        y = nodes_[y].parent;
    }
    return x;
}

bool PhyloTree::is_ancestor_or_equal(int anc, int desc) const {
    while (nodes_[desc].depth > nodes_[anc].depth) desc = nodes_[desc].parent;
    return desc == anc;
}

std::string PhyloTree::newick() const {
    std::ostringstream os;
    auto emit = [&](auto&& self, int v) -> void {
        const Node& n = nodes_[v];
        if (n.is_leaf()) {
            os << n.label << ':' << n.color;
            return;
        }
        os << '(';
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i) os << ',';
            self(self, n.children[i]);
        }
        os << ')' << n.label;
    };
    emit(emit, root_);
    os << ';';
    return os.str();
}

TruncationMap TruncationMap::all_root(const PhyloTree& t) {
    TruncationMap u;
    for (int leaf : t.leaves())
        for (const auto& color : t.colors())
            u.map_[{leaf, color}] = color == t.node(leaf).color ? leaf : t.root();
    return u;
}

TruncationMap TruncationMap::from_entries(
    const PhyloTree& t, const std::vector<std::tuple<int, std::string, int>>& entries) {
    TruncationMap u = all_root(t);
    std::set<std::pair<int, std::string>> assigned;
    for (const auto& [leaf, color, node] : entries) {
        if (leaf < 0 || leaf >= t.node_count() || !t.node(leaf).is_leaf())
            throw parse_error("'" + (leaf >= 0 && leaf < t.node_count() ? t.node(leaf).label
                                                                        : std::string("?")) +
                              "' is not a leaf");
        if (std::find(t.colors().begin(), t.colors().end(), color) == t.colors().end())
            throw parse_error("unknown color '" + color + "'");
        if (!assigned.insert({leaf, color}).second)
            throw parse_error("duplicate truncation entry for (" + t.node(leaf).label + ", " +
                              color + ")");
        if (color == t.node(leaf).color) {
            if (node != leaf)
                throw parse_error("truncation for (" + t.node(leaf).label + ", " + color +
                                  ") must be the leaf itself");
            continue;
        }
        if (!t.is_ancestor_or_equal(node, leaf))
            throw parse_error("node '" + t.node(node).label + "' is not on the path from the root to '" +
                              t.node(leaf).label + "'");
        u.map_[{leaf, color}] = node;
    }
    return u;
}

TruncationMap TruncationMap::parse(const PhyloTree& t, const std::string& text) {
    std::vector<std::tuple<int, std::string, int>> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        if (directive != "u") throw parse_error("unknown directive '" + directive + "'", lineno);
        std::string leaf, color, node;
        if (!(ls >> leaf >> color >> node))
            throw parse_error("expected 'u <leaf> <color> <node>'", lineno);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing token '" + extra + "'", lineno);
        try {
            entries.emplace_back(t.node_by_label(leaf), color, t.node_by_label(node));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), lineno);
        }
    }
    return from_entries(t, entries);
}

int TruncationMap::node_for(int leaf, const std::string& color) const {
    auto it = map_.find({leaf, color});
    if (it == map_.end())
        throw std::invalid_argument("truncation map has no entry for this leaf/color");
    return it->second;
}

std::string TruncationMap::render(const PhyloTree& t) const {
    std::ostringstream os;
    for (const auto& [key, node] : map_)
        os << "u " << t.node(key.first).label << ' ' << key.second << ' ' << t.node(node).label
           << '\n';
    return os.str();
}

namespace {

std::vector<int> best_match_indices(const PhyloTree& t, int x, const std::string& color) {
    std::vector<int> best;
    int best_depth = -1;
    for (int y : t.leaves()) {
        if (y == x || t.node(y).color != color) continue;
        int d = t.node(t.lca(x, y)).depth;
        if (d > best_depth) {
            best_depth = d;
            best.clear();
        }
        if (d == best_depth) best.push_back(y);
    }
    return best;
}

}  // namespace

std::vector<std::string> best_matches(const PhyloTree& t, const std::string& leaf,
                                      const std::string& color) {
    int x = t.node_by_label(leaf);
    if (!t.node(x).is_leaf()) throw std::invalid_argument("'" + leaf + "' is not a leaf");
    if (t.node(x).color == color)
        throw std::invalid_argument("best matches are sought among the other color");
    std::vector<std::string> out;
    for (int y : best_match_indices(t, x, color)) out.push_back(t.node(y).label);
    std::sort(out.begin(), out.end());
    return out;
}

ColoredDigraph build_qbmg(const PhyloTree& t, const TruncationMap& u) {
    if (t.colors().size() == 1)
        throw precondition_error("all leaves have color '" + t.colors().front() +
                                 "'; a 2qBMG needs both colors");
    if (t.colors().size() != 2)
        throw precondition_error("tree has " + std::to_string(t.colors().size()) +
                                 " leaf colors; exactly two are required");

    std::vector<std::pair<std::string, int>> vertices;
    for (int leaf : t.leaves()) {
        int c = t.node(leaf).color == t.colors()[0] ? 0 : 1;
        vertices.emplace_back(t.node(leaf).label, c);
    }

    std::vector<Arc> arcs;
    for (int x : t.leaves()) {
        const std::string& cross = t.node(x).color == t.colors()[0] ? t.colors()[1] : t.colors()[0];
        int cut = u.node_for(x, cross);
        if (cut < 0 || cut >= t.node_count() || !t.is_ancestor_or_equal(cut, x))
            throw std::invalid_argument("truncation node for leaf '" + t.node(x).label +
                                        "' is off the root-to-leaf path");
        for (int y : best_match_indices(t, x, cross))
            if (t.node(t.lca(x, y)).depth >= t.node(cut).depth)
                arcs.emplace_back(t.node(x).label, t.node(y).label);
    }
    return ColoredDigraph::make(vertices, arcs);
}

ColoredDigraph build_bmg(const PhyloTree& t) { return build_qbmg(t, TruncationMap::all_root(t)); }

}  // namespace qbmg
