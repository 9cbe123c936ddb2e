#include "qbmg/io.hpp"

#include <fstream>
#include <sstream>

#include "qbmg/errors.hpp"

namespace qbmg {

namespace {

struct LineFormat {
    char vertex_directive;  // 'v'
    char link_directive;    // 'a' or 'e'
    const char* link_usage;
    bool allow_improper;
};

template <typename Graph>
Graph parse_lines(std::istream& in, const LineFormat& fmt) {
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<std::pair<std::string, std::string>> links;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        if (directive.size() == 1 && directive[0] == fmt.vertex_directive) {
            std::string id, color;
            if (!(ls >> id >> color)) throw parse_error("expected 'v <id> <color>'", lineno);
            if (color != "0" && color != "1")
                throw parse_error("color must be 0 or 1, got '" + color + "'", lineno);
            vertices.emplace_back(id, color == "1" ? 1 : 0);
        } else if (directive.size() == 1 && directive[0] == fmt.link_directive) {
            std::string a, b;
            if (!(ls >> a >> b)) throw parse_error(std::string("expected '") + fmt.link_usage + "'", lineno);
            links.emplace_back(a, b);
        } else {
            throw parse_error("unknown directive '" + directive + "'", lineno);
        }
        std::string extra;
        if (ls >> extra) throw parse_error("trailing token '" + extra + "'", lineno);
    }
    try {
        return Graph::make(vertices, links, fmt.allow_improper);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

}  // namespace

ColoredDigraph parse_digraph(std::istream& in) {
    // general digraphs are accepted here; proper-coloring checks happen in
    // the operations that need them
    return parse_lines<ColoredDigraph>(in, {'v', 'a', "a <src> <dst>", true});
}

ColoredDigraph parse_digraph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

UndirectedGraph parse_undirected(std::istream& in) {
    return parse_lines<UndirectedGraph>(in, {'v', 'e', "e <u> <v>", false});
}

UndirectedGraph parse_undirected_text(const std::string& text) {
    std::istringstream in(text);
    return parse_undirected(in);
}

PhyloTree parse_tree(std::istream& in) {
    std::ostringstream text;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        text << line << '\n';
    }
    return PhyloTree::parse(text.str());
}

std::string render_digraph(const ColoredDigraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.size(); ++v) os << "v " << g.id_of(v) << ' ' << g.color(v) << '\n';
    for (const auto& [u, v] : g.arcs()) os << "a " << u << ' ' << v << '\n';
    return os.str();
}

std::string render_undirected(const UndirectedGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.size(); ++v) os << "v " << g.id_of(v) << ' ' << g.color(v) << '\n';
    for (const auto& [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
    return os.str();
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

ColoredDigraph load_digraph(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_digraph(in);
}

UndirectedGraph load_undirected(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_undirected(in);
}

PhyloTree load_tree(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_tree(in);
}

TruncationMap load_truncation(const PhyloTree& t, const std::string& path) {
    auto in = open_or_throw(path);
    std::ostringstream text;
    text << in.rdbuf();
    return TruncationMap::parse(t, text.str());
}

}  // namespace qbmg
