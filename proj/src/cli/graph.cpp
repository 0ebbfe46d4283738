#include "sset/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sset::cli {

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

Graph one_skeleton(const SimplicialSet& x)
{
    Graph g;
    for (int v = 0; v < static_cast<int>(x.size(0)); ++v)
        g.nodes.push_back(x.label(0, v).str());
    if (x.dim() < 1)
        return g;
    std::set<std::pair<int, int>> seen;
    for (int e : x.nondegenerate(1)) {
        const int from = x.face(1, 1, e);
        const int to = x.face(1, 0, e);
        g.edges.emplace_back(g.nodes[from], g.nodes[to]);
        if (from != to && seen.count({to, from}) && !seen.count({from, to}))
            g.iso_pairs.emplace_back(g.nodes[std::min(from, to)], g.nodes[std::max(from, to)]);
        seen.insert({from, to});
    }
    std::sort(g.iso_pairs.begin(), g.iso_pairs.end());
    return g;
}

std::string to_dot(const Graph& g, const std::string& name)
{
    std::set<std::pair<std::string, std::string>> iso;
    for (const auto& [a, b] : g.iso_pairs) {
        iso.insert({a, b});
        iso.insert({b, a});
    }
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n";
    for (const auto& n : g.nodes)
        out << "  " << quoted(n) << ";\n";
    for (const auto& [a, b] : g.edges) {
        out << "  " << quoted(a) << " -> " << quoted(b);
        if (iso.count({a, b}))
            out << " [color=\"black:invis:black\"];  // iso pair\n";
        else
            out << ";\n";
    }
    out << "}\n";
    return out.str();
}

json to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({a, b});
    json pairs = json::array();
    for (const auto& [a, b] : g.iso_pairs)
        pairs.push_back({a, b});
    return {{"nodes", g.nodes}, {"edges", edges}, {"iso_pairs", pairs}};
}

} // namespace sset::cli
