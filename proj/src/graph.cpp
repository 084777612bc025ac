#include "plumbhf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace plumbhf {

int PlumbingGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<std::vector<int>> PlumbingGraph::adjacency() const {
    std::vector<std::vector<int>> adj(weights.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

PlumbingGraph make_graph(std::vector<int> weights, std::vector<std::pair<int, int>> edges) {
    PlumbingGraph g;
    g.ids.resize(weights.size());
    std::iota(g.ids.begin(), g.ids.end(), 0);
    g.weights = std::move(weights);
    g.edges = std::move(edges);
    if (auto err = structure_error(g)) throw GraphError(*err);
    return g;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// Returns a message and the index of the offending edge (-1 if global).
std::optional<std::pair<std::string, int>> first_defect(const PlumbingGraph& g) {
    const int n = g.size();
    if (n == 0) return std::make_pair(std::string("graph has no vertices"), -1);
    {
        std::vector<int> sorted = g.ids;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i) return std::make_pair(std::string("vertex ids must be exactly 0..n-1"), -1);
    }
    std::set<std::pair<int, int>> seen;
    Dsu dsu(n);
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
        auto [a, b] = g.edges[k];
        if (a < 0 || b < 0 || a >= n || b >= n) return std::make_pair(std::string("edge to unknown vertex"), k);
        if (a == b) return std::make_pair("self-loop at vertex " + std::to_string(g.ids[a]), k);
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            return std::make_pair("multi-edge " + std::to_string(g.ids[a]) + "-" + std::to_string(g.ids[b]), k);
        if (!dsu.unite(a, b)) return std::make_pair(std::string("cycle detected"), k);
    }
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != dsu.find(0)) return std::make_pair(std::string("graph is disconnected"), -1);
    return std::nullopt;
}

}  // namespace

std::optional<std::string> structure_error(const PlumbingGraph& g) {
    if (auto d = first_defect(g)) return d->first;
    return std::nullopt;
}

PlumbingGraph parse_graph(std::string_view text) {
    PlumbingGraph g;
    std::map<long long, int> coord;  // id -> coordinate
    struct RawEdge { long long a, b; int line; };
    std::vector<RawEdge> raw;
    std::vector<int> edge_lines;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        long long a = 0, b = 0;
        std::string extra;
        if ((tag != "v" && tag != "e") || !(ls >> a >> b) || (ls >> extra))
            throw GraphError("malformed line '" + line + "'", lineno);
        if (tag == "v") {
            if (a < 0) throw GraphError("negative vertex id", lineno);
            if (coord.count(a)) throw GraphError("duplicate vertex id " + std::to_string(a), lineno);
            if (b < -1000000 || b > 1000000) throw GraphError("weight out of range", lineno);
            coord[a] = g.size();
            g.ids.push_back(static_cast<int>(a));
            g.weights.push_back(static_cast<int>(b));
        } else {
            raw.push_back({a, b, lineno});
        }
    }
    if (g.size() == 0) throw GraphError("no vertices declared");
    for (const auto& e : raw) {
        for (long long id : {e.a, e.b})
            if (!coord.count(id)) throw GraphError("edge to unknown vertex id " + std::to_string(id), e.line);
        g.edges.emplace_back(coord[e.a], coord[e.b]);
        edge_lines.push_back(e.line);
    }
    if (auto d = first_defect(g)) {
        int ln = d->second >= 0 ? edge_lines[d->second] : 0;
        throw GraphError(d->first, ln);
    }
    return g;
}

PlumbingGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GraphError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string to_text(const PlumbingGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.size(); ++v) out << "v " << g.ids[v] << ' ' << g.weights[v] << '\n';
    for (auto [a, b] : g.edges) out << "e " << g.ids[a] << ' ' << g.ids[b] << '\n';
    return out.str();
}

PlumbingGraph star_graph(int centre, const std::vector<std::vector<int>>& legs) {
    std::vector<int> w{centre};
    std::vector<std::pair<int, int>> e;
    for (const auto& leg : legs) {
        int prev = 0;
        for (int x : leg) {
            w.push_back(x);
            int v = static_cast<int>(w.size()) - 1;
            e.emplace_back(prev, v);
            prev = v;
        }
    }
    return make_graph(std::move(w), std::move(e));
}

}  // namespace plumbhf
