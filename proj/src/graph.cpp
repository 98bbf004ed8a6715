#include "rescoal/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "rescoal/errors.hpp"

namespace rescoal {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 1)
        throw invalid_parameter_error("graph order must be positive, got " +
                                      std::to_string(n_));
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw invalid_parameter_error("edge endpoint out of range: (" +
                                          std::to_string(u) + "," +
                                          std::to_string(v) + ")");
        if (u == v)
            throw invalid_parameter_error("self-loop at vertex " +
                                          std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw invalid_parameter_error("duplicate edge");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw invalid_parameter_error("label vector size mismatch");
    deg_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg_[u];
        ++deg_[v];
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_)
        throw invalid_parameter_error("vertex out of range: " +
                                      std::to_string(v));
    return deg_[v];
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (v < 0 || v >= n_)
        throw invalid_parameter_error("vertex out of range: " +
                                      std::to_string(v));
    return labels_.empty() ? empty : labels_[v];
}

bool operator==(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edges() == b.edges();
}

Graph make_standard(StandardKind kind, const std::vector<int>& sizes) {
    const bool bip = kind == StandardKind::complete_bipartite;
    if (sizes.size() != (bip ? 2u : 1u))
        throw invalid_parameter_error("wrong number of sizes for standard graph");
    for (int s : sizes)
        if (s < 1) throw invalid_parameter_error("standard graph size must be positive");

    std::vector<std::pair<int, int>> e;
    switch (kind) {
    case StandardKind::complete: {
        int n = sizes[0];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return Graph(n, std::move(e));
    }
    case StandardKind::path: {
        int n = sizes[0];
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return Graph(n, std::move(e));
    }
    case StandardKind::cycle: {
        int n = sizes[0];
        if (n < 3) throw invalid_parameter_error("cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(e));
    }
    case StandardKind::star: {
        int n = sizes[0];
        for (int i = 1; i < n; ++i) e.emplace_back(0, i);
        return Graph(n, std::move(e));
    }
    case StandardKind::complete_bipartite: {
        int p = sizes[0], q = sizes[1];
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
        return Graph(p + q, std::move(e));
    }
    }
    throw invalid_parameter_error("unknown standard kind");
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    const int na = a.n();
    for (const auto& [u, v] : b.edges()) e.emplace_back(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < b.n(); ++v) e.emplace_back(u, na + v);
    return Graph(na + b.n(), std::move(e));
}

namespace {

void check_clique(const Graph& g, const std::vector<int>& s, const char* side) {
    std::set<int> seen;
    for (int v : s) {
        if (v < 0 || v >= g.n())
            throw invalid_parameter_error(std::string(side) +
                                          " clique vertex out of range");
        if (!seen.insert(v).second)
            throw invalid_parameter_error(std::string(side) +
                                          " clique vertices not distinct");
    }
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                throw invalid_parameter_error(
                    std::string(side) + " vertex set does not induce a complete subgraph");
}

} // namespace

Graph k_coalescence(const Graph& g, const std::vector<int>& sg,
                    const Graph& h, const std::vector<int>& sh) {
    if (sg.size() != sh.size())
        throw invalid_parameter_error("identified vertex lists differ in length");
    const int k = static_cast<int>(sg.size());
    if (k < 1) throw invalid_parameter_error("k-coalescence needs k >= 1");
    check_clique(g, sg, "left");
    check_clique(h, sh, "right");

    // New ids: identified block 0..k-1, then g-remainder, then h-remainder.
    std::vector<int> gmap(g.n(), -1), hmap(h.n(), -1);
    for (int i = 0; i < k; ++i) {
        gmap[sg[i]] = i;
        hmap[sh[i]] = i;
    }
    int next = k;
    for (int v = 0; v < g.n(); ++v)
        if (gmap[v] < 0) gmap[v] = next++;
    for (int v = 0; v < h.n(); ++v)
        if (hmap[v] < 0) hmap[v] = next++;

    std::set<std::pair<int, int>> e; // dedupes the shared clique edges
    auto add = [&e](int u, int v) { e.insert(std::minmax(u, v)); };
    for (const auto& [u, v] : g.edges()) add(gmap[u], gmap[v]);
    for (const auto& [u, v] : h.edges()) add(hmap[u], hmap[v]);

    std::vector<std::string> labels(next);
    for (int v = 0; v < g.n(); ++v)
        if (gmap[v] >= k) labels[gmap[v]] = g.label(v);
    for (int v = 0; v < h.n(); ++v)
        if (hmap[v] >= k) labels[hmap[v]] = h.label(v);
    for (int i = 0; i < k; ++i) labels[i] = "identified";

    return Graph(next, {e.begin(), e.end()}, std::move(labels));
}

bool is_connected(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == g.n();
}

std::vector<std::vector<int>> bfs_distances(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> dist(g.n(), std::vector<int>(g.n(), -1));
    for (int s = 0; s < g.n(); ++s) {
        auto& d = dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (!(probe >> tok)) continue; // blank/comment-only line
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected header \"n m\"");
            }
            if (n < 1 || m < 0)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": invalid header values");
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) {
            std::string tok;
            std::istringstream probe(line);
            if (!(probe >> tok)) continue;
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected edge \"u v\"");
        }
        std::string trailing;
        if (ls >> trailing)
            throw parse_error("line " + std::to_string(lineno) +
                              ": trailing token '" + trailing + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw parse_error("empty edge-list input");
    if (static_cast<long>(edges.size()) != m)
        throw parse_error("edge count mismatch: header says " +
                          std::to_string(m) + ", found " +
                          std::to_string(edges.size()));
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const invalid_parameter_error& e) {
        throw parse_error(std::string("invalid edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open '" + path + "' for reading");
    return read_edge_list(f);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    write_edge_list(g, f);
    if (!f) throw io_error("write failed for '" + path + "'");
}

} // namespace rescoal
