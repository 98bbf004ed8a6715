// Simple undirected graphs: storage, standard families, join and
// k-coalescence operations, traversal helpers, edge-list I/O.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rescoal {

class Graph {
public:
    // K_1 by default so aggregate types holding a Graph stay constructible.
    Graph() : n_(1), deg_(1, 0) {}

    // Edges are normalized to (min,max) and sorted; duplicates and
    // self-loops are rejected. labels must be empty or size n.
    Graph(int n, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& degrees() const { return deg_; }
    // Empty string when the vertex carries no role tag.
    const std::string& label(int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> deg_;
    std::vector<std::string> labels_;
};

// Structural equality: same order and same edge set. Labels are ignored.
bool operator==(const Graph& a, const Graph& b);

enum class StandardKind { complete, path, cycle, star, complete_bipartite };

// complete/path/cycle/star take one size (total vertex count, star center
// first), complete_bipartite takes two (left part first).
Graph make_standard(StandardKind kind, const std::vector<int>& sizes);

// Disjoint union plus all cross edges; a's vertices keep their ids,
// b's are shifted by a.n().
Graph join(const Graph& a, const Graph& b);

// Identify the clique sg of g with the clique sh of h positionally
// (sg[i] <-> sh[i]). Result ordering: identified block (in sg order,
// labeled "identified"), then the rest of g ascending, then the rest of
// h ascending. Order n+n'-k, size m+m'-C(k,2).
Graph k_coalescence(const Graph& g, const std::vector<int>& sg,
                    const Graph& h, const std::vector<int>& sh);

bool is_connected(const Graph& g);

// All-pairs BFS hop counts; -1 for unreachable pairs.
std::vector<std::vector<int>> bfs_distances(const Graph& g);

// Text format: first line "n m", then m lines "u v" (0-based).
// '#' starts a comment running to end of line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

} // namespace rescoal
