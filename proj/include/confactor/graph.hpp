#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace confactor {

using Edge = std::pair<int, int>;

// Canonical form of an undirected edge: endpoints ascending.
inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    static VertexSet full(int n);

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    VertexSet complement(int n) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

// Sorted, duplicate-free set of canonical edges.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);

    bool contains(Edge e) const;
    bool contains(int u, int v) const { return contains(make_edge(u, v)); }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }

    EdgeSet set_union(const EdgeSet& other) const;
    EdgeSet set_difference(const EdgeSet& other) const;
    EdgeSet set_intersection(const EdgeSet& other) const;

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    bool operator==(const EdgeSet&) const = default;

private:
    std::vector<Edge> edges_;
};

// Immutable simple undirected graph on vertices 0..n-1. Edge list and
// adjacency lists are kept sorted; all "modifications" build new values.
class Graph {
public:
    Graph() = default;

    // Rejects self-loops, parallel edges and out-of-range endpoints.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    int min_degree() const;

    Graph remove_edge(int u, int v) const;          // no-op if absent
    Graph remove_edges(const EdgeSet& drop) const;
    Graph spanning_subgraph(const EdgeSet& keep) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Distance value for unreachable pairs / disconnected graphs ("inf" in text).
inline constexpr int kInfDistance = std::numeric_limits<int>::max();

std::string distance_to_string(int d);

// Edge-list text format: "n m" header, then m lines "u v" (u < v), sorted
// lexicographically on output. '#' comment lines allowed on input only.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);

int bfs_distance(const Graph& g, int u, int v);
std::vector<int> bfs_distances(const Graph& g, int source);
int diameter(const Graph& g);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

// Open neighborhood of S: union of neighbors of S, minus S itself.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// All edges with exactly one endpoint in x.
EdgeSet edge_cut(const Graph& g, const VertexSet& x);

enum class CutSide { X, Complement, Neither };

// Which side of the bipartition {X, V\X} has every vertex touched by some
// edge of es. If both sides qualify, X is reported.
CutSide cut_covers(const Graph& g, const VertexSet& x, const EdgeSet& es);

}  // namespace confactor
