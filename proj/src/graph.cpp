#include "confactor/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "confactor/errors.hpp"

namespace confactor {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::full(int n) {
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return VertexSet(std::move(ids));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::complement(int n) const {
    std::vector<int> out;
    out.reserve(n - size());
    for (int v = 0; v < n; ++v)
        if (!contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet EdgeSet::set_union(const EdgeSet& other) const {
    std::vector<Edge> out;
    out.reserve(edges_.size() + other.edges_.size());
    std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                   other.edges_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
}

EdgeSet EdgeSet::set_difference(const EdgeSet& other) const {
    std::vector<Edge> out;
    std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(),
                        other.edges_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
}

EdgeSet EdgeSet::set_intersection(const EdgeSet& other) const {
    std::vector<Edge> out;
    std::set_intersection(edges_.begin(), edges_.end(), other.edges_.begin(),
                          other.edges_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw MalformedInput("negative vertex count");
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v >= n)
            throw MalformedInput("edge endpoint out of range: " +
                                 std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
        if (i > 0 && edges[i] == edges[i - 1])
            throw MalformedInput("duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v));
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw PreconditionViolated("vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : static_cast<int>(adj_[0].size());
    for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
    return best;
}

Graph Graph::remove_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (auto ge : edges_)
        if (ge != e) kept.push_back(ge);
    return from_edges(n_, std::move(kept));
}

Graph Graph::remove_edges(const EdgeSet& drop) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (auto ge : edges_)
        if (!drop.contains(ge)) kept.push_back(ge);
    return from_edges(n_, std::move(kept));
}

Graph Graph::spanning_subgraph(const EdgeSet& keep) const {
    for (auto e : keep)
        if (!has_edge(e.first, e.second))
            throw PreconditionViolated("subgraph edge not present in host");
    return from_edges(n_, keep.edges());
}

std::string distance_to_string(int d) {
    return d == kInfDistance ? "inf" : std::to_string(d);
}

namespace {

// Splits into lines, dropping '#' comments and blank lines.
std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty() && cur[0] != '#') lines.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    flush();
    return lines;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t expect) {
    std::istringstream in(line);
    std::vector<long long> vals;
    long long x;
    while (in >> x) vals.push_back(x);
    std::string rest;
    if (!in.eof() && in.fail()) throw MalformedInput("non-numeric token in line: " + line);
    if (vals.size() != expect)
        throw MalformedInput("expected " + std::to_string(expect) +
                             " numbers in line: " + line);
    return vals;
}

}  // namespace

Graph load_graph(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw MalformedInput("empty graph document");
    auto header = parse_ints(lines[0], 2);
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw MalformedInput("bad header: " + lines[0]);
    if (static_cast<long long>(lines.size()) != m + 1)
        throw MalformedInput("edge count mismatch: header says " + std::to_string(m) +
                             ", got " + std::to_string(lines.size() - 1) + " lines");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 1; i <= m; ++i) {
        auto uv = parse_ints(lines[i], 2);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw MalformedInput("vertex out of range in line: " + lines[i]);
        edges.push_back(make_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1])));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw PreconditionViolated("bfs source out of range");
    std::vector<int> dist(g.vertex_count(), kInfDistance);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (dist[u] == kInfDistance) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

int bfs_distance(const Graph& g, int u, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw PreconditionViolated("bfs target out of range");
    return bfs_distances(g, u)[v];
}

int diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d : bfs_distances(g, v)) {
            if (d == kInfDistance) return kInfDistance;
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> members{s};
        seen[s] = true;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    members.push_back(u);
                    stack.push_back(u);
                }
            }
        }
        comps.emplace_back(std::move(members));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) {
        for (int u : g.neighbors(v))
            if (!s.contains(u)) out.push_back(u);
    }
    return VertexSet(std::move(out));
}

EdgeSet edge_cut(const Graph& g, const VertexSet& x) {
    std::vector<Edge> cut;
    for (auto e : g.edges())
        if (x.contains(e.first) != x.contains(e.second)) cut.push_back(e);
    return EdgeSet(std::move(cut));
}

CutSide cut_covers(const Graph& g, const VertexSet& x, const EdgeSet& es) {
    std::vector<bool> touched(g.vertex_count(), false);
    for (auto [u, v] : es) {
        touched[u] = true;
        touched[v] = true;
    }
    bool x_covered = true;
    for (int v : x)
        if (!touched[v]) {
            x_covered = false;
            break;
        }
    if (x_covered) return CutSide::X;
    bool comp_covered = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!x.contains(v) && !touched[v]) {
            comp_covered = false;
            break;
        }
    return comp_covered ? CutSide::Complement : CutSide::Neither;
}

}  // namespace confactor
