#include "confactor/tutte.hpp"

#include <algorithm>
#include <sstream>

#include "confactor/errors.hpp"

namespace confactor {

DegreeSpec::DegreeSpec(std::vector<int> targets) : targets_(std::move(targets)) {
    for (int t : targets_)
        if (t < 0) throw PreconditionViolated("negative degree target");
}

DegreeSpec DegreeSpec::uniform(int n, int value) {
    if (n < 0) throw PreconditionViolated("negative vertex count");
    return DegreeSpec(std::vector<int>(n, value));
}

DegreeSpec DegreeSpec::against(const Graph& g, std::vector<int> targets) {
    DegreeSpec spec(std::move(targets));
    if (spec.size() != g.vertex_count())
        throw PreconditionViolated("degree spec length does not match vertex count");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (spec.at(v) > g.degree(v))
            throw PreconditionViolated("target exceeds degree at vertex " +
                                       std::to_string(v));
    return spec;
}

long long DegreeSpec::sum() const {
    long long s = 0;
    for (int t : targets_) s += t;
    return s;
}

bool DegreeSpec::feasible_for(const Graph& g) const {
    if (size() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (targets_[v] > g.degree(v)) return false;
    return true;
}

std::vector<int> parse_degree_values(std::string_view text) {
    std::vector<int> values;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream tok(line);
        long long x;
        if (!(tok >> x)) throw MalformedInput("bad f-value line: " + line);
        std::string rest;
        if (tok >> rest) throw MalformedInput("trailing token in f-value line: " + line);
        if (x < 0) throw MalformedInput("negative f-value: " + line);
        values.push_back(static_cast<int>(x));
    }
    return values;
}

std::string serialize_degree_values(const std::vector<int>& values) {
    std::string out;
    for (int v : values) out += std::to_string(v) + "\n";
    return out;
}

std::vector<std::string> factor_violations(const Graph& host, const DegreeSpec& spec,
                                           const EdgeSet& edges) {
    std::vector<std::string> out;
    if (spec.size() != host.vertex_count()) {
        out.push_back("degree spec length does not match host");
        return out;
    }
    std::vector<int> deg(host.vertex_count(), 0);
    for (auto [u, v] : edges) {
        if (!host.has_edge(u, v)) {
            out.push_back("edge " + std::to_string(u) + " " + std::to_string(v) +
                          " is not a host edge");
            continue;
        }
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < host.vertex_count(); ++v)
        if (deg[v] != spec.at(v))
            out.push_back("vertex " + std::to_string(v) + " has degree " +
                          std::to_string(deg[v]) + ", needs " +
                          std::to_string(spec.at(v)));
    return out;
}

Factor Factor::make(Graph host, DegreeSpec spec, EdgeSet edges) {
    auto violations = factor_violations(host, spec, edges);
    if (!violations.empty())
        throw InternalInconsistency("not a valid factor: " + violations.front());
    return Factor(std::move(host), std::move(spec), std::move(edges));
}

GadgetMap::GadgetMap(const Graph& g, const DegreeSpec& f) : host_(&g) {
    const int n = g.vertex_count();
    offset_.resize(n);
    a_size_.resize(n);
    b_size_.resize(n);
    for (int x = 0; x < n; ++x) {
        offset_[x] = total_;
        a_size_[x] = g.degree(x);
        b_size_[x] = g.degree(x) - f.at(x);
        total_ += a_size_[x] + b_size_[x];
    }
}

int GadgetMap::port_toward(int x, int w) const {
    const auto& adj = host_->neighbors(x);
    auto it = std::lower_bound(adj.begin(), adj.end(), w);
    if (it == adj.end() || *it != w)
        throw PreconditionViolated("no edge between " + std::to_string(x) + " and " +
                                   std::to_string(w));
    return a_port(x, static_cast<int>(it - adj.begin()));
}

int GadgetMap::owner(int gadget_vertex) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), gadget_vertex);
    return static_cast<int>(it - offset_.begin()) - 1;
}

bool GadgetMap::is_a_port(int gadget_vertex) const {
    int x = owner(gadget_vertex);
    return gadget_vertex < offset_[x] + a_size_[x];
}

std::optional<Edge> GadgetMap::cross_source(Edge gadget_edge) const {
    auto [p, q] = gadget_edge;
    int x = owner(p), y = owner(q);
    if (x == y || !is_a_port(p) || !is_a_port(q)) return std::nullopt;
    return make_edge(x, y);
}

std::pair<GadgetGraph, GadgetMap> build_gadget(const Graph& g, const DegreeSpec& f) {
    if (!f.feasible_for(g))
        throw PreconditionViolated("degree spec infeasible for host graph");
    GadgetMap map(g, f);
    std::vector<Edge> edges;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int i = 0; i < map.a_size(x); ++i)
            for (int j = 0; j < map.b_size(x); ++j)
                edges.push_back({map.a_port(x, i), map.b_begin(x) + j});
    for (auto [q, w] : g.edges())
        edges.push_back(make_edge(map.port_toward(q, w), map.port_toward(w, q)));
    Graph h = Graph::from_edges(map.gadget_vertex_count(), std::move(edges));
    return {GadgetGraph{std::move(h)}, std::move(map)};
}

Factor extract_factor(const Graph& g, const DegreeSpec& f, const GadgetMap& map,
                      const Matching& m) {
    std::vector<Edge> chosen;
    for (auto pair : m.pairs())
        if (auto src = map.cross_source(pair)) chosen.push_back(*src);
    auto violations = factor_violations(g, f, EdgeSet(chosen));
    if (!violations.empty())
        throw InternalInconsistency("matching pulls back to a broken factor: " +
                                    violations.front());
    return Factor::make(g, f, EdgeSet(std::move(chosen)));
}

std::optional<Factor> f_factor(const Graph& g, const DegreeSpec& f) {
    if (!f.feasible_for(g)) return std::nullopt;
    auto [gadget, map] = build_gadget(g, f);
    auto m = perfect_matching(gadget.graph);
    if (!m) return std::nullopt;
    return extract_factor(g, f, map, *m);
}

}  // namespace confactor
