#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confactor/graph.hpp"
#include "confactor/matching.hpp"

namespace confactor {

// Per-vertex target degrees. A spec is a plain value; whether it fits a
// particular host graph (f(v) <= d(v) everywhere) is checked separately, so
// the same type can carry reduced targets for derived subproblems.
class DegreeSpec {
public:
    explicit DegreeSpec(std::vector<int> targets);
    static DegreeSpec uniform(int n, int value);

    // Validating constructor: rejects targets exceeding host degrees.
    static DegreeSpec against(const Graph& g, std::vector<int> targets);

    int size() const { return static_cast<int>(targets_.size()); }
    int at(int v) const { return targets_.at(v); }
    long long sum() const;
    const std::vector<int>& targets() const { return targets_; }
    bool feasible_for(const Graph& g) const;

    bool operator==(const DegreeSpec&) const = default;

private:
    std::vector<int> targets_;
};

// f-value file: one ASCII decimal per line, line i holds f(i).
std::vector<int> parse_degree_values(std::string_view text);
std::string serialize_degree_values(const std::vector<int>& values);

// A spanning subgraph of `host` meeting the degree spec exactly.
class Factor {
public:
    static Factor make(Graph host, DegreeSpec spec, EdgeSet edges);

    const Graph& host() const { return host_; }
    const DegreeSpec& spec() const { return spec_; }
    const EdgeSet& edges() const { return edges_; }
    int edge_count() const { return edges_.size(); }
    Graph as_graph() const { return host_.spanning_subgraph(edges_); }

private:
    Factor(Graph host, DegreeSpec spec, EdgeSet edges)
        : host_(std::move(host)), spec_(std::move(spec)), edges_(std::move(edges)) {}

    Graph host_;
    DegreeSpec spec_;
    EdgeSet edges_;
};

// Non-throwing check used by Factor::make and the verify tooling.
std::vector<std::string> factor_violations(const Graph& host, const DegreeSpec& spec,
                                           const EdgeSet& edges);

// Auxiliary graph of the f-factor -> perfect matching reduction.
struct GadgetGraph {
    Graph graph;
};

// Bookkeeping for the per-vertex gadgets: vertex x owns a block of gadget
// vertices, A-ports first (one per incident edge, in sorted neighbor order)
// then the B-side of size d(x) - f(x). Pure arithmetic, so the layout is
// reproducible byte for byte.
class GadgetMap {
public:
    GadgetMap(const Graph& g, const DegreeSpec& f);

    int gadget_vertex_count() const { return total_; }
    int a_begin(int x) const { return offset_[x]; }
    int a_size(int x) const { return a_size_[x]; }
    int b_begin(int x) const { return offset_[x] + a_size_[x]; }
    int b_size(int x) const { return b_size_[x]; }

    // Port serving the k-th sorted neighbor of x.
    int a_port(int x, int k) const { return offset_[x] + k; }

    // Port of x wired to neighbor w; PreconditionViolated if {x,w} is absent.
    int port_toward(int x, int w) const;

    int owner(int gadget_vertex) const;
    bool is_a_port(int gadget_vertex) const;

    // Original edge behind a matched A-A pair, nullopt for gadget-internal
    // pairs.
    std::optional<Edge> cross_source(Edge gadget_edge) const;

private:
    const Graph* host_;
    std::vector<int> offset_, a_size_, b_size_;
    int total_ = 0;
};

// Builds the auxiliary graph: per vertex a complete bipartite gadget between
// its A-ports and B-side, plus one edge per original edge joining the two
// designated ports. Requires f feasible for g.
std::pair<GadgetGraph, GadgetMap> build_gadget(const Graph& g, const DegreeSpec& f);

// Pulls a factor back from a perfect matching of the gadget graph: the factor
// edges are exactly the original edges whose port-to-port edge was matched.
Factor extract_factor(const Graph& g, const DegreeSpec& f, const GadgetMap& map,
                      const Matching& m);

// Degree-exact spanning subgraph via the reduction, or nullopt when none
// exists (including specs that are infeasible against g).
std::optional<Factor> f_factor(const Graph& g, const DegreeSpec& f);

}  // namespace confactor
