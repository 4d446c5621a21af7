#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confactor/graph.hpp"

namespace confactor {

// A set of vertex-disjoint edges of a host graph.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> pairs);

    int size() const { return static_cast<int>(pairs_.size()); }
    const std::vector<Edge>& pairs() const { return pairs_; }

    // Partner of v, or -1 when v is exposed. O(log) per query.
    int mate(int v) const;

private:
    std::vector<Edge> pairs_;
};

// Maximum-cardinality matching in a general graph (blossom shrinking).
// Deterministic: vertices and neighbors are always scanned in ascending
// order, so identical inputs give identical matchings.
Matching max_matching(const Graph& g);

// A matching covering every vertex, when one exists.
std::optional<Matching> perfect_matching(const Graph& g);

struct MatchingReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Checks edge membership and vertex-disjointness; with require_perfect also
// checks full coverage. Never throws, only reports.
MatchingReport verify_matching(const Graph& g, const Matching& m, bool require_perfect);

}  // namespace confactor
