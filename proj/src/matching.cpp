#include "confactor/matching.hpp"

#include <algorithm>
#include <numeric>

#include "confactor/errors.hpp"

namespace confactor {

Matching::Matching(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
    for (auto& e : pairs_) e = make_edge(e.first, e.second);
    std::sort(pairs_.begin(), pairs_.end());
}

int Matching::mate(int v) const {
    for (const auto& [a, b] : pairs_) {
        if (a == v) return b;
        if (b == v) return a;
    }
    return -1;
}

namespace {

// Edmonds' blossom algorithm, augmenting-path search with blossom
// contraction tracked through base[] (O(V^3) worst case). A greedy seed
// matching keeps the number of searches low on large inputs.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          mate_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_, false),
          blossom_(n_, false),
          lca_mark_(n_, false) {}

    std::vector<int> run() {
        greedy_seed();
        for (int v = 0; v < n_; ++v)
            if (mate_[v] < 0) search_from(v);
        return mate_;
    }

private:
    void greedy_seed() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] >= 0) continue;
            for (int u : g_.neighbors(v)) {
                if (mate_[u] < 0) {
                    mate_[v] = u;
                    mate_[u] = v;
                    break;
                }
            }
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<int> marked;
        int x = a;
        while (true) {
            x = base_[x];
            lca_mark_[x] = true;
            marked.push_back(x);
            if (mate_[x] < 0) break;  // reached the tree root
            x = parent_[mate_[x]];
        }
        int y = b;
        while (true) {
            y = base_[y];
            if (lca_mark_[y]) break;
            y = parent_[mate_[y]];
        }
        for (int v : marked) lca_mark_[v] = false;
        return y;
    }

    void mark_path(int v, int stop, int child) {
        while (base_[v] != stop) {
            blossom_[base_[v]] = true;
            blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void augment(int finish) {
        int v = finish;
        while (v >= 0) {
            int pv = parent_[v];
            int next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    bool search_from(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        queue_.assign(1, root);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            int v = queue_[qi];
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
                    // odd cycle: contract the blossom
                    int cur = lowest_common_base(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue_.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (mate_[to] < 0) {
                        augment(to);
                        return true;
                    }
                    used_[mate_[to]] = true;
                    queue_.push_back(mate_[to]);
                }
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<bool> used_, blossom_, lca_mark_;
    std::vector<int> queue_;
};

}  // namespace

Matching max_matching(const Graph& g) {
    auto mate = BlossomSolver(g).run();
    std::vector<Edge> pairs;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) pairs.push_back({v, mate[v]});
    return Matching(std::move(pairs));
}

std::optional<Matching> perfect_matching(const Graph& g) {
    Matching m = max_matching(g);
    if (2 * m.size() != g.vertex_count()) return std::nullopt;
    return m;
}

MatchingReport verify_matching(const Graph& g, const Matching& m, bool require_perfect) {
    MatchingReport report;
    std::vector<int> hits(g.vertex_count(), 0);
    for (auto [u, v] : m.pairs()) {
        if (!g.has_edge(u, v)) {
            report.violations.push_back("pair " + std::to_string(u) + " " +
                                        std::to_string(v) + " is not a graph edge");
            continue;
        }
        ++hits[u];
        ++hits[v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (hits[v] > 1)
            report.violations.push_back("vertex " + std::to_string(v) +
                                        " is matched " + std::to_string(hits[v]) +
                                        " times");
    if (require_perfect && 2 * m.size() != g.vertex_count())
        report.violations.push_back(
            "matching is not perfect: " + std::to_string(2 * m.size()) + " of " +
            std::to_string(g.vertex_count()) + " vertices covered");
    return report;
}

}  // namespace confactor
