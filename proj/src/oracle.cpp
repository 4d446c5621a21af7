#include "confactor/oracle.hpp"

#include <algorithm>

#include "confactor/errors.hpp"

namespace confactor {

namespace {

struct Backtracker {
    const Graph& g;
    const DegreeSpec& f;
    const EnumerationBudget& budget;
    const std::function<bool(const EdgeSet&)>& visit;

    std::vector<int> need;       // remaining target degree
    std::vector<int> undecided;  // incident edges not yet decided
    std::vector<Edge> chosen;
    int deficit = 0;  // vertices with need > 0
    long long nodes = 0;
    long long delivered = 0;
    bool out_of_budget = false;
    bool stopped = false;

    Backtracker(const Graph& g_, const DegreeSpec& f_, const EnumerationBudget& b_,
                const std::function<bool(const EdgeSet&)>& v_)
        : g(g_), f(f_), budget(b_), visit(v_) {
        need = f.targets();
        undecided.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            undecided[v] = g.degree(v);
            if (need[v] > 0) ++deficit;
        }
    }

    void emit() {
        if (delivered == budget.max_solutions) {
            out_of_budget = true;
            return;
        }
        ++delivered;
        if (!visit(EdgeSet(chosen))) stopped = true;
    }

    void bump_need(int v, int delta) {
        if (need[v] > 0 && need[v] + delta == 0) --deficit;
        if (need[v] == 0 && delta > 0) ++deficit;
        need[v] += delta;
    }

    void recurse(std::size_t i) {
        if (out_of_budget || stopped) return;
        if (++nodes > budget.max_nodes) {
            out_of_budget = true;
            return;
        }
        if (deficit == 0) {
            // remaining edges are forced out; one completion, visited now
            emit();
            return;
        }
        if (i == g.edges().size()) return;
        auto [u, v] = g.edges()[i];
        --undecided[u];
        --undecided[v];
        if (need[u] <= undecided[u] && need[v] <= undecided[v]) recurse(i + 1);
        if (!out_of_budget && !stopped && need[u] >= 1 && need[v] >= 1) {
            chosen.push_back({u, v});
            bump_need(u, -1);
            bump_need(v, -1);
            recurse(i + 1);
            bump_need(u, +1);
            bump_need(v, +1);
            chosen.pop_back();
        }
        ++undecided[u];
        ++undecided[v];
    }
};

}  // namespace

bool enumerate_f_factors_cb(const Graph& g, const DegreeSpec& f,
                            const EnumerationBudget& budget,
                            const std::function<bool(const EdgeSet&)>& visit,
                            long long* nodes_out) {
    if (budget.max_solutions <= 0 || budget.max_nodes <= 0)
        throw PreconditionViolated("enumeration budget must be positive");
    if (f.size() != g.vertex_count())
        throw PreconditionViolated("degree spec length does not match vertex count");
    Backtracker search(g, f, budget, visit);
    search.recurse(0);
    if (nodes_out) *nodes_out = search.nodes;
    return !search.out_of_budget;
}

Enumeration enumerate_f_factors(const Graph& g, const DegreeSpec& f,
                                const EnumerationBudget& budget) {
    Enumeration result;
    result.complete = enumerate_f_factors_cb(
        g, f, budget,
        [&](const EdgeSet& edges) {
            result.factors.push_back(Factor::make(g, f, edges));
            return true;
        },
        &result.nodes);
    return result;
}

bool exists_connected_f_factor(const Graph& g, const DegreeSpec& f,
                               const EnumerationBudget& budget) {
    bool found = false;
    bool complete = enumerate_f_factors_cb(g, f, budget, [&](const EdgeSet& edges) {
        if (is_connected(g.spanning_subgraph(edges))) {
            found = true;
            return false;
        }
        return true;
    });
    if (found) return true;
    if (!complete)
        throw BudgetExhausted("connected-factor search ran out of budget");
    return false;
}

bool exists_f_factor(const Graph& g, const DegreeSpec& f,
                     const EnumerationBudget& budget) {
    bool found = false;
    bool complete = enumerate_f_factors_cb(g, f, budget, [&](const EdgeSet&) {
        found = true;
        return false;
    });
    if (found) return true;
    if (!complete) throw BudgetExhausted("factor search ran out of budget");
    return false;
}

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw PreconditionViolated("rng_below with zero bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double rng_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void shuffle_ints(std::vector<int>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng_below(rng, i)]);
}

Instance gen_twin_k(const GenParams& params) {
    const int k = params.k;
    if (k < 2) throw PreconditionViolated("twin-k needs k >= 2");
    const int side = k + 1;
    std::vector<Edge> edges;
    for (int block = 0; block < 2; ++block)
        for (int i = 0; i < side; ++i)
            for (int j = i + 1; j < side; ++j)
                edges.push_back({block * side + i, block * side + j});
    for (int i = 0; i < side; ++i) edges.push_back({i, i + side});
    Graph g = Graph::from_edges(2 * side, std::move(edges));
    return {std::move(g), DegreeSpec::uniform(2 * side, k)};
}

Instance gen_planted(const GenParams& params, std::uint64_t seed) {
    const int n = params.n, d = params.degree;
    if (n < 4 || d < 2 || d >= n)
        throw PreconditionViolated("planted-connected needs n >= 4 and 2 <= degree < n");
    if (n % 2 == 1 && d % 2 == 1)
        throw PreconditionViolated("n*degree must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    shuffle_ints(perm, rng);

    // circulant base: offsets 1..d/2, plus the antipodal matching when d is odd
    std::vector<Edge> planted;
    for (int s = 1; s <= d / 2; ++s)
        for (int i = 0; i < n; ++i) planted.push_back(make_edge(perm[i], perm[(i + s) % n]));
    if (d % 2 == 1)
        for (int i = 0; i < n / 2; ++i) planted.push_back(make_edge(perm[i], perm[i + n / 2]));
    EdgeSet base(planted);

    long long complement = static_cast<long long>(n) * (n - 1) / 2 - base.size();
    if (params.extra < 0 || params.extra > complement)
        throw PreconditionViolated("extra edge count out of range");
    std::vector<Edge> spare;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!base.contains(u, v)) spare.push_back({u, v});
    for (std::size_t i = spare.size(); i > 1; --i)
        std::swap(spare[i - 1], spare[rng_below(rng, i)]);

    std::vector<Edge> all = base.edges();
    all.insert(all.end(), spare.begin(), spare.begin() + params.extra);
    Graph g = Graph::from_edges(n, std::move(all));
    return {std::move(g), DegreeSpec::uniform(n, d)};
}

Instance gen_gnp(const GenParams& params, std::uint64_t seed) {
    const int n = params.n;
    if (n < 1 || params.p < 0.0 || params.p > 1.0)
        throw PreconditionViolated("gnp-threshold needs n >= 1 and p in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_unit(rng) < params.p) edges.push_back({u, v});
    Graph g = Graph::from_edges(n, std::move(edges));
    int f = params.f_value >= 0 ? params.f_value : (2 * n + 4) / 5;
    return {std::move(g), DegreeSpec::uniform(n, f)};
}

}  // namespace

Instance gen_instance(const std::string& model, const GenParams& params,
                      std::uint64_t seed) {
    if (model == "twin-k") return gen_twin_k(params);
    if (model == "planted-connected") return gen_planted(params, seed);
    if (model == "gnp-threshold") return gen_gnp(params, seed);
    throw PreconditionViolated("unknown instance model: " + model);
}

}  // namespace confactor
