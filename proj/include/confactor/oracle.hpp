#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "confactor/tutte.hpp"

namespace confactor {

// Caps for the brute-force search. Enumeration is ground truth for small
// instances, not a fast path; both caps must be positive.
struct EnumerationBudget {
    long long max_solutions = 1'000'000;
    long long max_nodes = 50'000'000;
};

struct Enumeration {
    std::vector<Factor> factors;
    bool complete = true;  // false when a budget cap cut the search short
    long long nodes = 0;
};

// Visits every degree-exact spanning subgraph by edge-by-edge backtracking
// (sorted edge order, exclude branch first, degree-feasibility pruning only).
// The callback returns false to stop early. Returns true when the search ran
// to completion within budget.
bool enumerate_f_factors_cb(const Graph& g, const DegreeSpec& f,
                            const EnumerationBudget& budget,
                            const std::function<bool(const EdgeSet&)>& visit,
                            long long* nodes_out = nullptr);

Enumeration enumerate_f_factors(const Graph& g, const DegreeSpec& f,
                                const EnumerationBudget& budget);

// True as soon as one connected factor turns up; false only after exhausting
// the search. Throws BudgetExhausted when the budget ran out first.
bool exists_connected_f_factor(const Graph& g, const DegreeSpec& f,
                               const EnumerationBudget& budget);

// Existence only (first hit wins). Throws BudgetExhausted when inconclusive.
bool exists_f_factor(const Graph& g, const DegreeSpec& f,
                     const EnumerationBudget& budget);

// Deterministic helpers over std::mt19937_64 (whose output sequence is fixed
// by the standard): these avoid std::uniform_*_distribution, which is not
// portable across library implementations. Documented in the README.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound);
double rng_unit(std::mt19937_64& rng);

struct GenParams {
    int k = 0;        // twin-k clique parameter
    int n = 0;        // vertex count
    int degree = 0;   // planted-connected regularity
    int extra = 0;    // planted-connected extra edges
    double p = 0.0;   // gnp-threshold edge probability
    int f_value = -1; // gnp-threshold uniform f; <0 means ceil(n/2.5)
};

struct Instance {
    Graph graph;
    DegreeSpec spec;
};

// Models:
//   twin-k:            two K_{k+1} cliques joined by a perfect matching, f = k
//   planted-connected: hidden connected degree-regular subgraph (a circulant
//                      under a seeded vertex permutation) plus extra edges
//   gnp-threshold:     G(n,p) with a uniform degree target
// Identical (model, params, seed) always produces identical bytes.
Instance gen_instance(const std::string& model, const GenParams& params,
                      std::uint64_t seed);

}  // namespace confactor
