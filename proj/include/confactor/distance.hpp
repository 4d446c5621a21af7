#pragma once

#include <optional>

#include "confactor/tutte.hpp"

namespace confactor {

// Three-edge path u-a-b-v, all four vertices distinct. Edge membership is
// host-dependent; validate_path_constraint checks it.
struct PathConstraint {
    int u = -1, a = -1, b = -1, v = -1;
    bool operator==(const PathConstraint&) const = default;
};

void validate_path_constraint(const Graph& g, const PathConstraint& p);

// Gadget for factors of g - {u,v} in which u and v also share no neighbor:
// for every common neighbor l, one fixed B-side vertex of l's gadget keeps
// edges only to the two ports wired toward u and v, so any perfect matching
// claims at least one of those ports inside the gadget.
//
// Throws InfeasibleConstraint when some common neighbor l has an empty
// B-side (all of l's edges are forced into every factor, pinning u and v at
// distance <= 2). Requires f feasible for g - {u,v}.
std::pair<GadgetGraph, GadgetMap> build_distance_gadget(const Graph& g,
                                                        const DegreeSpec& f, int u,
                                                        int v);

// Factor of g minus the {u,v} edge with factor-distance(u, v) >= 3 (infinity
// counts), or nullopt when no such factor exists.
std::optional<Factor> distance_constrained_factor(const Graph& g, const DegreeSpec& f,
                                                  int u, int v,
                                                  bool* ran_matching = nullptr);

// Factor of g (w.r.t. the original f) containing the three path edges, with
// the path as a shortest u-v connection: distance exactly 3. Reduces f along
// the path, strips every edge among {u,a,b,v}, and solves the remainder with
// the distance constraint.
std::optional<Factor> path_constrained_factor(const Graph& g, const DegreeSpec& f,
                                              const PathConstraint& p,
                                              bool* ran_matching = nullptr);

}  // namespace confactor
