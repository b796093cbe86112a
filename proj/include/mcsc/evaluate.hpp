// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/problem.hpp"

#include <cstdint>

namespace mcsc {

/// Travel cost of a coalition: for every assigned goal, the distance from
/// the carrying agent to the material plus the delivery distance.
Dec6 coalition_cost(const CoalitionProblem& problem, const Coalition& coalition);

std::map<std::string, Dec6> per_agent_distances(const CoalitionProblem& problem,
                                                const Coalition& coalition);

/// Pareto-style comparison of per-agent distances: true iff `a` is no worse
/// for every agent and strictly better for at least one.
bool economically_dominates(const CoalitionProblem& problem, const Coalition& a,
                            const Coalition& b);

struct GraphEdge {
    std::string from;
    std::string to;
    std::string goal;

    auto operator<=>(const GraphEdge&) const = default;
};

/// Directed dependence graph: depender -> dependee, labeled by goal.
/// Parallel edges with distinct goal labels stay distinct.
struct DependenceGraph {
    std::vector<std::string> nodes;
    std::set<GraphEdge> edges;
};

DependenceGraph dependence_graph(const CoalitionProblem& problem);
DependenceGraph coalition_dependence_graph(const CoalitionProblem& problem,
                                           const Coalition& coalition);

struct CycleStats {
    std::int64_t cycles = 0;   // simple directed cycles of length >= 2
    std::int64_t pair_sum = 0; // ordered pairs traversed consecutively, over all cycles
};

/// Johnson-style elementary-circuit enumeration; label-distinct parallel
/// edges multiply. Self-loops never count.
CycleStats cycle_pair_count(const DependenceGraph& graph, const Limits& limits = {});

std::int64_t conviviality_theta(int n_agents, int n_goals);
std::int64_t conviviality_omega(int n_agents, int n_goals);

struct Conviviality {
    std::int64_t pairs = 0;
    std::int64_t omega = 1;

    /// Rounded half-even to five decimal places, e.g. "0.00089".
    std::string display5() const;
};

Conviviality conviviality(const DependenceGraph& graph, int n_agents, int n_goals,
                          const Limits& limits = {});

struct ScoreMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<Degree>> scores; // [alternative][criterion]
    std::vector<Degree> weights;
    std::vector<bool> cost_criteria; // optional; empty means all benefit-type

    void validate() const; // shape and weight-sum checks
};

struct Ranking {
    struct Entry {
        std::string id;
        std::string display; // exact decimal where the method is exact
        double value = 0.0;
    };

    std::string method;
    std::vector<Entry> entries; // best first; ties broken by id
};

/// Weighted sum, exact decimal arithmetic.
std::vector<Dec6> ws_scores(const ScoreMatrix& matrix);
Ranking weighted_sum(const ScoreMatrix& matrix);

/// Weighted product: pairwise ratio and the induced (total) ranking.
double weighted_product_ratio(const std::vector<Degree>& row1, const std::vector<Degree>& row2,
                              const std::vector<Degree>& weights);
Ranking wp_rank(const ScoreMatrix& matrix);

/// TOPSIS with vector (root-sum-square) normalization; ranking by the
/// closeness coefficient d-/(d+ + d-), 0.5 on degenerate ties.
std::vector<double> topsis_closeness(const ScoreMatrix& matrix);
Ranking topsis(const ScoreMatrix& matrix);

} // namespace mcsc
