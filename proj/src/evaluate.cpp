// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/evaluate.hpp"

#include "mcsc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mcsc {

namespace {

std::pair<Dec6, Dec6> goal_distances(const CoalitionProblem& problem, const std::string& agent,
                                     const std::string& goal_id) {
    const GoalSpec* goal = problem.goal(goal_id);
    if (!goal)
        fail(Errc::unknown_goal, "coalition assigns undeclared goal '" + goal_id + "'");
    auto pickup = problem.distances.agent_to_material.find({agent, goal->material});
    if (pickup == problem.distances.agent_to_material.end())
        fail(Errc::missing_distance, "no distance (" + agent + ", " + goal->material + ")");
    auto delivery = problem.distances.material_to_destination.find(goal->material);
    if (delivery == problem.distances.material_to_destination.end())
        fail(Errc::missing_distance, "no distance (" + goal->material + ", destination)");
    return {pickup->second, delivery->second};
}

} // namespace

Dec6 coalition_cost(const CoalitionProblem& problem, const Coalition& coalition) {
    Dec6 total;
    for (const auto& [goal_id, assignment] : coalition.assignments) {
        auto [pickup, delivery] = goal_distances(problem, assignment.agent, goal_id);
        total = total + pickup + delivery;
    }
    return total;
}

std::map<std::string, Dec6> per_agent_distances(const CoalitionProblem& problem,
                                                const Coalition& coalition) {
    std::map<std::string, Dec6> distances;
    for (const auto& agent : problem.agents)
        distances[agent.id] = Dec6();
    for (const auto& [goal_id, assignment] : coalition.assignments) {
        auto [pickup, delivery] = goal_distances(problem, assignment.agent, goal_id);
        distances[assignment.agent] = distances[assignment.agent] + pickup + delivery;
    }
    return distances;
}

bool economically_dominates(const CoalitionProblem& problem, const Coalition& a,
                            const Coalition& b) {
    const auto da = per_agent_distances(problem, a);
    const auto db = per_agent_distances(problem, b);
    bool strict = false;
    for (const auto& agent : problem.agents) {
        const Dec6 xa = da.at(agent.id);
        const Dec6 xb = db.at(agent.id);
        if (xa > xb)
            return false;
        if (xa < xb)
            strict = true;
    }
    return strict;
}

namespace {

DependenceGraph graph_from_relations(const CoalitionProblem& problem,
                                     const std::vector<DependenceRelation>& relations) {
    DependenceGraph graph;
    for (const auto& agent : problem.agents)
        graph.nodes.push_back(agent.id);
    for (const auto& rel : relations)
        graph.edges.insert({rel.depender, rel.dependee, rel.goal});
    return graph;
}

} // namespace

DependenceGraph dependence_graph(const CoalitionProblem& problem) {
    return graph_from_relations(problem, derive_dependencies(problem));
}

DependenceGraph coalition_dependence_graph(const CoalitionProblem& problem,
                                           const Coalition& coalition) {
    std::set<std::string> selected_plans;
    for (const auto& [goal, assignment] : coalition.assignments)
        if (!assignment.plan.empty())
            selected_plans.insert(assignment.plan);
    std::vector<DependenceRelation> relations;
    for (const auto& rel : derive_dependencies(problem))
        if (selected_plans.count(rel.plan))
            relations.push_back(rel);
    return graph_from_relations(problem, relations);
}

namespace {

/// Elementary-circuit enumeration (Johnson's blocking scheme) on the vertex
/// graph; parallel labeled edges turn one vertex circuit into several cycles.
class CircuitCounter {
public:
    CircuitCounter(const DependenceGraph& graph, const Limits& limits) : limits_(limits) {
        auto add_node = [&](const std::string& name) {
            if (index_.emplace(name, static_cast<int>(names_.size())).second)
                names_.push_back(name);
        };
        for (const auto& node : graph.nodes)
            add_node(node);
        for (const auto& e : graph.edges) {
            // Nodes mentioned only in edges still take part.
            add_node(e.from);
            add_node(e.to);
        }
        n_ = static_cast<int>(names_.size());
        if (n_ > limits_.max_graph_nodes)
            fail(Errc::graph_too_large,
                 std::to_string(n_) + " nodes exceed the bound of " +
                     std::to_string(limits_.max_graph_nodes));
        mult_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        for (const auto& e : graph.edges) {
            int u = index_.at(e.from);
            int v = index_.at(e.to);
            if (u != v)
                ++mult_at(u, v); // self-loops never join a cycle of length >= 2
        }
    }

    CycleStats run() {
        for (start_ = 0; start_ < n_; ++start_) {
            blocked_.assign(static_cast<std::size_t>(n_), false);
            block_list_.assign(static_cast<std::size_t>(n_), {});
            path_.clear();
            circuit(start_);
        }
        return stats_;
    }

private:
    std::int64_t& mult_at(int u, int v) {
        return mult_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v)];
    }

    void record_cycle() {
        std::int64_t combos = 1;
        const int len = static_cast<int>(path_.size());
        for (int i = 0; i < len; ++i) {
            int u = path_[static_cast<std::size_t>(i)];
            int v = path_[static_cast<std::size_t>((i + 1) % len)];
            combos *= mult_at(u, v);
        }
        stats_.cycles += combos;
        stats_.pair_sum += combos * len;
        if (stats_.cycles > limits_.max_cycles)
            fail(Errc::graph_too_large,
                 "more than " + std::to_string(limits_.max_cycles) + " cycles");
    }

    bool circuit(int v) {
        bool found = false;
        path_.push_back(v);
        blocked_[static_cast<std::size_t>(v)] = true;
        for (int w = start_; w < n_; ++w) {
            if (mult_at(v, w) == 0)
                continue;
            if (w == start_) {
                if (path_.size() >= 2)
                    record_cycle();
                found = true;
            } else if (!blocked_[static_cast<std::size_t>(w)]) {
                if (circuit(w))
                    found = true;
            }
        }
        if (found)
            unblock(v);
        else
            for (int w = start_; w < n_; ++w)
                if (mult_at(v, w) != 0)
                    block_list_[static_cast<std::size_t>(w)].push_back(v);
        path_.pop_back();
        return found;
    }

    void unblock(int v) {
        blocked_[static_cast<std::size_t>(v)] = false;
        auto pending = std::move(block_list_[static_cast<std::size_t>(v)]);
        block_list_[static_cast<std::size_t>(v)].clear();
        for (int w : pending)
            if (blocked_[static_cast<std::size_t>(w)])
                unblock(w);
    }

    Limits limits_;
    std::map<std::string, int> index_;
    std::vector<std::string> names_;
    std::vector<std::int64_t> mult_;
    int n_ = 0;
    int start_ = 0;
    std::vector<bool> blocked_;
    std::vector<std::vector<int>> block_list_;
    std::vector<int> path_;
    CycleStats stats_;
};

} // namespace

CycleStats cycle_pair_count(const DependenceGraph& graph, const Limits& limits) {
    return CircuitCounter(graph, limits).run();
}

std::int64_t conviviality_theta(int n_agents, int n_goals) {
    if (n_agents < 2)
        fail(Errc::graph_too_large, "conviviality needs at least two agents");
    __int128 theta = 0;
    for (int l = 2; l <= n_agents; ++l) {
        __int128 perm = 1;
        for (int k = 0; k < l - 2; ++k)
            perm *= n_agents - 2 - k;
        __int128 power = 1;
        for (int k = 0; k < l; ++k)
            power *= n_goals;
        theta += perm * power;
        if (theta > (__int128{1} << 62))
            fail(Errc::graph_too_large, "conviviality denominator overflows");
    }
    return static_cast<std::int64_t>(theta);
}

std::int64_t conviviality_omega(int n_agents, int n_goals) {
    const __int128 omega =
        __int128{n_agents} * (n_agents - 1) * conviviality_theta(n_agents, n_goals);
    if (omega > (__int128{1} << 62))
        fail(Errc::graph_too_large, "conviviality denominator overflows");
    return static_cast<std::int64_t>(omega);
}

std::string Conviviality::display5() const {
    __int128 numerator = __int128{pairs} * 100000;
    __int128 q = numerator / omega;
    __int128 r = numerator % omega;
    if (r * 2 > omega || (r * 2 == omega && (q & 1) != 0))
        ++q;
    const auto rounded = static_cast<std::int64_t>(q);
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%lld.%05lld", static_cast<long long>(rounded / 100000),
                  static_cast<long long>(rounded % 100000));
    return buffer;
}

Conviviality conviviality(const DependenceGraph& graph, int n_agents, int n_goals,
                          const Limits& limits) {
    Conviviality result;
    result.omega = conviviality_omega(n_agents, n_goals);
    result.pairs = cycle_pair_count(graph, limits).pair_sum;
    return result;
}

void ScoreMatrix::validate() const {
    if (scores.size() != alternatives.size())
        fail(Errc::weight_mismatch, "score matrix has " + std::to_string(scores.size()) +
                                        " rows for " + std::to_string(alternatives.size()) +
                                        " alternatives");
    for (const auto& row : scores)
        if (row.size() != criteria.size())
            fail(Errc::weight_mismatch, "incomplete score row");
    if (weights.size() != criteria.size())
        fail(Errc::weight_mismatch, std::to_string(weights.size()) + " weights for " +
                                        std::to_string(criteria.size()) + " criteria");
    std::int64_t sum = 0;
    for (const auto& w : weights)
        sum += w.micros();
    if (sum < Dec6::scale - 1 || sum > Dec6::scale + 1)
        fail(Errc::weight_mismatch,
             "weights sum to " + Dec6::from_micros(sum).str() + ", expected 1");
    if (!cost_criteria.empty() && cost_criteria.size() != criteria.size())
        fail(Errc::weight_mismatch, "cost-type flags do not match the criteria");
}

namespace {

Ranking make_ranking(std::string method, const std::vector<std::string>& ids,
                     const std::vector<std::string>& displays, const std::vector<double>& values) {
    Ranking ranking;
    ranking.method = std::move(method);
    for (std::size_t i = 0; i < ids.size(); ++i)
        ranking.entries.push_back({ids[i], displays[i], values[i]});
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const Ranking::Entry& a, const Ranking::Entry& b) {
                         if (a.value != b.value)
                             return a.value > b.value;
                         return a.id < b.id;
                     });
    return ranking;
}

std::string fixed6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

// Geometric indexes of six-digit inputs are compared at twelve significant
// digits, so mathematically equal products sort as ties regardless of the
// floating-point summation path.
double quantize12(double v) {
    if (v == 0.0)
        return 0.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(std::fabs(v))) - 11);
    return std::round(v / magnitude) * magnitude;
}

} // namespace

std::vector<Dec6> ws_scores(const ScoreMatrix& matrix) {
    matrix.validate();
    std::vector<Dec6> result;
    for (const auto& row : matrix.scores) {
        Dec6 total;
        for (std::size_t j = 0; j < row.size(); ++j)
            total = total + matrix.weights[j].dec().times(row[j].dec());
        result.push_back(total);
    }
    return result;
}

Ranking weighted_sum(const ScoreMatrix& matrix) {
    const auto scores = ws_scores(matrix);
    std::vector<std::string> displays;
    std::vector<double> values;
    for (const auto& s : scores) {
        displays.push_back(s.str_decimal());
        values.push_back(static_cast<double>(s.micros()));
    }
    return make_ranking("ws", matrix.alternatives, displays, values);
}

double weighted_product_ratio(const std::vector<Degree>& row1, const std::vector<Degree>& row2,
                              const std::vector<Degree>& weights) {
    if (row1.size() != weights.size() || row2.size() != weights.size())
        fail(Errc::weight_mismatch, "weighted product rows do not match the weights");
    double log_ratio = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (row1[j].is_zero() || row2[j].is_zero())
            fail(Errc::non_positive_score, "weighted product needs strictly positive scores");
        const double w = static_cast<double>(weights[j].micros()) / Dec6::scale;
        const double q1 = static_cast<double>(row1[j].micros()) / Dec6::scale;
        const double q2 = static_cast<double>(row2[j].micros()) / Dec6::scale;
        log_ratio += w * (std::log(q1) - std::log(q2));
    }
    return std::exp(log_ratio);
}

Ranking wp_rank(const ScoreMatrix& matrix) {
    matrix.validate();
    std::vector<std::string> displays;
    std::vector<double> values;
    for (const auto& row : matrix.scores) {
        double log_index = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero())
                fail(Errc::non_positive_score, "weighted product needs strictly positive scores");
            log_index += static_cast<double>(matrix.weights[j].micros()) / Dec6::scale *
                         std::log(static_cast<double>(row[j].micros()) / Dec6::scale);
        }
        const double index = quantize12(std::exp(log_index));
        displays.push_back(fixed6(index));
        values.push_back(index);
    }
    return make_ranking("wp", matrix.alternatives, displays, values);
}

std::vector<double> topsis_closeness(const ScoreMatrix& matrix) {
    matrix.validate();
    const std::size_t m = matrix.alternatives.size();
    const std::size_t n = matrix.criteria.size();
    std::vector<std::vector<double>> weighted(m, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double q = static_cast<double>(matrix.scores[i][j].micros()) / Dec6::scale;
            norm += q * q;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0)
            fail(Errc::zero_column, "criterion '" + matrix.criteria[j] + "' is all zeros");
        const double w = static_cast<double>(matrix.weights[j].micros()) / Dec6::scale;
        for (std::size_t i = 0; i < m; ++i)
            weighted[i][j] =
                w * (static_cast<double>(matrix.scores[i][j].micros()) / Dec6::scale) / norm;
    }
    std::vector<double> ideal(n), anti(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = weighted[0][j], hi = weighted[0][j];
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, weighted[i][j]);
            hi = std::max(hi, weighted[i][j]);
        }
        const bool cost = !matrix.cost_criteria.empty() && matrix.cost_criteria[j];
        ideal[j] = cost ? lo : hi;
        anti[j] = cost ? hi : lo;
    }
    std::vector<double> closeness(m);
    for (std::size_t i = 0; i < m; ++i) {
        double d_plus = 0.0, d_minus = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            d_plus += (weighted[i][j] - ideal[j]) * (weighted[i][j] - ideal[j]);
            d_minus += (weighted[i][j] - anti[j]) * (weighted[i][j] - anti[j]);
        }
        d_plus = std::sqrt(d_plus);
        d_minus = std::sqrt(d_minus);
        closeness[i] = (d_plus + d_minus) == 0.0 ? 0.5 : d_minus / (d_plus + d_minus);
    }
    return closeness;
}

Ranking topsis(const ScoreMatrix& matrix) {
    const auto closeness = topsis_closeness(matrix);
    std::vector<std::string> displays;
    for (double c : closeness)
        displays.push_back(fixed6(c));
    return make_ranking("topsis", matrix.alternatives, displays, closeness);
}

} // namespace mcsc
