// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/poss.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcsc {

/// Compiler-reserved prefix for mutual-exclusion atoms.
inline constexpr const char* carries_else_prefix = "carriesElse_";

struct AgentSpec {
    std::string id;
    AtomSet certain_actions;
    std::vector<ChoiceClause> capability_choices;
};

struct GoalSpec {
    std::string id;       // goal atom
    std::string material; // what gets carried to achieve it
};

struct PlanStep {
    std::string agent;
    Atom action;

    auto operator<=>(const PlanStep&) const = default;
};

struct Plan {
    std::string id;
    std::string goal;
    std::vector<PlanStep> steps;
    PlanStep achiever; // the carry step; must be one of `steps`
    std::optional<Degree> possibility_override;
};

struct ExclusionGroup {
    std::string material;
    std::map<std::string, Atom> carry_actions; // agent -> carry action
};

struct DistanceTable {
    std::map<std::pair<std::string, std::string>, Dec6> agent_to_material;
    std::map<std::string, Dec6> material_to_destination;
};

struct UncertaintyModel {
    enum class Kind { explicit_table, linear_distance };

    Kind kind = Kind::linear_distance;
    std::map<std::pair<std::string, Atom>, Degree> action_possibilities; // explicit_table
    Dec6 pickup_coeff = Dec6::parse("0.001");
    Dec6 delivery_coeff = Dec6::parse("0.002");
};

struct CoalitionProblem {
    std::string title;
    std::string notes;
    std::vector<AgentSpec> agents;
    std::vector<GoalSpec> goals;
    std::vector<Plan> plans;
    std::vector<ExclusionGroup> exclusions;
    DistanceTable distances;
    std::optional<UncertaintyModel> uncertainty;
    std::map<std::string, Degree> goal_weights;

    int agent_index(const std::string& id) const; // -1 when absent
    const GoalSpec* goal(const std::string& id) const;
    const Plan* plan(const std::string& id) const;
    void validate() const;
};

/// Agent `depender` relies on `dependee` performing `action` in `plan` to
/// achieve `goal`; `possibility` is 1 unless an uncertainty model applies.
struct DependenceRelation {
    std::string depender;
    std::string dependee;
    std::string goal;
    std::string plan;
    Atom action;
    Degree possibility = Degree::one();

    auto operator<=>(const DependenceRelation&) const = default;
};

std::vector<DependenceRelation> derive_dependencies(const CoalitionProblem& problem);

/// Possibility that `agent` performs the carry action for `material`
/// (linear-distance model: 1 - pickup_coeff*dist(agent,material)
///  - delivery_coeff*dist(material,destination), clamped to [0,1]).
Degree action_possibility(const CoalitionProblem& problem, const std::string& agent,
                          const Atom& action, const std::string& material);

/// Product of the step possibilities; information-providing steps count 1.
/// A per-plan override replaces the product.
Degree plan_possibility(const CoalitionProblem& problem, const Plan& plan);

Mcs compile_classical(const CoalitionProblem& problem);
Mcs compile_possibilistic(const CoalitionProblem& problem);

struct Assignment {
    std::string agent;
    std::string plan;

    auto operator<=>(const Assignment&) const = default;
};

struct Coalition {
    std::map<std::string, Assignment> assignments;      // goal -> (agent, plan)
    std::map<std::string, Degree> per_goal_necessity;   // classical mode: all 1
    std::size_t source_index = 0;                       // position in the equilibria list
};

struct ExtractionResult {
    std::vector<Coalition> coalitions;
    std::vector<std::string> unachieved_goals; // in no equilibrium at all
    std::vector<std::string> warnings;         // e.g. ambiguous plan resolution
};

ExtractionResult extract_coalitions(const CoalitionProblem& problem,
                                    const std::vector<BeliefState>& equilibria);
ExtractionResult extract_coalitions(const CoalitionProblem& problem,
                                    const std::vector<PossBeliefState>& equilibria);

/// Drops the compiler-reserved carriesElse atoms; what remains is the
/// problem vocabulary (actions and goals).
BeliefState project_state(const BeliefState& state);
PossBeliefState project_state(const PossBeliefState& state);

} // namespace mcsc
