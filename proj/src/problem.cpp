// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/problem.hpp"

#include "mcsc/errors.hpp"

#include <algorithm>

namespace mcsc {

namespace {

bool is_reserved(const Atom& atom) {
    return atom.rfind(carries_else_prefix, 0) == 0;
}

Atom carries_else_atom(const std::string& material) {
    return carries_else_prefix + material;
}

AtomSet agent_action_atoms(const AgentSpec& agent) {
    AtomSet atoms = agent.certain_actions;
    for (const auto& c : agent.capability_choices)
        atoms.insert(c.alternatives.begin(), c.alternatives.end());
    return atoms;
}

} // namespace

int CoalitionProblem::agent_index(const std::string& id) const {
    for (std::size_t i = 0; i < agents.size(); ++i)
        if (agents[i].id == id)
            return static_cast<int>(i);
    return -1;
}

const GoalSpec* CoalitionProblem::goal(const std::string& id) const {
    for (const auto& g : goals)
        if (g.id == id)
            return &g;
    return nullptr;
}

const Plan* CoalitionProblem::plan(const std::string& id) const {
    for (const auto& p : plans)
        if (p.id == id)
            return &p;
    return nullptr;
}

void CoalitionProblem::validate() const {
    std::set<std::string> agent_ids;
    for (const auto& a : agents) {
        if (!is_valid_atom(a.id))
            fail(Errc::schema_error, "bad agent id '" + a.id + "'");
        if (!agent_ids.insert(a.id).second)
            fail(Errc::schema_error, "duplicate agent id '" + a.id + "'");
        AtomSet seen;
        for (const auto& atom : agent_action_atoms(a)) {
            if (!is_valid_atom(atom) || is_reserved(atom))
                fail(Errc::schema_error, "bad action atom '" + atom + "' of agent " + a.id);
        }
        for (const auto& atom : a.certain_actions)
            seen.insert(atom);
        for (const auto& c : a.capability_choices) {
            if (c.alternatives.empty())
                fail(Errc::schema_error, "empty capability choice of agent " + a.id);
            for (const auto& atom : c.alternatives)
                if (!seen.insert(atom).second)
                    fail(Errc::schema_error,
                         "action '" + atom + "' repeated across agent " + a.id + "'s abilities");
        }
    }
    std::set<std::string> goal_ids;
    for (const auto& g : goals) {
        if (!is_valid_atom(g.id) || is_reserved(g.id))
            fail(Errc::schema_error, "bad goal id '" + g.id + "'");
        if (!goal_ids.insert(g.id).second)
            fail(Errc::schema_error, "duplicate goal id '" + g.id + "'");
        if (g.material.empty() || !is_valid_atom(g.material))
            fail(Errc::schema_error, "goal '" + g.id + "' needs an identifier material");
    }
    std::set<std::string> plan_ids;
    for (const auto& p : plans) {
        if (!plan_ids.insert(p.id).second)
            fail(Errc::schema_error, "duplicate plan id '" + p.id + "'");
        if (!goal_ids.count(p.goal))
            fail(Errc::unknown_goal, "plan " + p.id + " references goal '" + p.goal + "'");
        if (p.steps.empty())
            fail(Errc::schema_error, "plan " + p.id + " has no steps");
        for (const auto& s : p.steps) {
            int idx = agent_index(s.agent);
            if (idx < 0)
                fail(Errc::unknown_agent, "plan " + p.id + " references agent '" + s.agent + "'");
            if (!agent_action_atoms(agents[static_cast<std::size_t>(idx)]).count(s.action))
                fail(Errc::unknown_action, "plan " + p.id + ": agent " + s.agent +
                                               " cannot perform '" + s.action + "'");
        }
        if (std::find(p.steps.begin(), p.steps.end(), p.achiever) == p.steps.end())
            fail(Errc::schema_error, "plan " + p.id + ": achiever is not one of its steps");
    }
    for (const auto& e : exclusions) {
        if (e.material.empty() || !is_valid_atom(e.material))
            fail(Errc::schema_error, "bad exclusion material '" + e.material + "'");
        for (const auto& [agent, action] : e.carry_actions) {
            int idx = agent_index(agent);
            if (idx < 0)
                fail(Errc::unknown_agent, "exclusion for '" + e.material + "' names agent '" +
                                              agent + "'");
            if (!agent_action_atoms(agents[static_cast<std::size_t>(idx)]).count(action))
                fail(Errc::unknown_action, "exclusion for '" + e.material + "': agent " + agent +
                                               " cannot perform '" + action + "'");
        }
    }
    if (!goal_weights.empty()) {
        std::int64_t sum = 0;
        for (const auto& [goal_id, w] : goal_weights) {
            if (!goal_ids.count(goal_id))
                fail(Errc::unknown_goal, "weight for undeclared goal '" + goal_id + "'");
            sum += w.micros();
        }
        if (sum < Dec6::scale - 1 || sum > Dec6::scale + 1)
            fail(Errc::weight_mismatch, "goal weights sum to " +
                                            Dec6::from_micros(sum).str() + ", expected 1");
    }
}

std::vector<DependenceRelation> derive_dependencies(const CoalitionProblem& problem) {
    problem.validate();
    const bool uncertain = problem.uncertainty.has_value();
    std::vector<DependenceRelation> relations;
    for (const auto& p : problem.plans) {
        const GoalSpec* goal = problem.goal(p.goal);
        for (const auto& s : p.steps) {
            DependenceRelation rel;
            rel.depender = p.achiever.agent;
            rel.dependee = s.agent;
            rel.goal = p.goal;
            rel.plan = p.id;
            rel.action = s.action;
            if (uncertain && s == p.achiever)
                rel.possibility = action_possibility(problem, s.agent, s.action, goal->material);
            relations.push_back(std::move(rel));
        }
    }
    return relations;
}

Degree action_possibility(const CoalitionProblem& problem, const std::string& agent,
                          const Atom& action, const std::string& material) {
    if (!problem.uncertainty)
        return Degree::one();
    const UncertaintyModel& model = *problem.uncertainty;
    if (problem.agent_index(agent) < 0)
        fail(Errc::unknown_agent, "action_possibility: agent '" + agent + "'");
    if (model.kind == UncertaintyModel::Kind::explicit_table) {
        auto it = model.action_possibilities.find({agent, action});
        if (it == model.action_possibilities.end())
            fail(Errc::missing_possibility,
                 "no possibility for (" + agent + ", " + action + ")");
        return it->second;
    }
    auto pickup = problem.distances.agent_to_material.find({agent, material});
    if (pickup == problem.distances.agent_to_material.end())
        fail(Errc::missing_distance, "no distance (" + agent + ", " + material + ")");
    auto delivery = problem.distances.material_to_destination.find(material);
    if (delivery == problem.distances.material_to_destination.end())
        fail(Errc::missing_distance, "no distance (" + material + ", destination)");
    const Dec6 risk = model.pickup_coeff.times(pickup->second) +
                      model.delivery_coeff.times(delivery->second);
    if (risk >= Dec6::from_int(1))
        return Degree::zero(); // clamp
    return Degree(Dec6::from_int(1) - risk);
}

Degree plan_possibility(const CoalitionProblem& problem, const Plan& plan) {
    if (plan.possibility_override)
        return *plan.possibility_override;
    const GoalSpec* goal = problem.goal(plan.goal);
    if (!goal)
        fail(Errc::unknown_goal, "plan " + plan.id + " references goal '" + plan.goal + "'");
    Degree product = Degree::one();
    for (const auto& s : plan.steps) {
        // Only the carry step is uncertain; information-providing steps
        // succeed with possibility 1.
        if (s == plan.achiever)
            product = product.times(
                action_possibility(problem, s.agent, s.action, goal->material));
    }
    return product;
}

namespace {

Mcs compile(const CoalitionProblem& problem, bool possibilistic) {
    problem.validate();
    if (possibilistic && !problem.uncertainty)
        fail(Errc::missing_possibility, "possibilistic compilation needs an uncertainty model");

    Mcs mcs;
    mcs.possibilistic = possibilistic;
    for (const auto& agent : problem.agents) {
        Context ctx;
        ctx.name = agent.id;
        ctx.program.semantics = Semantics::choice_minimal_model;
        for (const auto& action : agent.certain_actions)
            ctx.program.rules.push_back(PossRule{Rule{action, {}, {}}, Degree::one()});
        ctx.program.choices = agent.capability_choices;
        ctx.program.alphabet = agent_action_atoms(agent);
        mcs.contexts.push_back(std::move(ctx));
    }

    auto ctx_of = [&](const std::string& agent) { return problem.agent_index(agent); };

    // One bridge rule per plan: the goal lands in the achiever's context,
    // guarded by "nobody else carries this material".
    for (const auto& plan : problem.plans) {
        const GoalSpec* goal = problem.goal(plan.goal);
        const int target = ctx_of(plan.achiever.agent);
        BridgeRule rule;
        rule.target = target;
        rule.head = goal->id;
        for (const auto& s : plan.steps)
            rule.pos.insert({ctx_of(s.agent), s.action});
        rule.neg.insert({target, carries_else_atom(goal->material)});
        rule.necessity = possibilistic ? plan_possibility(problem, plan) : Degree::one();
        mcs.contexts[static_cast<std::size_t>(target)].program.alphabet.insert(goal->id);
        mcs.contexts[static_cast<std::size_t>(target)]
            .program.alphabet.insert(carries_else_atom(goal->material));
        mcs.bridges.push_back(std::move(rule));
    }

    // Mutual exclusion: inside every >=2-member group, each member imports
    // carriesElse_m from every other member's carry action and locally
    // forbids carrying m itself while carriesElse_m holds. The constraint is
    // what makes duplicate-carry states non-equilibria.
    for (const auto& group : problem.exclusions) {
        if (group.carry_actions.size() < 2)
            continue;
        const Atom marker = carries_else_atom(group.material);
        for (const auto& [member, action] : group.carry_actions) {
            const int target = ctx_of(member);
            auto& program = mcs.contexts[static_cast<std::size_t>(target)].program;
            program.alphabet.insert(marker);
            program.denies.push_back(DenyClause{{action, marker}});
            for (const auto& [other, other_action] : group.carry_actions) {
                if (other == member)
                    continue;
                BridgeRule rule;
                rule.target = target;
                rule.head = marker;
                rule.pos.insert({ctx_of(other), other_action});
                rule.necessity = Degree::one();
                mcs.bridges.push_back(std::move(rule));
            }
        }
    }

    mcs.validate();
    return mcs;
}

} // namespace

Mcs compile_classical(const CoalitionProblem& problem) {
    return compile(problem, false);
}

Mcs compile_possibilistic(const CoalitionProblem& problem) {
    return compile(problem, true);
}

namespace {

ExtractionResult extract(const CoalitionProblem& problem,
                         const std::vector<BeliefState>& plain_states,
                         const std::vector<PossBeliefState>* poss_states) {
    ExtractionResult result;
    std::set<std::string> achieved_somewhere;

    for (std::size_t e = 0; e < plain_states.size(); ++e) {
        const BeliefState& state = plain_states[e];
        Coalition coalition;
        coalition.source_index = e;
        for (const auto& goal : problem.goals) {
            int holder = -1;
            for (std::size_t i = 0; i < state.size(); ++i)
                if (state[i].count(goal.id)) {
                    holder = static_cast<int>(i);
                    break;
                }
            if (holder < 0)
                continue;
            achieved_somewhere.insert(goal.id);
            const std::string agent = problem.agents[static_cast<std::size_t>(holder)].id;

            // The plan whose bridge rule fired: applicable, right goal,
            // right achiever.
            std::vector<std::string> fired;
            for (const auto& plan : problem.plans) {
                if (plan.goal != goal.id || plan.achiever.agent != agent)
                    continue;
                bool applicable = true;
                for (const auto& s : plan.steps) {
                    const int idx = problem.agent_index(s.agent);
                    if (!state[static_cast<std::size_t>(idx)].count(s.action)) {
                        applicable = false;
                        break;
                    }
                }
                if (applicable)
                    fired.push_back(plan.id);
            }
            Assignment assignment;
            assignment.agent = agent;
            if (fired.empty()) {
                // Goal atom present without a visibly fired plan; leave the
                // plan blank rather than invent one.
                result.warnings.push_back("goal " + goal.id + " in equilibrium #" +
                                          std::to_string(e + 1) + " has no applicable plan");
            } else {
                std::sort(fired.begin(), fired.end());
                if (fired.size() > 1)
                    result.warnings.push_back(
                        "AmbiguousPlan: goal " + goal.id + " in equilibrium #" +
                        std::to_string(e + 1) + " fired " + std::to_string(fired.size()) +
                        " plans; using " + fired.front());
                assignment.plan = fired.front();
            }
            Degree necessity = Degree::one();
            if (poss_states) {
                const auto& atom_map = (*poss_states)[e][static_cast<std::size_t>(holder)];
                auto it = atom_map.find(goal.id);
                if (it != atom_map.end())
                    necessity = it->second;
            }
            coalition.per_goal_necessity.emplace(goal.id, necessity);
            coalition.assignments.emplace(goal.id, std::move(assignment));
        }
        result.coalitions.push_back(std::move(coalition));
    }

    for (const auto& goal : problem.goals)
        if (!achieved_somewhere.count(goal.id))
            result.unachieved_goals.push_back(goal.id);
    return result;
}

} // namespace

ExtractionResult extract_coalitions(const CoalitionProblem& problem,
                                    const std::vector<BeliefState>& equilibria) {
    return extract(problem, equilibria, nullptr);
}

ExtractionResult extract_coalitions(const CoalitionProblem& problem,
                                    const std::vector<PossBeliefState>& equilibria) {
    std::vector<BeliefState> plain;
    plain.reserve(equilibria.size());
    for (const auto& s : equilibria)
        plain.push_back(classical_projection(s));
    return extract(problem, plain, &equilibria);
}

BeliefState project_state(const BeliefState& state) {
    BeliefState projected(state.size());
    for (std::size_t i = 0; i < state.size(); ++i)
        for (const auto& atom : state[i])
            if (!is_reserved(atom))
                projected[i].insert(atom);
    return projected;
}

PossBeliefState project_state(const PossBeliefState& state) {
    PossBeliefState projected(state.size());
    for (std::size_t i = 0; i < state.size(); ++i)
        for (const auto& [atom, degree] : state[i])
            if (!is_reserved(atom))
                projected[i].emplace(atom, degree);
    return projected;
}

} // namespace mcsc
