// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/problem_io.hpp"

#include "mcsc/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mcsc {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& message) {
    fail(Errc::schema_error, "at " + path + ": " + message);
}

const json& member(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object())
        bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        bad(path, std::string("missing key '") + key + "'");
    return *it;
}

std::string get_string(const json& value, const std::string& path) {
    if (!value.is_string())
        bad(path, "expected a string");
    return value.get<std::string>();
}

Dec6 get_decimal(const json& value, const std::string& path) {
    if (value.is_number_unsigned() || value.is_number_integer()) {
        auto v = value.get<std::int64_t>();
        if (v < 0)
            bad(path, "expected a nonnegative number");
        return Dec6::from_int(v);
    }
    // Floats are re-read from the document text representation to keep the
    // six-digit decimals exact.
    if (value.is_number_float()) {
        std::ostringstream text;
        text << value;
        try {
            return Dec6::parse(text.str());
        } catch (const Error& e) {
            bad(path, e.what());
        }
    }
    if (value.is_string()) {
        try {
            return Dec6::parse(value.get<std::string>());
        } catch (const Error& e) {
            bad(path, e.what());
        }
    }
    bad(path, "expected a decimal number");
}

Degree get_degree(const json& value, const std::string& path) {
    const Dec6 v = get_decimal(value, path);
    if (v > Dec6::from_int(1))
        bad(path, "degree " + v.str() + " exceeds 1");
    return Degree(v);
}

PlanStep get_step(const json& value, const std::string& path) {
    PlanStep step;
    step.agent = get_string(member(value, path, "agent"), path + ".agent");
    step.action = get_string(member(value, path, "action"), path + ".action");
    return step;
}

} // namespace

CoalitionProblem parse_problem(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::parse_error, e.what());
    }
    if (!doc.is_object())
        bad("$", "expected a JSON object");

    static const std::set<std::string> known_keys = {
        "title", "notes",      "agents",      "goals",  "plans",
        "exclusions", "distances", "uncertainty", "weights"};
    for (const auto& [key, value] : doc.items())
        if (!known_keys.count(key))
            bad("$." + key, "unknown key");

    CoalitionProblem problem;
    if (doc.contains("title"))
        problem.title = get_string(doc["title"], "$.title");
    if (doc.contains("notes"))
        problem.notes = get_string(doc["notes"], "$.notes");

    const json& agents = member(doc, "$", "agents");
    if (!agents.is_array())
        bad("$.agents", "expected an array");
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const std::string path = "$.agents[" + std::to_string(i) + "]";
        AgentSpec agent;
        agent.id = get_string(member(agents[i], path, "id"), path + ".id");
        if (agents[i].contains("certain_actions")) {
            const json& actions = agents[i]["certain_actions"];
            if (!actions.is_array())
                bad(path + ".certain_actions", "expected an array");
            for (std::size_t k = 0; k < actions.size(); ++k)
                agent.certain_actions.insert(get_string(
                    actions[k], path + ".certain_actions[" + std::to_string(k) + "]"));
        }
        if (agents[i].contains("capability_choices")) {
            const json& choices = agents[i]["capability_choices"];
            if (!choices.is_array())
                bad(path + ".capability_choices", "expected an array of arrays");
            for (std::size_t k = 0; k < choices.size(); ++k) {
                const std::string cpath = path + ".capability_choices[" + std::to_string(k) + "]";
                if (!choices[k].is_array() || choices[k].empty())
                    bad(cpath, "expected a nonempty array");
                ChoiceClause clause;
                for (std::size_t a = 0; a < choices[k].size(); ++a)
                    clause.alternatives.push_back(
                        get_string(choices[k][a], cpath + "[" + std::to_string(a) + "]"));
                agent.capability_choices.push_back(std::move(clause));
            }
        }
        problem.agents.push_back(std::move(agent));
    }

    const json& goals = member(doc, "$", "goals");
    if (!goals.is_array())
        bad("$.goals", "expected an array");
    for (std::size_t i = 0; i < goals.size(); ++i) {
        const std::string path = "$.goals[" + std::to_string(i) + "]";
        GoalSpec goal;
        goal.id = get_string(member(goals[i], path, "id"), path + ".id");
        goal.material = get_string(member(goals[i], path, "material"), path + ".material");
        problem.goals.push_back(std::move(goal));
    }

    const json& plans = member(doc, "$", "plans");
    if (!plans.is_array())
        bad("$.plans", "expected an array");
    for (std::size_t i = 0; i < plans.size(); ++i) {
        const std::string path = "$.plans[" + std::to_string(i) + "]";
        Plan plan;
        plan.id = get_string(member(plans[i], path, "id"), path + ".id");
        plan.goal = get_string(member(plans[i], path, "goal"), path + ".goal");
        const json& steps = member(plans[i], path, "steps");
        if (!steps.is_array() || steps.empty())
            bad(path + ".steps", "expected a nonempty array");
        for (std::size_t k = 0; k < steps.size(); ++k)
            plan.steps.push_back(get_step(steps[k], path + ".steps[" + std::to_string(k) + "]"));
        plan.achiever = get_step(member(plans[i], path, "achiever"), path + ".achiever");
        if (plans[i].contains("possibility"))
            plan.possibility_override =
                get_degree(plans[i]["possibility"], path + ".possibility");
        problem.plans.push_back(std::move(plan));
    }

    if (doc.contains("exclusions")) {
        const json& exclusions = doc["exclusions"];
        if (!exclusions.is_array())
            bad("$.exclusions", "expected an array");
        for (std::size_t i = 0; i < exclusions.size(); ++i) {
            const std::string path = "$.exclusions[" + std::to_string(i) + "]";
            ExclusionGroup group;
            group.material = get_string(member(exclusions[i], path, "material"),
                                        path + ".material");
            const json& carries = member(exclusions[i], path, "carry_actions");
            if (!carries.is_object())
                bad(path + ".carry_actions", "expected an object agent -> action");
            for (const auto& [agent, action] : carries.items())
                group.carry_actions.emplace(
                    agent, get_string(action, path + ".carry_actions." + agent));
            problem.exclusions.push_back(std::move(group));
        }
    }

    if (doc.contains("distances")) {
        const json& distances = doc["distances"];
        if (distances.contains("agent_to_material")) {
            const json& table = distances["agent_to_material"];
            if (!table.is_object())
                bad("$.distances.agent_to_material", "expected an object");
            for (const auto& [agent, row] : table.items()) {
                const std::string path = "$.distances.agent_to_material." + agent;
                if (!row.is_object())
                    bad(path, "expected an object material -> distance");
                for (const auto& [material, value] : row.items())
                    problem.distances.agent_to_material.emplace(
                        std::make_pair(agent, material),
                        get_decimal(value, path + "." + material));
            }
        }
        if (distances.contains("material_to_destination")) {
            const json& table = distances["material_to_destination"];
            if (!table.is_object())
                bad("$.distances.material_to_destination", "expected an object");
            for (const auto& [material, value] : table.items())
                problem.distances.material_to_destination.emplace(
                    material,
                    get_decimal(value, "$.distances.material_to_destination." + material));
        }
    }

    if (doc.contains("uncertainty")) {
        const json& uncertainty = doc["uncertainty"];
        UncertaintyModel model;
        const std::string kind =
            get_string(member(uncertainty, "$.uncertainty", "model"), "$.uncertainty.model");
        if (kind == "explicit") {
            model.kind = UncertaintyModel::Kind::explicit_table;
            const json& actions = member(uncertainty, "$.uncertainty", "actions");
            if (!actions.is_object())
                bad("$.uncertainty.actions", "expected an object agent -> {action: degree}");
            for (const auto& [agent, row] : actions.items()) {
                const std::string path = "$.uncertainty.actions." + agent;
                if (!row.is_object())
                    bad(path, "expected an object action -> degree");
                for (const auto& [action, value] : row.items())
                    model.action_possibilities.emplace(std::make_pair(agent, action),
                                                       get_degree(value, path + "." + action));
            }
        } else if (kind == "linear_distance") {
            model.kind = UncertaintyModel::Kind::linear_distance;
            if (uncertainty.contains("pickup_coeff"))
                model.pickup_coeff =
                    get_decimal(uncertainty["pickup_coeff"], "$.uncertainty.pickup_coeff");
            if (uncertainty.contains("delivery_coeff"))
                model.delivery_coeff =
                    get_decimal(uncertainty["delivery_coeff"], "$.uncertainty.delivery_coeff");
        } else {
            bad("$.uncertainty.model", "expected 'explicit' or 'linear_distance'");
        }
        problem.uncertainty = std::move(model);
    }

    if (doc.contains("weights")) {
        const json& weights = doc["weights"];
        if (!weights.is_object())
            bad("$.weights", "expected an object goal -> weight");
        for (const auto& [goal, value] : weights.items())
            problem.goal_weights.emplace(goal, get_degree(value, "$.weights." + goal));
    }

    problem.validate();
    return problem;
}

CoalitionProblem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

} // namespace mcsc
