// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/cli.hpp"

#include "mcsc/errors.hpp"
#include "mcsc/evaluate.hpp"
#include "mcsc/parse_mcs.hpp"
#include "mcsc/problem_io.hpp"
#include "mcsc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace mcsc {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_inconsistent = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string eq_label(std::size_t index) {
    return "E" + std::to_string(index + 1);
}

std::vector<std::string> atom_list(const AtomSet& atoms) {
    return {atoms.begin(), atoms.end()};
}

struct Options {
    std::string file;
    std::string mode; // empty = pick a default
    std::string metric;
    std::string weights;
    std::string format = "text";
    int max_atoms = 24;
    bool emit_mcs = false;
    bool emit_dot = false;
    bool all_diagnostics = false;
};

Limits make_limits(const Options& opt) {
    Limits limits;
    limits.max_atoms = opt.max_atoms;
    return limits;
}

void emit(std::ostream& out, const Options& opt, const ResultReport& report) {
    out << (opt.format == "json" ? render_json(report) : render_text(report));
}

struct Solved {
    CoalitionProblem problem;
    bool possibilistic = false;
    std::vector<BeliefState> full_states;     // equilibria, unprojected
    std::vector<PossBeliefState> poss_states; // annotated equilibria (poss mode)
    ExtractionResult extraction;
};

Solved solve_problem(const std::string& path, bool possibilistic, const Limits& limits) {
    Solved solved;
    solved.problem = load_problem_file(path);
    solved.possibilistic = possibilistic;
    if (possibilistic) {
        const Mcs mcs = compile_possibilistic(solved.problem);
        solved.poss_states = poss_equilibria(mcs, limits);
        for (const auto& s : solved.poss_states)
            solved.full_states.push_back(classical_projection(s));
        solved.extraction = extract_coalitions(solved.problem, solved.poss_states);
    } else {
        const Mcs mcs = compile_classical(solved.problem);
        solved.full_states = enumerate_equilibria(mcs, limits);
        solved.extraction = extract_coalitions(solved.problem, solved.full_states);
    }
    return solved;
}

ResultReport problem_report(const std::string& command, const Solved& solved) {
    ResultReport report;
    report.command = command;
    report.mode = solved.possibilistic ? "possibilistic" : "classical";
    report.inconsistent = solved.full_states.empty();

    for (std::size_t e = 0; e < solved.full_states.size(); ++e) {
        ResultReport::EquilibriumEntry entry;
        entry.id = eq_label(e);
        const BeliefState& full = solved.full_states[e];
        const BeliefState projected = project_state(full);
        for (std::size_t i = 0; i < full.size(); ++i) {
            ResultReport::ContextBeliefs ctx;
            ctx.context = solved.problem.agents[i].id;
            ctx.atoms = atom_list(projected[i]);
            if (projected[i] != full[i])
                ctx.raw_atoms = atom_list(full[i]);
            if (solved.possibilistic) {
                const PossAtomSet projected_poss = project_state(solved.poss_states[e])[i];
                for (const auto& [atom, degree] : projected_poss)
                    ctx.annotated.emplace_back(atom, degree.str());
            }
            entry.contexts.push_back(std::move(ctx));
        }
        report.equilibria.push_back(std::move(entry));
    }

    for (std::size_t c = 0; c < solved.extraction.coalitions.size(); ++c) {
        const Coalition& coalition = solved.extraction.coalitions[c];
        ResultReport::CoalitionEntry entry;
        entry.id = eq_label(coalition.source_index);
        for (const auto& [goal, assignment] : coalition.assignments) {
            ResultReport::AssignmentEntry a;
            a.goal = goal;
            a.agent = assignment.agent;
            a.plan = assignment.plan;
            if (solved.possibilistic)
                a.necessity = coalition.per_goal_necessity.at(goal).str();
            entry.assignments.push_back(std::move(a));
        }
        for (const auto& goal : solved.problem.goals)
            if (!coalition.assignments.count(goal.id))
                entry.unassigned_goals.push_back(goal.id);
        report.coalitions.push_back(std::move(entry));
    }

    report.diagnostics = solved.extraction.warnings;
    for (const auto& goal : solved.extraction.unachieved_goals)
        report.diagnostics.push_back("goal " + goal + " is unachievable in every equilibrium");
    return report;
}

std::string dot_dump(const CoalitionProblem& problem) {
    const DependenceGraph graph = dependence_graph(problem);
    std::ostringstream out;
    out << "digraph dependence {\n";
    for (const auto& node : graph.nodes)
        out << "  \"" << node << "\";\n";
    for (const auto& e : graph.edges)
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.goal << "\"];\n";
    out << "}\n";
    return out.str();
}

// --- rank ----------------------------------------------------------------

struct ParsedWeights {
    std::vector<Degree> positional;
    std::map<std::string, Degree> keyed;
};

ParsedWeights parse_weights(const std::string& text) {
    ParsedWeights parsed;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty())
            fail(Errc::weight_mismatch, "empty weight entry");
        auto eq = item.find('=');
        try {
            if (eq == std::string::npos) {
                if (!parsed.keyed.empty())
                    fail(Errc::weight_mismatch, "mixing keyed and positional weights");
                parsed.positional.push_back(Degree::parse(item));
            } else {
                if (!parsed.positional.empty())
                    fail(Errc::weight_mismatch, "mixing keyed and positional weights");
                parsed.keyed.emplace(item.substr(0, eq), Degree::parse(item.substr(eq + 1)));
            }
        } catch (const Error& e) {
            if (e.code() == Errc::weight_mismatch)
                throw;
            fail(Errc::weight_mismatch, "bad weight '" + item + "': " + e.what());
        }
    }
    return parsed;
}

std::vector<Degree> equal_weights(std::size_t n) {
    std::vector<Degree> weights(n, Degree::from_micros(Dec6::scale / static_cast<std::int64_t>(n)));
    std::int64_t remainder = Dec6::scale % static_cast<std::int64_t>(n);
    for (std::size_t i = 0; remainder > 0; ++i, --remainder)
        weights[i] = Degree::from_micros(weights[i].micros() + 1);
    return weights;
}

bool agent_regular(const Solved& solved) {
    for (const auto& coalition : solved.extraction.coalitions) {
        std::set<std::string> agents;
        for (const auto& [goal, assignment] : coalition.assignments)
            if (!agents.insert(assignment.agent).second)
                return false;
        if (agents.size() != solved.problem.agents.size())
            return false;
    }
    return !solved.extraction.coalitions.empty();
}

/// Necessity matrix. Column layout per the running example: one criterion
/// per agent when assignments are one-to-one (the weighted sums then match
/// the printed ones), otherwise one criterion per goal with 0 for
/// unachieved goals.
ScoreMatrix build_matrix(const Solved& solved, const ParsedWeights& weights) {
    bool by_goal = false;
    if (!weights.keyed.empty()) {
        const auto& first = weights.keyed.begin()->first;
        by_goal = solved.problem.goal(first) != nullptr;
        if (!by_goal && solved.problem.agent_index(first) < 0)
            fail(Errc::weight_mismatch, "weight key '" + first + "' is neither agent nor goal");
    } else if (!weights.positional.empty() || solved.problem.goal_weights.empty()) {
        by_goal = !agent_regular(solved);
    } else {
        by_goal = true; // document-level weights are goal-keyed
    }

    ScoreMatrix matrix;
    if (solved.problem.goals.empty())
        fail(Errc::weight_mismatch, "nothing to rank: the problem declares no goals");
    for (const auto& coalition : solved.extraction.coalitions)
        matrix.alternatives.push_back(eq_label(coalition.source_index));

    if (by_goal) {
        for (const auto& goal : solved.problem.goals)
            matrix.criteria.push_back(goal.id);
        for (const auto& coalition : solved.extraction.coalitions) {
            std::vector<Degree> row;
            for (const auto& goal : solved.problem.goals) {
                auto it = coalition.per_goal_necessity.find(goal.id);
                row.push_back(it == coalition.per_goal_necessity.end() ? Degree::zero()
                                                                       : it->second);
            }
            matrix.scores.push_back(std::move(row));
        }
    } else {
        if (!agent_regular(solved))
            fail(Errc::weight_mismatch,
                 "per-agent criteria need exactly one goal per agent in every coalition");
        for (const auto& agent : solved.problem.agents)
            matrix.criteria.push_back(agent.id);
        for (const auto& coalition : solved.extraction.coalitions) {
            std::map<std::string, Degree> by_agent;
            for (const auto& [goal, assignment] : coalition.assignments)
                by_agent[assignment.agent] = coalition.per_goal_necessity.at(goal);
            std::vector<Degree> row;
            for (const auto& agent : solved.problem.agents)
                row.push_back(by_agent.at(agent.id));
            matrix.scores.push_back(std::move(row));
        }
    }

    if (!weights.positional.empty()) {
        matrix.weights = weights.positional;
    } else if (!weights.keyed.empty()) {
        for (const auto& criterion : matrix.criteria) {
            auto it = weights.keyed.find(criterion);
            if (it == weights.keyed.end())
                fail(Errc::weight_mismatch, "no weight for criterion '" + criterion + "'");
            matrix.weights.push_back(it->second);
        }
        if (weights.keyed.size() != matrix.criteria.size())
            fail(Errc::weight_mismatch, "weights name unknown criteria");
    } else if (by_goal && !solved.problem.goal_weights.empty()) {
        for (const auto& criterion : matrix.criteria)
            matrix.weights.push_back(solved.problem.goal_weights.at(criterion));
    } else {
        matrix.weights = equal_weights(matrix.criteria.size());
    }
    matrix.validate();
    return matrix;
}

void fill_rank_report(ResultReport& report, const Solved& solved, const std::string& metric,
                      const ParsedWeights& weights, const Limits& limits) {
    const auto& coalitions = solved.extraction.coalitions;
    if (metric == "cost") {
        report.criteria = {"cost"};
        Ranking ranking;
        ranking.method = "cost";
        for (const auto& coalition : coalitions) {
            const Dec6 cost = coalition_cost(solved.problem, coalition);
            report.metric_rows.push_back({eq_label(coalition.source_index), {cost.str()}});
            // Cheaper is better: negate for the descending sort.
            ranking.entries.push_back({eq_label(coalition.source_index), cost.str(),
                                       -static_cast<double>(cost.micros())});
        }
        std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                         [](const Ranking::Entry& a, const Ranking::Entry& b) {
                             if (a.value != b.value)
                                 return a.value > b.value;
                             return a.id < b.id;
                         });
        report.ranking = std::move(ranking);
        return;
    }
    if (metric == "conviviality") {
        report.criteria = {"conviviality"};
        Ranking ranking;
        ranking.method = "conviviality";
        const int n_agents = static_cast<int>(solved.problem.agents.size());
        const int n_goals = static_cast<int>(solved.problem.goals.size());
        for (const auto& coalition : coalitions) {
            const DependenceGraph graph = coalition_dependence_graph(solved.problem, coalition);
            const Conviviality conv = conviviality(graph, n_agents, n_goals, limits);
            const std::string display = conv.display5();
            report.metric_rows.push_back({eq_label(coalition.source_index), {display}});
            ranking.entries.push_back({eq_label(coalition.source_index), display,
                                       static_cast<double>(conv.pairs) /
                                           static_cast<double>(conv.omega)});
        }
        std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                         [](const Ranking::Entry& a, const Ranking::Entry& b) {
                             if (a.value != b.value)
                                 return a.value > b.value;
                             return a.id < b.id;
                         });
        report.ranking = std::move(ranking);
        return;
    }

    const ScoreMatrix matrix = build_matrix(solved, weights);
    report.criteria = matrix.criteria;
    for (std::size_t i = 0; i < matrix.alternatives.size(); ++i) {
        ResultReport::MetricRow row;
        row.id = matrix.alternatives[i];
        for (const auto& score : matrix.scores[i])
            row.scores.push_back(score.str());
        report.metric_rows.push_back(std::move(row));
    }
    if (metric == "ws")
        report.ranking = weighted_sum(matrix);
    else if (metric == "wp")
        report.ranking = wp_rank(matrix);
    else
        report.ranking = topsis(matrix);
}

// --- check ---------------------------------------------------------------

int run_check(const Options& opt, std::ostream& out) {
    const McsDocument doc = parse_mcs(read_file(opt.file));
    const Limits limits = make_limits(opt);
    ResultReport report;
    report.command = "check";

    if (opt.mode == "possibilistic") {
        report.mode = "possibilistic";
        const auto states = poss_equilibria(doc.mcs, limits);
        report.inconsistent = states.empty();
        for (std::size_t e = 0; e < states.size(); ++e) {
            ResultReport::EquilibriumEntry entry;
            entry.id = eq_label(e);
            for (std::size_t i = 0; i < states[e].size(); ++i) {
                ResultReport::ContextBeliefs ctx;
                ctx.context = doc.mcs.contexts[i].name;
                for (const auto& [atom, degree] : states[e][i]) {
                    ctx.atoms.push_back(atom);
                    ctx.annotated.emplace_back(atom, degree.str());
                }
                entry.contexts.push_back(std::move(ctx));
            }
            report.equilibria.push_back(std::move(entry));
        }
        emit(out, opt, report);
        return report.inconsistent ? exit_inconsistent : exit_ok;
    }

    report.mode = "classical";
    const ConsistencyReport consistency = check_consistency(doc.mcs, limits);
    report.inconsistent = !consistency.consistent;
    for (std::size_t e = 0; e < consistency.equilibria.size(); ++e) {
        ResultReport::EquilibriumEntry entry;
        entry.id = eq_label(e);
        for (std::size_t i = 0; i < consistency.equilibria[e].size(); ++i) {
            ResultReport::ContextBeliefs ctx;
            ctx.context = doc.mcs.contexts[i].name;
            ctx.atoms = atom_list(consistency.equilibria[e][i]);
            entry.contexts.push_back(std::move(ctx));
        }
        report.equilibria.push_back(std::move(entry));
    }
    if (opt.all_diagnostics) {
        report.diagnostics.push_back("candidates checked: " +
                                     std::to_string(consistency.candidates_checked));
        for (const auto& failure : consistency.failures) {
            std::string line = "candidate " + to_string(failure.state) + " rejected by:";
            for (int i : failure.failed_contexts)
                line += " " + doc.mcs.contexts[static_cast<std::size_t>(i)].name;
            report.diagnostics.push_back(std::move(line));
        }
    }
    emit(out, opt, report);
    return report.inconsistent ? exit_inconsistent : exit_ok;
}

int run_solve(const Options& opt, std::ostream& out) {
    const Limits limits = make_limits(opt);
    const bool possibilistic = opt.mode == "possibilistic";
    if (opt.emit_mcs) {
        const CoalitionProblem problem = load_problem_file(opt.file);
        out << print_mcs(possibilistic ? compile_possibilistic(problem)
                                       : compile_classical(problem));
        return exit_ok;
    }
    if (opt.emit_dot) {
        out << dot_dump(load_problem_file(opt.file));
        return exit_ok;
    }
    const Solved solved = solve_problem(opt.file, possibilistic, limits);
    const ResultReport report = problem_report("solve", solved);
    emit(out, opt, report);
    return report.inconsistent ? exit_inconsistent : exit_ok;
}

int run_rank(const Options& opt, std::ostream& out) {
    const Limits limits = make_limits(opt);
    bool possibilistic;
    if (!opt.mode.empty()) {
        possibilistic = opt.mode == "possibilistic";
    } else {
        // Certainty-based metrics are degenerate without degrees; default to
        // the possibilistic pipeline whenever the document models uncertainty.
        const CoalitionProblem probe = load_problem_file(opt.file);
        possibilistic = probe.uncertainty.has_value();
    }
    const Solved solved = solve_problem(opt.file, possibilistic, limits);
    ResultReport report = problem_report("rank", solved);
    if (report.inconsistent) {
        emit(out, opt, report);
        return exit_inconsistent;
    }
    const ParsedWeights weights =
        opt.weights.empty() ? ParsedWeights{} : parse_weights(opt.weights);
    fill_rank_report(report, solved, opt.metric, weights, limits);
    emit(out, opt, report);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coalition formation via (possibilistic) multi-context systems"};
    app.require_subcommand(1);

    Options solve_opt, rank_opt, check_opt;

    auto add_common = [](CLI::App* cmd, Options& opt) {
        cmd->add_option("file", opt.file, "input document")->required();
        cmd->add_option("--max-atoms", opt.max_atoms, "per-context enumeration bound")
            ->envname("MCSC_MAX_ATOMS");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "equilibria and coalitions of a problem");
    add_common(solve, solve_opt);
    solve_opt.mode = "classical";
    solve->add_option("--mode", solve_opt.mode, "reasoning mode")
        ->check(CLI::IsMember({"classical", "possibilistic"}));
    solve->add_flag("--emit-mcs", solve_opt.emit_mcs, "print the compiled system and stop");
    solve->add_flag("--emit-dot", solve_opt.emit_dot, "print the dependence graph and stop");

    CLI::App* rank = app.add_subcommand("rank", "score and rank the coalitions of a problem");
    add_common(rank, rank_opt);
    rank->add_option("--mode", rank_opt.mode, "reasoning mode")
        ->check(CLI::IsMember({"classical", "possibilistic"}));
    rank->add_option("--metric", rank_opt.metric, "ranking method")
        ->required()
        ->check(CLI::IsMember({"ws", "wp", "topsis", "cost", "conviviality"}));
    rank->add_option("--weights", rank_opt.weights,
                     "comma list: positional (per column) or key=value");

    CLI::App* check = app.add_subcommand("check", "equilibria of a raw MCS document");
    add_common(check, check_opt);
    check_opt.mode = "classical";
    check->add_option("--mode", check_opt.mode, "reasoning mode")
        ->check(CLI::IsMember({"classical", "possibilistic"}));
    check->add_flag("--all", check_opt.all_diagnostics,
                    "also report rejected candidates on inconsistency");

    std::vector<const char*> argv;
    argv.push_back("mcsc");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (solve->parsed())
            return run_solve(solve_opt, out);
        if (rank->parsed())
            return run_rank(rank_opt, out);
        return run_check(check_opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace mcsc
