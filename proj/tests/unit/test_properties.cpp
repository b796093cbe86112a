// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Randomized suites. Every generator runs on a fixed seed so failures
// reproduce; the oracles here are written against the definitions, not
// against the library code paths they check.

#include "mcsc/evaluate.hpp"
#include "mcsc/poss.hpp"

#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"

using namespace mcsc;
using namespace test_helpers;

namespace {

using Rng = std::mt19937;

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Atom> atom_pool(int n, const std::string& prefix = "a") {
    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i)
        atoms.push_back(prefix + std::to_string(i));
    return atoms;
}

AtomSet random_subset(Rng& rng, const std::vector<Atom>& pool, int max_size) {
    AtomSet subset;
    const int size = pick(rng, 0, max_size);
    for (int i = 0; i < size; ++i)
        subset.insert(pool[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))]);
    return subset;
}

Program random_asp(Rng& rng, int n_atoms, int n_rules, bool definite, bool with_degrees) {
    const auto pool = atom_pool(n_atoms);
    Program p;
    p.semantics = Semantics::answer_set;
    p.alphabet.insert(pool.begin(), pool.end());
    for (int r = 0; r < n_rules; ++r) {
        Rule rule;
        rule.head = pool[static_cast<std::size_t>(pick(rng, 0, n_atoms - 1))];
        rule.pos = random_subset(rng, pool, 2);
        if (!definite)
            rule.neg = random_subset(rng, pool, 2);
        Degree degree = Degree::one();
        if (with_degrees)
            degree = Degree::from_micros(100000LL * pick(rng, 1, 10));
        p.rules.push_back(PossRule{std::move(rule), degree});
    }
    return p;
}

// --- independent oracles ---------------------------------------------------

AtomSet oracle_least(const std::vector<Rule>& rules, const AtomSet& facts) {
    AtomSet model = facts;
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& r : rules) {
            bool fires = true;
            for (const auto& a : r.pos)
                if (!model.count(a))
                    fires = false;
            if (fires && !model.count(r.head)) {
                model.insert(r.head);
                grew = true;
            }
        }
    }
    return model;
}

std::vector<AtomSet> oracle_answer_sets(const Program& p) {
    std::vector<Atom> pool(p.alphabet.begin(), p.alphabet.end());
    std::vector<AtomSet> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        AtomSet candidate;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (std::uint64_t{1} << i))
                candidate.insert(pool[i]);
        std::vector<Rule> gl; // Gelfond-Lifschitz transform
        for (const auto& r : p.rules) {
            bool blocked = false;
            for (const auto& a : r.rule.neg)
                if (candidate.count(a))
                    blocked = true;
            if (!blocked)
                gl.push_back(Rule{r.rule.head, r.rule.pos, {}});
        }
        if (oracle_least(gl, {}) == candidate)
            result.push_back(candidate);
    }
    std::sort(result.begin(), result.end());
    return result;
}

// minimal hitting-set style oracle for choice knowledge bases
std::vector<AtomSet> oracle_minimal_models(const Program& p) {
    AtomSet universe = p.mentioned_atoms();
    std::vector<Atom> pool(universe.begin(), universe.end());
    std::vector<AtomSet> models;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        AtomSet candidate;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (std::uint64_t{1} << i))
                candidate.insert(pool[i]);
        bool ok = true;
        for (const auto& r : p.rules) {
            bool body = true;
            for (const auto& a : r.rule.pos)
                if (!candidate.count(a))
                    body = false;
            if (body && !candidate.count(r.rule.head))
                ok = false;
        }
        for (const auto& c : p.choices) {
            bool hit = false;
            for (const auto& a : c.alternatives)
                if (candidate.count(a))
                    hit = true;
            if (!hit)
                ok = false;
        }
        for (const auto& d : p.denies) {
            bool all = true;
            for (const auto& a : d.atoms)
                if (!candidate.count(a))
                    all = false;
            if (all)
                ok = false;
        }
        if (ok)
            models.push_back(candidate);
    }
    std::vector<AtomSet> minimal;
    for (const auto& m : models) {
        bool least = true;
        for (const auto& other : models)
            if (other != m &&
                std::includes(m.begin(), m.end(), other.begin(), other.end()))
                least = false;
        if (least)
            minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

} // namespace

TEST_CASE("answer sets satisfy the reduct fixpoint definition (500 random programs)") {
    Rng rng(20260809);
    for (int round = 0; round < 500; ++round) {
        const Program p = random_asp(rng, pick(rng, 1, 8), pick(rng, 0, 8), false, false);
        CHECK(answer_sets(p) == oracle_answer_sets(p));
    }
}

TEST_CASE("least models are closed and minimal") {
    Rng rng(42);
    for (int round = 0; round < 200; ++round) {
        const Program p = random_asp(rng, pick(rng, 1, 8), pick(rng, 0, 8), true, false);
        const auto pool = atom_pool(static_cast<int>(p.alphabet.size()));
        AtomSet facts = random_subset(rng, pool, 2);
        const AtomSet model = least_model(p, facts);

        // closed under every rule, contains the facts
        for (const auto& r : p.rules) {
            bool body = std::includes(model.begin(), model.end(), r.rule.pos.begin(),
                                      r.rule.pos.end());
            if (body)
                CHECK(model.count(r.rule.head));
        }
        for (const auto& f : facts)
            CHECK(model.count(f));

        // removing any atom breaks closure or fact containment
        for (const auto& atom : model) {
            AtomSet smaller = model;
            smaller.erase(atom);
            bool closed = std::includes(smaller.begin(), smaller.end(), facts.begin(),
                                        facts.end());
            if (closed) {
                for (const auto& r : p.rules) {
                    bool body = std::includes(smaller.begin(), smaller.end(),
                                              r.rule.pos.begin(), r.rule.pos.end());
                    if (body && !smaller.count(r.rule.head))
                        closed = false;
                }
            }
            CHECK_FALSE(closed);
        }
    }
}

TEST_CASE("reduct is monotone-destructive") {
    Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        const Program p = random_asp(rng, pick(rng, 1, 8), pick(rng, 1, 8), false, false);
        const auto pool = atom_pool(static_cast<int>(p.alphabet.size()));
        AtomSet t1 = random_subset(rng, pool, 4);
        AtomSet t2 = t1;
        const AtomSet extra = random_subset(rng, pool, 3);
        t2.insert(extra.begin(), extra.end());
        const auto r1 = reduct(p, t1).rules;
        const auto r2 = reduct(p, t2).rules;
        // every rule surviving the larger set survives the smaller one
        for (const auto& r : r2)
            CHECK(std::count(r1.begin(), r1.end(), r) >= std::count(r2.begin(), r2.end(), r));
    }
}

TEST_CASE("minimal models form an antichain and match the hitting-set oracle") {
    Rng rng(99);
    for (int round = 0; round < 200; ++round) {
        const int n_atoms = pick(rng, 1, 10);
        const auto pool = atom_pool(n_atoms);
        Program p;
        p.semantics = Semantics::choice_minimal_model;
        p.alphabet.insert(pool.begin(), pool.end());
        const int n_rules = pick(rng, 0, 4);
        for (int r = 0; r < n_rules; ++r) {
            Rule rule;
            rule.head = pool[static_cast<std::size_t>(pick(rng, 0, n_atoms - 1))];
            rule.pos = random_subset(rng, pool, 2);
            p.rules.push_back(PossRule{rule, Degree::one()});
        }
        const int n_choices = pick(rng, 0, 3);
        for (int c = 0; c < n_choices; ++c) {
            AtomSet alts = random_subset(rng, pool, 3);
            if (alts.empty())
                alts.insert(pool[0]);
            p.choices.push_back(ChoiceClause{{alts.begin(), alts.end()}});
        }
        if (pick(rng, 0, 2) == 0) {
            AtomSet deny = random_subset(rng, pool, 2);
            if (!deny.empty())
                p.denies.push_back(DenyClause{deny});
        }

        const auto models = minimal_models(p);
        CHECK(models == oracle_minimal_models(p));
        for (const auto& a : models)
            for (const auto& b : models)
                if (a != b)
                    CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

namespace {

Mcs random_mcs(Rng& rng, bool definite, bool with_degrees, int max_total_atoms) {
    const int n_ctx = pick(rng, 1, 3);
    Mcs mcs;
    mcs.possibilistic = with_degrees;
    int atoms_left = max_total_atoms;
    for (int i = 0; i < n_ctx; ++i) {
        const int n_atoms = std::max(1, std::min(atoms_left - (n_ctx - 1 - i), pick(rng, 1, 5)));
        atoms_left -= n_atoms;
        Context ctx;
        ctx.name = "c" + std::to_string(i + 1);
        Program p = random_asp(rng, n_atoms, pick(rng, 0, 4), definite, with_degrees);
        // rename atoms per context so alphabets stay disjoint (clearer failures)
        Program renamed;
        renamed.semantics = p.semantics;
        auto rn = [&](const Atom& a) { return "x" + std::to_string(i) + "_" + a; };
        for (const auto& a : p.alphabet)
            renamed.alphabet.insert(rn(a));
        for (const auto& r : p.rules) {
            Rule nr{rn(r.rule.head), {}, {}};
            for (const auto& a : r.rule.pos)
                nr.pos.insert(rn(a));
            for (const auto& a : r.rule.neg)
                nr.neg.insert(rn(a));
            renamed.rules.push_back(PossRule{nr, r.necessity});
        }
        ctx.program = renamed;
        mcs.contexts.push_back(std::move(ctx));
    }
    // random bridges between contexts
    const int n_bridges = pick(rng, 0, 5);
    for (int b = 0; b < n_bridges; ++b) {
        const int target = pick(rng, 0, n_ctx - 1);
        const auto& target_alpha = mcs.contexts[static_cast<std::size_t>(target)].program.alphabet;
        std::vector<Atom> heads(target_alpha.begin(), target_alpha.end());
        BridgeRule rule;
        rule.target = target;
        rule.head = heads[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(heads.size()) - 1))];
        const int n_body = pick(rng, 1, 2);
        for (int l = 0; l < n_body; ++l) {
            const int src = pick(rng, 0, n_ctx - 1);
            const auto& alpha = mcs.contexts[static_cast<std::size_t>(src)].program.alphabet;
            std::vector<Atom> pool(alpha.begin(), alpha.end());
            const Atom atom = pool[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
            if (!definite && pick(rng, 0, 3) == 0)
                rule.neg.insert({src, atom});
            else
                rule.pos.insert({src, atom});
        }
        if (with_degrees)
            rule.necessity = Degree::from_micros(100000LL * pick(rng, 1, 10));
        mcs.bridges.push_back(std::move(rule));
    }
    return mcs;
}

std::vector<BeliefState> brute_force_equilibria(const Mcs& mcs) {
    std::vector<std::vector<Atom>> spaces;
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i) {
        AtomSet atoms = mcs.contexts[i].program.alphabet;
        const AtomSet heads = mcs.incoming_heads(static_cast<int>(i));
        atoms.insert(heads.begin(), heads.end());
        spaces.push_back({atoms.begin(), atoms.end()});
    }
    std::size_t bits = 0;
    for (const auto& s : spaces)
        bits += s.size();
    REQUIRE(bits <= 20);
    AccCache cache(mcs);
    std::vector<BeliefState> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        BeliefState state(spaces.size());
        std::size_t bit = 0;
        for (std::size_t i = 0; i < spaces.size(); ++i)
            for (const auto& atom : spaces[i]) {
                if (mask & (std::uint64_t{1} << bit))
                    state[i].insert(atom);
                ++bit;
            }
        if (is_equilibrium(mcs, state, &cache))
            result.push_back(std::move(state));
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace

TEST_CASE("equilibrium enumeration agrees with full brute force (100 random systems)") {
    Rng rng(20202020);
    for (int round = 0; round < 100; ++round) {
        const Mcs mcs = random_mcs(rng, false, false, 14);
        const auto fast = enumerate_equilibria(mcs);
        const auto slow = brute_force_equilibria(mcs);
        CHECK(fast == slow);
        for (const auto& s : fast)
            CHECK(is_equilibrium(mcs, s));
    }
}

TEST_CASE("projection theorem: MD projects onto the grounded equilibrium (200 systems)") {
    Rng rng(555);
    for (int round = 0; round < 200; ++round) {
        const Mcs mcs = random_mcs(rng, true, true, 12);
        const BeliefState ge = grounded_equilibrium(mcs);
        const PossBeliefState annotated = poss_grounded_equilibrium(mcs);
        CHECK(classical_projection(annotated) == ge);
        // the grounded equilibrium is fully possible and least among equilibria
        CHECK(possibility_of_state(mcs, ge) == Degree::one());
        for (const auto& eq : enumerate_equilibria(mcs))
            for (std::size_t i = 0; i < ge.size(); ++i)
                CHECK(std::includes(eq[i].begin(), eq[i].end(), ge[i].begin(), ge[i].end()));
    }
}

TEST_CASE("possibility 1 only on equilibria; degree-1 systems degenerate to classical") {
    Rng rng(808);
    for (int round = 0; round < 60; ++round) {
        const Mcs mcs = random_mcs(rng, true, true, 8);
        std::vector<std::vector<Atom>> spaces;
        std::size_t bits = 0;
        for (std::size_t i = 0; i < mcs.contexts.size(); ++i) {
            const auto& alpha = mcs.contexts[i].program.alphabet;
            AtomSet atoms = alpha;
            const AtomSet heads = mcs.incoming_heads(static_cast<int>(i));
            atoms.insert(heads.begin(), heads.end());
            spaces.push_back({atoms.begin(), atoms.end()});
            bits += spaces.back().size();
        }
        if (bits > 12)
            continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            BeliefState state(spaces.size());
            std::size_t bit = 0;
            for (std::size_t i = 0; i < spaces.size(); ++i)
                for (const auto& atom : spaces[i]) {
                    if (mask & (std::uint64_t{1} << bit))
                        state[i].insert(atom);
                    ++bit;
                }
            if (possibility_of_state(mcs, state) == Degree::one())
                CHECK(is_equilibrium(mcs, state));
        }
    }

    // All-degrees-1 normal systems: possibilistic equilibria are classical
    // equilibria with every annotation 1, and every classical equilibrium
    // with no reduct-equilibrium strictly below it survives (self-supported
    // equilibria are grounded away by the possibility distribution).
    Rng rng2(909);
    for (int round = 0; round < 40; ++round) {
        Mcs mcs = random_mcs(rng2, false, false, 10);
        mcs.possibilistic = true;
        const auto classical = enumerate_equilibria(mcs);
        const auto poss = poss_equilibria(mcs);
        CHECK(poss.size() <= classical.size());
        std::vector<BeliefState> kept;
        for (const auto& state : poss) {
            const BeliefState plain = classical_projection(state);
            CHECK(std::count(classical.begin(), classical.end(), plain) == 1);
            kept.push_back(plain);
            for (const auto& ctx : state)
                for (const auto& [atom, degree] : ctx)
                    CHECK(degree == Degree::one());
        }
        for (const auto& s : classical) {
            bool has_strict_sub = false;
            for (const auto& other : enumerate_equilibria(poss_reduct(mcs, s))) {
                if (other == s)
                    continue;
                bool below = true;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (!std::includes(s[i].begin(), s[i].end(), other[i].begin(),
                                       other[i].end()))
                        below = false;
                if (below)
                    has_strict_sub = true;
            }
            if (!has_strict_sub)
                CHECK(std::count(kept.begin(), kept.end(), s) == 1);
        }
    }
}

TEST_CASE("raising a rule's necessity never lowers an atom's necessity") {
    Rng rng(31337);
    for (int round = 0; round < 40; ++round) {
        Mcs mcs = random_mcs(rng, true, true, 7);
        std::size_t bits = 0;
        for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
            bits += mcs.contexts[i].program.alphabet.size() +
                    mcs.incoming_heads(static_cast<int>(i)).size();
        if (bits > 10)
            continue;

        Mcs raised = mcs;
        bool changed = false;
        for (auto& c : raised.contexts) {
            for (auto& r : c.program.rules)
                if (!changed && r.necessity < Degree::one()) {
                    r.necessity = Degree::from_micros(
                        std::min<std::int64_t>(Dec6::scale, r.necessity.micros() + 200000));
                    changed = true;
                }
        }
        if (!changed)
            continue;

        for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
            for (const auto& atom : mcs.contexts[i].program.alphabet) {
                const Degree before = atom_necessity(mcs, static_cast<int>(i), atom);
                const Degree after = atom_necessity(raised, static_cast<int>(i), atom);
                CHECK(after >= before);
            }
    }
}

TEST_CASE("economic dominance is a strict partial order") {
    Rng rng(2468);
    CoalitionProblem problem;
    problem.agents = {{"a1", {"c1"}, {}}, {"a2", {"c2"}, {}}, {"a3", {"c3"}, {}}};
    problem.goals = {{"g1", "m1"}, {"g2", "m2"}, {"g3", "m3"}};
    for (int i = 1; i <= 3; ++i)
        problem.plans.push_back({"p" + std::to_string(i),
                                 "g" + std::to_string(i),
                                 {{"a" + std::to_string(i), "c" + std::to_string(i)}},
                                 {"a" + std::to_string(i), "c" + std::to_string(i)},
                                 {}});
    for (int round = 0; round < 50; ++round) {
        for (const auto& agent : problem.agents)
            for (const auto& goal : problem.goals)
                problem.distances.agent_to_material[{agent.id, goal.material}] =
                    Dec6::from_int(pick(rng, 0, 9));
        for (const auto& goal : problem.goals)
            problem.distances.material_to_destination[goal.material] =
                Dec6::from_int(pick(rng, 0, 9));

        // random goal -> agent assignments
        std::vector<Coalition> coalitions;
        for (int k = 0; k < 5; ++k) {
            Coalition c;
            for (const auto& goal : problem.goals) {
                const auto& agent =
                    problem.agents[static_cast<std::size_t>(pick(rng, 0, 2))].id;
                c.assignments[goal.id] = Assignment{agent, ""};
                c.per_goal_necessity[goal.id] = Degree::one();
            }
            coalitions.push_back(std::move(c));
        }
        for (const auto& a : coalitions) {
            CHECK_FALSE(economically_dominates(problem, a, a));
            for (const auto& b : coalitions) {
                if (economically_dominates(problem, a, b))
                    CHECK_FALSE(economically_dominates(problem, b, a));
                for (const auto& c : coalitions)
                    if (economically_dominates(problem, a, b) &&
                        economically_dominates(problem, b, c))
                        CHECK(economically_dominates(problem, a, c));
            }
        }
    }
}

namespace {

// naive labeled-edge cycle walk, counting consecutive ordered pairs
CycleStats oracle_cycles(const DependenceGraph& graph) {
    std::vector<std::string> nodes = graph.nodes;
    for (const auto& e : graph.edges) {
        for (const auto& n : {e.from, e.to})
            if (std::find(nodes.begin(), nodes.end(), n) == nodes.end())
                nodes.push_back(n);
    }
    std::vector<GraphEdge> edges(graph.edges.begin(), graph.edges.end());
    CycleStats stats;

    // path = sequence of edge indices, node-simple, canonical smallest start
    std::vector<std::size_t> path;
    std::vector<std::string> visited;
    auto node_index = [&](const std::string& n) {
        return std::distance(nodes.begin(), std::find(nodes.begin(), nodes.end(), n));
    };
    std::function<void(const std::string&, const std::string&)> walk =
        [&](const std::string& start, const std::string& at) {
            for (std::size_t k = 0; k < edges.size(); ++k) {
                if (edges[k].from != at)
                    continue;
                const std::string& next = edges[k].to;
                if (next == start && !path.empty()) {
                    stats.cycles += 1;
                    stats.pair_sum += static_cast<std::int64_t>(path.size()) + 1;
                    continue;
                }
                if (next == start && path.empty())
                    continue; // self-loop
                if (node_index(next) <= node_index(start))
                    continue; // canonical: start is the least node
                if (std::find(visited.begin(), visited.end(), next) != visited.end())
                    continue;
                path.push_back(k);
                visited.push_back(next);
                walk(start, next);
                visited.pop_back();
                path.pop_back();
            }
        };
    for (const auto& start : nodes) {
        visited = {start};
        path.clear();
        walk(start, start);
    }
    return stats;
}

} // namespace

TEST_CASE("cycle pair counting agrees with the naive labeled-edge oracle") {
    Rng rng(13579);
    for (int round = 0; round < 120; ++round) {
        const int n = pick(rng, 2, 6);
        DependenceGraph graph;
        for (int i = 0; i < n; ++i)
            graph.nodes.push_back("n" + std::to_string(i));
        const int n_edges = pick(rng, 0, 12);
        const int n_labels = pick(rng, 1, 2);
        for (int e = 0; e < n_edges; ++e) {
            const auto& from = graph.nodes[static_cast<std::size_t>(pick(rng, 0, n - 1))];
            const auto& to = graph.nodes[static_cast<std::size_t>(pick(rng, 0, n - 1))];
            graph.edges.insert({from, to, "g" + std::to_string(pick(rng, 1, n_labels))});
        }
        const CycleStats fast = cycle_pair_count(graph);
        const CycleStats slow = oracle_cycles(graph);
        CHECK(fast.cycles == slow.cycles);
        CHECK(fast.pair_sum == slow.pair_sum);

        // conviviality stays within [0, 1] against the declared maximum
        const Conviviality conv = conviviality(graph, n, n_labels);
        CHECK(conv.pairs <= conv.omega);
    }
}

TEST_CASE("ranking invariances") {
    Rng rng(11223);
    for (int round = 0; round < 60; ++round) {
        const std::size_t m = static_cast<std::size_t>(pick(rng, 2, 4));
        // 2 or 4 criteria so the equal weights (0.5 / 0.25) multiply the
        // tenth-scale scores without rounding; the scale-invariance claims
        // are exact-arithmetic statements.
        const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 2) * 2);
        ScoreMatrix matrix;
        for (std::size_t i = 0; i < m; ++i)
            matrix.alternatives.push_back("D" + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j)
            matrix.criteria.push_back("R" + std::to_string(j + 1));
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Degree> row;
            for (std::size_t j = 0; j < n; ++j)
                row.push_back(Degree::from_micros(100000LL * pick(rng, 1, 10)));
            matrix.scores.push_back(std::move(row));
        }
        std::vector<std::int64_t> raw(n, Dec6::scale / static_cast<std::int64_t>(n));
        raw[0] += Dec6::scale - raw[0] * static_cast<std::int64_t>(n);
        for (auto w : raw)
            matrix.weights.push_back(Degree::from_micros(w));

        // WS with equal weights is the arithmetic mean of each row
        {
            const auto scores = ws_scores(matrix);
            for (std::size_t i = 0; i < m; ++i) {
                std::int64_t sum = 0;
                for (const auto& q : matrix.scores[i])
                    sum += q.micros();
                CHECK(scores[i].micros() == sum / static_cast<std::int64_t>(n));
            }
        }

        // WP ranking is invariant under scaling one criterion column down
        const Ranking base = wp_rank(matrix);
        ScoreMatrix scaled = matrix;
        const std::size_t column = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(n) - 1));
        for (std::size_t i = 0; i < m; ++i)
            scaled.scores[i][column] =
                scaled.scores[i][column].times(Degree::parse("0.5"));
        const Ranking after = wp_rank(scaled);
        for (std::size_t i = 0; i < m; ++i)
            CHECK(base.entries[i].id == after.entries[i].id);

        // WS argmax is invariant under scaling the whole matrix down
        const Ranking ws_base = weighted_sum(matrix);
        ScoreMatrix ws_scaled = matrix;
        for (auto& row : ws_scaled.scores)
            for (auto& q : row)
                q = q.times(Degree::parse("0.5"));
        const Ranking ws_after = weighted_sum(ws_scaled);
        CHECK(ws_base.entries[0].id == ws_after.entries[0].id);

        // WP reciprocal symmetry on the first two rows
        const double r01 =
            weighted_product_ratio(matrix.scores[0], matrix.scores[1], matrix.weights);
        const double r10 =
            weighted_product_ratio(matrix.scores[1], matrix.scores[0], matrix.weights);
        CHECK(r01 * r10 == doctest::Approx(1.0).epsilon(1e-9));
    }
}
