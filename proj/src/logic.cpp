// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/logic.hpp"

#include "mcsc/errors.hpp"

#include <algorithm>

namespace mcsc {

namespace {

bool subset(const AtomSet& small, const AtomSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool disjoint(const AtomSet& a, const AtomSet& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt)
            ++it;
        else if (*jt < *it)
            ++jt;
        else
            return false;
    }
    return true;
}

void require_definite(const Program& program, const char* op) {
    for (const auto& r : program.rules)
        if (!r.rule.is_definite())
            fail(Errc::rule_not_definite,
                 std::string(op) + ": rule with head '" + r.rule.head + "' has a negative body");
}

bool violates_deny(const Program& program, const AtomSet& set) {
    return std::any_of(program.denies.begin(), program.denies.end(),
                       [&](const DenyClause& d) { return subset(d.atoms, set); });
}

bool satisfies_choices(const Program& program, const AtomSet& set) {
    for (const auto& c : program.choices) {
        bool hit = std::any_of(c.alternatives.begin(), c.alternatives.end(),
                               [&](const Atom& a) { return set.count(a) != 0; });
        if (!hit)
            return false;
    }
    return true;
}

bool closed_under_rules(const Program& program, const AtomSet& set) {
    for (const auto& r : program.rules)
        if (subset(r.rule.pos, set) && !set.count(r.rule.head))
            return false;
    return true;
}

/// Atoms that can appear in a stable/minimal model: rule heads plus choice
/// alternatives; anything else is never derivable.
std::vector<Atom> derivable_atoms(const Program& program) {
    AtomSet atoms;
    for (const auto& r : program.rules)
        atoms.insert(r.rule.head);
    for (const auto& c : program.choices)
        atoms.insert(c.alternatives.begin(), c.alternatives.end());
    return {atoms.begin(), atoms.end()};
}

void check_alphabet_bound(const Program& program, const Limits& limits) {
    if (static_cast<int>(program.alphabet.size()) > limits.max_atoms)
        fail(Errc::alphabet_too_large,
             "alphabet has " + std::to_string(program.alphabet.size()) + " atoms, bound is " +
                 std::to_string(limits.max_atoms));
    // engine ceiling regardless of the configured bound: the subset masks
    // live in 64 bits and 2^30 candidates is already far past desk scale
    if (program.alphabet.size() > 30)
        fail(Errc::search_space_exceeded,
             "cannot enumerate 2^" + std::to_string(program.alphabet.size()) + " candidates");
}

} // namespace

AtomSet least_model(const Program& program, const AtomSet& extra_facts) {
    require_definite(program, "least_model");
    if (program.has_choices())
        fail(Errc::rule_not_definite, "least_model: choice clauses are not definite");
    if (program.has_denies())
        fail(Errc::rule_not_definite, "least_model: deny clauses are not definite");
    AtomSet model = extra_facts;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : program.rules) {
            if (!model.count(r.rule.head) && subset(r.rule.pos, model)) {
                model.insert(r.rule.head);
                changed = true;
            }
        }
    }
    return model;
}

Program reduct(const Program& program, const AtomSet& interpretation) {
    Program reduced = program;
    reduced.rules.clear();
    for (const auto& r : program.rules) {
        if (!disjoint(r.rule.neg, interpretation))
            continue;
        reduced.rules.push_back(PossRule{Rule{r.rule.head, r.rule.pos, {}}, r.necessity});
    }
    return reduced;
}

std::vector<PossRule> applicable_rules(const Program& program, const AtomSet& interpretation) {
    std::vector<PossRule> result;
    for (const auto& r : program.rules)
        if (subset(r.rule.pos, interpretation) && disjoint(r.rule.neg, interpretation))
            result.push_back(r);
    return result;
}

bool is_grounded_ruleset(const std::vector<Rule>& rules) {
    for (const auto& r : rules)
        if (!r.is_definite())
            fail(Errc::rule_not_definite, "is_grounded_ruleset expects positive projections");
    AtomSet heads;
    std::vector<bool> placed(rules.size(), false);
    std::size_t remaining = rules.size();
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            if (placed[i] || !subset(rules[i].pos, heads))
                continue;
            placed[i] = true;
            heads.insert(rules[i].head);
            --remaining;
            progress = true;
        }
    }
    return remaining == 0;
}

std::vector<AtomSet> answer_sets(const Program& program, const Limits& limits) {
    if (program.semantics != Semantics::answer_set)
        fail(Errc::invalid_program, "answer_sets requires answer-set semantics");
    if (program.has_choices())
        fail(Errc::invalid_program, "answer_sets: choice clauses are not supported");
    check_alphabet_bound(program, limits);

    Program core = program; // denies act as a model filter, not in the reduct
    core.denies.clear();

    const std::vector<Atom> atoms = derivable_atoms(program);
    const std::size_t n = atoms.size();
    std::vector<AtomSet> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AtomSet candidate;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                candidate.insert(atoms[i]);
        if (violates_deny(program, candidate))
            continue;
        if (least_model(reduct(core, candidate)) == candidate)
            result.push_back(std::move(candidate));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<AtomSet> minimal_models(const Program& program, const Limits& limits) {
    if (program.semantics != Semantics::choice_minimal_model)
        fail(Errc::invalid_program, "minimal_models requires choice-minimal-model semantics");
    require_definite(program, "minimal_models");
    check_alphabet_bound(program, limits);

    const std::vector<Atom> atoms = derivable_atoms(program);
    const std::size_t n = atoms.size();
    std::vector<AtomSet> models;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AtomSet candidate;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                candidate.insert(atoms[i]);
        if (closed_under_rules(program, candidate) && satisfies_choices(program, candidate) &&
            !violates_deny(program, candidate))
            models.push_back(std::move(candidate));
    }
    std::vector<AtomSet> minimal;
    for (const auto& m : models) {
        bool dominated = std::any_of(models.begin(), models.end(), [&](const AtomSet& other) {
            return other != m && subset(other, m);
        });
        if (!dominated)
            minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::vector<AtomSet> acceptable_sets(const Program& program, const AtomSet& extra_facts,
                                     const Limits& limits) {
    const Program extended = program.with_facts(extra_facts);
    if (program.semantics == Semantics::choice_minimal_model)
        return minimal_models(extended, limits);
    // Definite answer-set programs have the least model as their unique
    // stable model; skip the subset enumeration unless negation or denies
    // are involved.
    if (extended.is_definite() && !extended.has_denies() && !extended.has_choices())
        return {least_model(extended)};
    return answer_sets(extended, limits);
}

} // namespace mcsc
