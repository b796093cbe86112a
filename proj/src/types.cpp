// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/types.hpp"

#include "mcsc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mcsc {

bool is_valid_atom(const Atom& name) {
    if (name.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

bool Program::is_definite() const {
    return std::all_of(rules.begin(), rules.end(),
                       [](const PossRule& r) { return r.rule.is_definite(); });
}

AtomSet Program::mentioned_atoms() const {
    AtomSet atoms;
    for (const auto& r : rules) {
        atoms.insert(r.rule.head);
        atoms.insert(r.rule.pos.begin(), r.rule.pos.end());
        atoms.insert(r.rule.neg.begin(), r.rule.neg.end());
    }
    for (const auto& c : choices)
        atoms.insert(c.alternatives.begin(), c.alternatives.end());
    for (const auto& d : denies)
        atoms.insert(d.atoms.begin(), d.atoms.end());
    return atoms;
}

Program Program::with_facts(const AtomSet& facts, Degree degree) const {
    Program extended = *this;
    for (const auto& atom : facts) {
        extended.rules.push_back(PossRule{Rule{atom, {}, {}}, degree});
        extended.alphabet.insert(atom);
    }
    return extended;
}

void Program::validate() const {
    for (const auto& atom : alphabet)
        if (!is_valid_atom(atom))
            fail(Errc::invalid_program, "bad atom name '" + atom + "'");
    const AtomSet mentioned = mentioned_atoms();
    for (const auto& atom : mentioned)
        if (!alphabet.count(atom))
            fail(Errc::invalid_program, "atom '" + atom + "' outside the alphabet");
    for (const auto& c : choices) {
        if (c.alternatives.empty())
            fail(Errc::invalid_program, "empty choice clause");
        AtomSet seen;
        for (const auto& a : c.alternatives)
            if (!seen.insert(a).second)
                fail(Errc::invalid_program, "duplicate alternative '" + a + "' in choice");
    }
    if (semantics == Semantics::answer_set && !choices.empty())
        fail(Errc::invalid_program, "choice clauses require choice-minimal-model semantics");
}

int Mcs::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < contexts.size(); ++i)
        if (contexts[i].name == name)
            return static_cast<int>(i);
    return -1;
}

ContextId Mcs::id_of(int index) const {
    return ContextId{index + 1, contexts[static_cast<std::size_t>(index)].name};
}

bool Mcs::is_definite() const {
    for (const auto& c : contexts)
        if (!c.program.is_definite())
            return false;
    return std::all_of(bridges.begin(), bridges.end(),
                       [](const BridgeRule& b) { return b.is_definite(); });
}

bool Mcs::has_choices() const {
    return std::any_of(contexts.begin(), contexts.end(),
                       [](const Context& c) { return c.program.has_choices(); });
}

AtomSet Mcs::incoming_heads(int i) const {
    AtomSet heads;
    for (const auto& b : bridges)
        if (b.target == i)
            heads.insert(b.head);
    return heads;
}

void Mcs::validate() const {
    std::set<std::string> names;
    for (const auto& c : contexts) {
        if (!names.insert(c.name).second)
            fail(Errc::invalid_program, "duplicate context name '" + c.name + "'");
        c.program.validate();
    }
    const int n = static_cast<int>(contexts.size());
    for (const auto& b : bridges) {
        auto check_ctx = [&](int i) {
            if (i < 0 || i >= n)
                fail(Errc::unknown_context,
                     "bridge rule references context #" + std::to_string(i + 1));
        };
        check_ctx(b.target);
        for (const auto& [ctx, atom] : b.pos)
            check_ctx(ctx);
        for (const auto& [ctx, atom] : b.neg)
            check_ctx(ctx);
        if (!is_valid_atom(b.head))
            fail(Errc::invalid_program, "bad bridge head '" + b.head + "'");
    }
}

BeliefState classical_projection(const PossBeliefState& state) {
    BeliefState plain;
    plain.reserve(state.size());
    for (const auto& set : state) {
        AtomSet atoms;
        for (const auto& [atom, degree] : set)
            atoms.insert(atom);
        plain.push_back(std::move(atoms));
    }
    return plain;
}

std::string to_string(const BeliefState& state) {
    std::string out = "(";
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i)
            out += ", ";
        out += "{";
        bool first = true;
        for (const auto& atom : state[i]) {
            if (!first)
                out += " ";
            out += atom;
            first = false;
        }
        out += "}";
    }
    out += ")";
    return out;
}

} // namespace mcsc
