// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/decimal.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mcsc {

/// Propositional atoms are flat identifiers: [A-Za-z_][A-Za-z0-9_]*.
using Atom = std::string;
using AtomSet = std::set<Atom>;

bool is_valid_atom(const Atom& name);

struct Rule {
    Atom head;
    AtomSet pos;
    AtomSet neg;

    bool is_fact() const { return pos.empty() && neg.empty(); }
    bool is_definite() const { return neg.empty(); }
    auto operator<=>(const Rule&) const = default;
};

/// Rule with a necessity degree. Classical rules carry degree 1.
struct PossRule {
    Rule rule;
    Degree necessity = Degree::one();

    auto operator<=>(const PossRule&) const = default;
};

/// Inclusive disjunction of atoms; minimal-model semantics makes exactly one
/// alternative true unless other rules force more.
struct ChoiceClause {
    std::vector<Atom> alternatives;

    auto operator<=>(const ChoiceClause&) const = default;
};

/// Integrity constraint: the listed atoms must not be jointly true.
struct DenyClause {
    AtomSet atoms;

    auto operator<=>(const DenyClause&) const = default;
};

enum class Semantics {
    answer_set,          // normal logic program, stable models
    choice_minimal_model // definite rules + choice clauses, minimal models under CWA
};

struct Program {
    Semantics semantics = Semantics::answer_set;
    AtomSet alphabet;
    std::vector<PossRule> rules;
    std::vector<ChoiceClause> choices;
    std::vector<DenyClause> denies;

    bool is_definite() const;   // no default negation
    bool has_choices() const { return !choices.empty(); }
    bool has_denies() const { return !denies.empty(); }
    AtomSet mentioned_atoms() const;
    /// Copy with extra facts (given degree) appended and the alphabet extended.
    Program with_facts(const AtomSet& facts, Degree degree = Degree::one()) const;
    void validate() const; // alphabet closure, atom syntax, choice duplicates

    auto operator<=>(const Program&) const = default;
};

/// 1-based context position plus symbolic name.
struct ContextId {
    int index = 0;
    std::string name;

    auto operator<=>(const ContextId&) const = default;
};

/// Atom qualified by the 0-based index of the context it lives in.
struct CtxAtom {
    int ctx = 0;
    Atom atom;

    auto operator<=>(const CtxAtom&) const = default;
};

struct BridgeRule {
    int target = 0; // 0-based context index
    Atom head;
    std::set<CtxAtom> pos;
    std::set<CtxAtom> neg;
    Degree necessity = Degree::one();

    bool is_definite() const { return neg.empty(); }
    auto operator<=>(const BridgeRule&) const = default;
};

struct Context {
    std::string name;
    Program program;

    auto operator<=>(const Context&) const = default;
};

struct Mcs {
    std::vector<Context> contexts;
    std::vector<BridgeRule> bridges;
    /// Whether degrees are meaningful (parsed or compiled possibilistically).
    bool possibilistic = false;

    int index_of(const std::string& name) const; // -1 when absent
    ContextId id_of(int index) const;
    bool is_definite() const; // no default negation in programs or bridges
    bool has_choices() const;
    /// Heads of bridge rules targeting context i (applicability ignored).
    AtomSet incoming_heads(int i) const;
    void validate() const;

    auto operator<=>(const Mcs&) const = default;
};

/// One belief set per context, in context order.
using BeliefState = std::vector<AtomSet>;

/// Necessity-annotated belief sets; only atoms with positive necessity appear.
using PossAtomSet = std::map<Atom, Degree>;
using PossBeliefState = std::vector<PossAtomSet>;

BeliefState classical_projection(const PossBeliefState& state);

std::string to_string(const BeliefState& state);

} // namespace mcsc
