// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/types.hpp"

#include <cstdint>

namespace mcsc {

/// Enumeration guards shared by the bounded engines.
struct Limits {
    int max_atoms = 24;                     // per-context alphabet bound
    std::int64_t max_candidates = 10'000'000; // belief-state product bound
    std::int64_t max_cycles = 1'000'000;      // elementary-circuit bound
    int max_graph_nodes = 16;
};

/// Least set closed under the rules and containing `extra_facts`.
/// The program must be definite and free of choice and deny clauses.
AtomSet least_model(const Program& program, const AtomSet& extra_facts = {});

/// Gelfond-Lifschitz style reduct: keeps rules whose negative body avoids
/// `interpretation`, replaced by their positive projections. Necessity
/// degrees, choice clauses and deny clauses are preserved.
Program reduct(const Program& program, const AtomSet& interpretation);

/// Rules whose positive body holds in `interpretation` and whose negative
/// body does not.
std::vector<PossRule> applicable_rules(const Program& program, const AtomSet& interpretation);

/// True iff the definite rules admit an ordering r1..rn where each rule is
/// applicable in the heads of its predecessors (greedy saturation).
bool is_grounded_ruleset(const std::vector<Rule>& rules);

/// All stable models of an answer-set program, lexicographically ordered.
std::vector<AtomSet> answer_sets(const Program& program, const Limits& limits = {});

/// All subset-minimal models of a choice-minimal-model program: closed under
/// the definite rules, containing at least one alternative per choice clause
/// and no complete deny clause.
std::vector<AtomSet> minimal_models(const Program& program, const Limits& limits = {});

/// ACC dispatch: acceptable belief sets of `program` extended with
/// `extra_facts`, per the program's semantics tag.
std::vector<AtomSet> acceptable_sets(const Program& program, const AtomSet& extra_facts,
                                     const Limits& limits = {});

} // namespace mcsc
