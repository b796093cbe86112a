// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/mcs.hpp"

namespace mcsc {

/// Same structure with every necessity degree raised to 1.
Mcs classical_projection(const Mcs& mcs);

/// Possibilistic reduct: each context program is reduced w.r.t. its own
/// belief set, each bridge rule w.r.t. the whole state. Degrees, choice and
/// deny clauses survive; the result is definite.
Mcs poss_reduct(const Mcs& mcs, const BeliefState& state);

/// Possibility distribution over belief states. For a definite system this
/// is the literal four-case definition (unlicensed atoms -> 0, ungrounded
/// applicable set -> 0, equilibrium -> 1, otherwise 1 minus the largest
/// necessity among unsatisfied rules). A normal system is evaluated through
/// its reduct w.r.t. the queried state itself.
Degree possibility_of_state(const Mcs& mcs, const BeliefState& state, const Limits& limits = {});

/// Possibility / necessity of one atom: extremal possibility over the
/// bounded full state space (per-context powersets of alphabet plus
/// incoming bridge heads).
Degree atom_possibility(const Mcs& mcs, int ctx, const Atom& atom, const Limits& limits = {});
Degree atom_necessity(const Mcs& mcs, int ctx, const Atom& atom, const Limits& limits = {});

/// The grounded equilibrium of a definite system with every atom annotated
/// by its necessity (atoms at necessity 0 are dropped).
PossBeliefState poss_grounded_equilibrium(const Mcs& mcs, const Limits& limits = {});

/// Possibilistic equilibria of a normal system: for each classical
/// equilibrium S, the necessity-annotated state computed on the reduct
/// w.r.t. S; kept when its classical projection equals S. Ordering follows
/// the classical enumeration.
std::vector<PossBeliefState> poss_equilibria(const Mcs& mcs, const Limits& limits = {});

namespace detail {

/// Annotates the atoms of `base` with necessities computed on the definite
/// system `mcs`, where the possibility distribution is scoped to
/// componentwise subsets of `base` (the certainty of each atom within that
/// particular solution).
PossBeliefState annotate_necessities(const Mcs& mcs, const BeliefState& base,
                                     const Limits& limits = {});

} // namespace detail

} // namespace mcsc
