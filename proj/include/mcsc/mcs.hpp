// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/logic.hpp"
#include "mcsc/types.hpp"

#include <map>
#include <optional>

namespace mcsc {

/// Memoizes ACC(kb_i ∪ H) per context over subsets H of its incoming bridge
/// heads. Candidate verification hits the same handful of keys repeatedly.
class AccCache {
public:
    explicit AccCache(const Mcs& mcs, Limits limits = {}) : mcs_(&mcs), limits_(limits) {}

    const std::vector<AtomSet>& acceptable(int ctx, const AtomSet& extra_heads);
    bool accepts(int ctx, const AtomSet& extra_heads, const AtomSet& belief_set);

private:
    const Mcs* mcs_;
    Limits limits_;
    std::map<std::pair<int, AtomSet>, std::vector<AtomSet>> memo_;
};

/// Per-context heads of bridge rules applicable in `state`.
std::vector<AtomSet> applicable_bridge_heads(const Mcs& mcs, const BeliefState& state);

bool is_equilibrium(const Mcs& mcs, const BeliefState& state, AccCache* cache = nullptr,
                    const Limits& limits = {});

/// All equilibria, lexicographically ordered. Candidates are the ACC sets of
/// each knowledge base extended with every subset of its incoming bridge
/// heads, so the search is exponential only in the bridge-head count.
std::vector<BeliefState> enumerate_equilibria(const Mcs& mcs, const Limits& limits = {});

/// Joint least fixpoint of a definite, negation-free, choice-free system.
BeliefState grounded_equilibrium(const Mcs& mcs, const Limits& limits = {});

struct ConsistencyReport {
    struct Failure {
        BeliefState state;
        std::vector<int> failed_contexts; // 0-based indices whose ACC check failed
    };

    bool consistent = false;
    std::vector<BeliefState> equilibria;
    std::vector<Failure> failures; // capped sample of rejected candidates
    std::int64_t candidates_checked = 0;

    static constexpr std::size_t max_recorded_failures = 50;
};

ConsistencyReport check_consistency(const Mcs& mcs, const Limits& limits = {});

} // namespace mcsc
