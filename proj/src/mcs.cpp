// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/mcs.hpp"

#include "mcsc/errors.hpp"

#include <algorithm>

namespace mcsc {

namespace {

void check_state_shape(const Mcs& mcs, const BeliefState& state) {
    if (state.size() != mcs.contexts.size())
        fail(Errc::invalid_program,
             "belief state has " + std::to_string(state.size()) + " sets for " +
                 std::to_string(mcs.contexts.size()) + " contexts");
}

void check_context_refs(const Mcs& mcs) {
    const int n = static_cast<int>(mcs.contexts.size());
    for (const auto& b : mcs.bridges) {
        auto check = [&](int i) {
            if (i < 0 || i >= n)
                fail(Errc::unknown_context,
                     "bridge rule references context #" + std::to_string(i + 1));
        };
        check(b.target);
        for (const auto& l : b.pos)
            check(l.ctx);
        for (const auto& l : b.neg)
            check(l.ctx);
    }
}

bool bridge_applicable(const BridgeRule& b, const BeliefState& state) {
    for (const auto& l : b.pos)
        if (!state[static_cast<std::size_t>(l.ctx)].count(l.atom))
            return false;
    for (const auto& l : b.neg)
        if (state[static_cast<std::size_t>(l.ctx)].count(l.atom))
            return false;
    return true;
}

} // namespace

const std::vector<AtomSet>& AccCache::acceptable(int ctx, const AtomSet& extra_heads) {
    auto key = std::make_pair(ctx, extra_heads);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        auto sets = acceptable_sets(mcs_->contexts[static_cast<std::size_t>(ctx)].program,
                                    extra_heads, limits_);
        it = memo_.emplace(std::move(key), std::move(sets)).first;
    }
    return it->second;
}

bool AccCache::accepts(int ctx, const AtomSet& extra_heads, const AtomSet& belief_set) {
    const auto& sets = acceptable(ctx, extra_heads);
    return std::binary_search(sets.begin(), sets.end(), belief_set);
}

std::vector<AtomSet> applicable_bridge_heads(const Mcs& mcs, const BeliefState& state) {
    check_context_refs(mcs);
    check_state_shape(mcs, state);
    std::vector<AtomSet> heads(mcs.contexts.size());
    for (const auto& b : mcs.bridges)
        if (bridge_applicable(b, state))
            heads[static_cast<std::size_t>(b.target)].insert(b.head);
    return heads;
}

bool is_equilibrium(const Mcs& mcs, const BeliefState& state, AccCache* cache,
                    const Limits& limits) {
    check_state_shape(mcs, state);
    const auto heads = applicable_bridge_heads(mcs, state);
    AccCache local(mcs, limits);
    AccCache& acc = cache ? *cache : local;
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
        if (!acc.accepts(static_cast<int>(i), heads[i], state[i]))
            return false;
    return true;
}

namespace {

/// Deduplicated, sorted candidate belief sets per context: ACC of the local
/// kb extended with every subset of incoming bridge heads.
std::vector<std::vector<AtomSet>> candidate_sets(const Mcs& mcs, AccCache& acc) {
    std::vector<std::vector<AtomSet>> candidates(mcs.contexts.size());
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i) {
        const AtomSet heads = mcs.incoming_heads(static_cast<int>(i));
        if (heads.size() > 16)
            fail(Errc::search_space_exceeded,
                 "context '" + mcs.contexts[i].name + "' has " + std::to_string(heads.size()) +
                     " incoming bridge heads");
        const std::vector<Atom> head_list(heads.begin(), heads.end());
        std::set<AtomSet> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << head_list.size()); ++mask) {
            AtomSet subset;
            for (std::size_t k = 0; k < head_list.size(); ++k)
                if (mask & (std::uint64_t{1} << k))
                    subset.insert(head_list[k]);
            for (const auto& set : acc.acceptable(static_cast<int>(i), subset))
                seen.insert(set);
        }
        candidates[i].assign(seen.begin(), seen.end());
    }
    return candidates;
}

template <typename Visit>
void for_each_candidate(const std::vector<std::vector<AtomSet>>& candidates, const Limits& limits,
                        Visit&& visit) {
    std::int64_t total = 1;
    for (const auto& c : candidates) {
        if (c.empty())
            return; // some context accepts nothing at all
        total *= static_cast<std::int64_t>(c.size());
        if (total > limits.max_candidates)
            fail(Errc::search_space_exceeded,
                 "candidate space exceeds " + std::to_string(limits.max_candidates) + " states");
    }
    BeliefState state(candidates.size());
    std::vector<std::size_t> pick(candidates.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            state[i] = candidates[i][pick[i]];
        visit(state);
        std::size_t i = candidates.size();
        while (i > 0) {
            --i;
            if (++pick[i] < candidates[i].size())
                break;
            pick[i] = 0;
            if (i == 0)
                return;
        }
        if (candidates.empty())
            return;
    }
}

} // namespace

std::vector<BeliefState> enumerate_equilibria(const Mcs& mcs, const Limits& limits) {
    check_context_refs(mcs);
    AccCache acc(mcs, limits);
    const auto candidates = candidate_sets(mcs, acc);
    std::vector<BeliefState> result;
    for_each_candidate(candidates, limits, [&](const BeliefState& state) {
        if (is_equilibrium(mcs, state, &acc, limits))
            result.push_back(state);
    });
    std::sort(result.begin(), result.end());
    return result;
}

BeliefState grounded_equilibrium(const Mcs& mcs, const Limits& limits) {
    check_context_refs(mcs);
    if (!mcs.is_definite())
        fail(Errc::not_definite, "grounded equilibrium requires a definite system");
    for (const auto& c : mcs.contexts) {
        if (c.program.has_choices())
            fail(Errc::not_definite, "grounded equilibrium: context '" + c.name +
                                         "' carries choice clauses");
        if (c.program.has_denies())
            fail(Errc::not_definite, "grounded equilibrium: context '" + c.name +
                                         "' carries deny clauses");
    }
    (void)limits;
    BeliefState state(mcs.contexts.size());
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
        state[i] = least_model(mcs.contexts[i].program);
    while (true) {
        const auto heads = applicable_bridge_heads(mcs, state);
        BeliefState next(mcs.contexts.size());
        for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
            next[i] = least_model(mcs.contexts[i].program, heads[i]);
        if (next == state)
            return state;
        state = std::move(next);
    }
}

ConsistencyReport check_consistency(const Mcs& mcs, const Limits& limits) {
    check_context_refs(mcs);
    AccCache acc(mcs, limits);
    const auto candidates = candidate_sets(mcs, acc);
    ConsistencyReport report;
    for_each_candidate(candidates, limits, [&](const BeliefState& state) {
        ++report.candidates_checked;
        const auto heads = applicable_bridge_heads(mcs, state);
        std::vector<int> failed;
        for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
            if (!acc.accepts(static_cast<int>(i), heads[i], state[i]))
                failed.push_back(static_cast<int>(i));
        if (failed.empty()) {
            report.equilibria.push_back(state);
        } else if (report.failures.size() < ConsistencyReport::max_recorded_failures) {
            report.failures.push_back({state, std::move(failed)});
        }
    });
    std::sort(report.equilibria.begin(), report.equilibria.end());
    report.consistent = !report.equilibria.empty() || mcs.contexts.empty();
    return report;
}

} // namespace mcsc
