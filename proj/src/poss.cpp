// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/poss.hpp"

#include "mcsc/errors.hpp"

#include <algorithm>
#include <optional>

namespace mcsc {

namespace {

struct FlatRule {
    int target = 0;
    Atom head;
    std::vector<CtxAtom> pos;
    std::vector<CtxAtom> neg;
    Degree necessity;
};

bool holds(const BeliefState& state, const CtxAtom& l) {
    return state[static_cast<std::size_t>(l.ctx)].count(l.atom) != 0;
}

/// Evaluates the possibility distribution of one system against many states,
/// sharing the flattened rules and the ACC memo. Negative bodies are kept and
/// filtered per queried state, which is exactly evaluation on the reduct
/// w.r.t. that state (for definite systems the filter is vacuous).
class PossibilityEvaluator {
public:
    explicit PossibilityEvaluator(const Mcs& mcs, Limits limits = {})
        : mcs_(&mcs), limits_(limits), cache_(mcs, limits) {
        for (std::size_t i = 0; i < mcs.contexts.size(); ++i) {
            const auto& program = mcs.contexts[i].program;
            for (const auto& r : program.rules) {
                FlatRule f;
                f.target = static_cast<int>(i);
                f.head = r.rule.head;
                for (const auto& a : r.rule.pos)
                    f.pos.push_back({static_cast<int>(i), a});
                for (const auto& a : r.rule.neg)
                    f.neg.push_back({static_cast<int>(i), a});
                f.necessity = r.necessity;
                rules_.push_back(std::move(f));
            }
        }
        for (const auto& b : mcs.bridges) {
            FlatRule f;
            f.target = b.target;
            f.head = b.head;
            f.pos.assign(b.pos.begin(), b.pos.end());
            f.neg.assign(b.neg.begin(), b.neg.end());
            f.necessity = b.necessity;
            rules_.push_back(std::move(f));
        }
    }

    Degree possibility(const BeliefState& state) {
        // Rules surviving the reduct w.r.t. `state`, split into applicable
        // ones and the rest.
        std::vector<const FlatRule*> applicable;
        Degree worst = Degree::zero();
        auto note_violation = [&](Degree d) { worst = deg_max(worst, d); };

        for (const auto& f : rules_) {
            bool kept = std::none_of(f.neg.begin(), f.neg.end(),
                                     [&](const CtxAtom& l) { return holds(state, l); });
            if (!kept)
                continue;
            bool body = std::all_of(f.pos.begin(), f.pos.end(),
                                    [&](const CtxAtom& l) { return holds(state, l); });
            if (!body)
                continue;
            applicable.push_back(&f);
            if (!state[static_cast<std::size_t>(f.target)].count(f.head))
                note_violation(f.necessity);
        }

        // Licensing: every believed atom must be the head of an applicable
        // rule or an alternative of a choice clause of its context.
        std::vector<AtomSet> licensed(state.size());
        for (const auto* f : applicable)
            licensed[static_cast<std::size_t>(f->target)].insert(f->head);
        for (std::size_t i = 0; i < state.size(); ++i)
            for (const auto& c : mcs_->contexts[i].program.choices)
                licensed[i].insert(c.alternatives.begin(), c.alternatives.end());
        for (std::size_t i = 0; i < state.size(); ++i)
            for (const auto& atom : state[i])
                if (!licensed[i].count(atom))
                    return Degree::zero();

        if (!grounded(state, applicable))
            return Degree::zero();

        if (is_equilibrium(*mcs_, state, &cache_, limits_))
            return Degree::one();

        // Choice clauses are necessity-1 disjunctive facts; deny clauses are
        // necessity-1 constraints.
        for (std::size_t i = 0; i < state.size(); ++i) {
            const auto& program = mcs_->contexts[i].program;
            for (const auto& c : program.choices) {
                bool hit = std::any_of(c.alternatives.begin(), c.alternatives.end(),
                                       [&](const Atom& a) { return state[i].count(a) != 0; });
                if (!hit)
                    note_violation(Degree::one());
            }
            for (const auto& d : program.denies) {
                bool all = std::all_of(d.atoms.begin(), d.atoms.end(),
                                       [&](const Atom& a) { return state[i].count(a) != 0; });
                if (all)
                    note_violation(Degree::one());
            }
        }
        return worst.one_minus();
    }

private:
    bool grounded(const BeliefState& state, const std::vector<const FlatRule*>& applicable) {
        std::set<CtxAtom> available;
        for (std::size_t i = 0; i < state.size(); ++i)
            for (const auto& c : mcs_->contexts[i].program.choices)
                for (const auto& a : c.alternatives)
                    available.insert({static_cast<int>(i), a});
        std::vector<bool> placed(applicable.size(), false);
        std::size_t remaining = applicable.size();
        bool progress = true;
        while (remaining > 0 && progress) {
            progress = false;
            for (std::size_t k = 0; k < applicable.size(); ++k) {
                if (placed[k])
                    continue;
                const auto& pos = applicable[k]->pos;
                bool ready = std::all_of(pos.begin(), pos.end(), [&](const CtxAtom& l) {
                    return available.count(l) != 0;
                });
                if (!ready)
                    continue;
                placed[k] = true;
                available.insert({applicable[k]->target, applicable[k]->head});
                --remaining;
                progress = true;
            }
        }
        return remaining == 0;
    }

    const Mcs* mcs_;
    Limits limits_;
    AccCache cache_;
    std::vector<FlatRule> rules_;
};

/// Iterates a product of per-context powersets, invoking `visit` with each
/// belief state. `spaces[i]` lists the atoms context i may believe.
template <typename Visit>
void for_each_state(const std::vector<std::vector<Atom>>& spaces, const Limits& limits,
                    Visit&& visit) {
    std::size_t total_bits = 0;
    for (const auto& s : spaces)
        total_bits += s.size();
    if (total_bits >= 63 ||
        (std::int64_t{1} << total_bits) > limits.max_candidates)
        fail(Errc::search_space_exceeded,
             "state space of 2^" + std::to_string(total_bits) + " exceeds the bound");
    const std::uint64_t count = std::uint64_t{1} << total_bits;
    BeliefState state(spaces.size());
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::size_t bit = 0;
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            state[i].clear();
            for (const auto& atom : spaces[i]) {
                if (mask & (std::uint64_t{1} << bit))
                    state[i].insert(atom);
                ++bit;
            }
        }
        visit(state);
    }
}

} // namespace

Mcs classical_projection(const Mcs& mcs) {
    Mcs plain = mcs;
    plain.possibilistic = false;
    for (auto& c : plain.contexts)
        for (auto& r : c.program.rules)
            r.necessity = Degree::one();
    for (auto& b : plain.bridges)
        b.necessity = Degree::one();
    return plain;
}

Mcs poss_reduct(const Mcs& mcs, const BeliefState& state) {
    if (state.size() != mcs.contexts.size())
        fail(Errc::invalid_program, "belief state shape does not match the system");
    Mcs reduced = mcs;
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i)
        reduced.contexts[i].program = reduct(mcs.contexts[i].program, state[i]);
    reduced.bridges.clear();
    for (const auto& b : mcs.bridges) {
        bool kept = std::none_of(b.neg.begin(), b.neg.end(),
                                 [&](const CtxAtom& l) { return holds(state, l); });
        if (!kept)
            continue;
        BridgeRule projected = b;
        projected.neg.clear();
        reduced.bridges.push_back(std::move(projected));
    }
    return reduced;
}

Degree possibility_of_state(const Mcs& mcs, const BeliefState& state, const Limits& limits) {
    if (state.size() != mcs.contexts.size())
        fail(Errc::invalid_program, "belief state shape does not match the system");
    PossibilityEvaluator eval(mcs, limits);
    return eval.possibility(state);
}

namespace {

std::vector<std::vector<Atom>> full_spaces(const Mcs& mcs) {
    std::vector<std::vector<Atom>> spaces(mcs.contexts.size());
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i) {
        AtomSet atoms = mcs.contexts[i].program.alphabet;
        const AtomSet heads = mcs.incoming_heads(static_cast<int>(i));
        atoms.insert(heads.begin(), heads.end());
        spaces[i].assign(atoms.begin(), atoms.end());
    }
    return spaces;
}

} // namespace

Degree atom_possibility(const Mcs& mcs, int ctx, const Atom& atom, const Limits& limits) {
    if (ctx < 0 || ctx >= static_cast<int>(mcs.contexts.size()))
        fail(Errc::unknown_context, "context #" + std::to_string(ctx + 1));
    PossibilityEvaluator eval(mcs, limits);
    Degree best = Degree::zero();
    for_each_state(full_spaces(mcs), limits, [&](const BeliefState& state) {
        if (state[static_cast<std::size_t>(ctx)].count(atom))
            best = deg_max(best, eval.possibility(state));
    });
    return best;
}

Degree atom_necessity(const Mcs& mcs, int ctx, const Atom& atom, const Limits& limits) {
    if (ctx < 0 || ctx >= static_cast<int>(mcs.contexts.size()))
        fail(Errc::unknown_context, "context #" + std::to_string(ctx + 1));
    PossibilityEvaluator eval(mcs, limits);
    Degree best = Degree::zero();
    for_each_state(full_spaces(mcs), limits, [&](const BeliefState& state) {
        if (!state[static_cast<std::size_t>(ctx)].count(atom))
            best = deg_max(best, eval.possibility(state));
    });
    return best.one_minus();
}

namespace detail {

PossBeliefState annotate_necessities(const Mcs& mcs, const BeliefState& base,
                                     const Limits& limits) {
    if (!mcs.is_definite())
        fail(Errc::not_definite, "necessity annotation requires a definite system");

    // Atoms forced by certain facts stay in every considered state: a state
    // missing one violates a necessity-1 rule and has possibility 0, so it
    // can never raise a maximum, and such atoms get necessity 1 outright.
    std::vector<AtomSet> fixed(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        for (const auto& r : mcs.contexts[i].program.rules)
            if (r.rule.is_fact() && r.necessity.is_one() && base[i].count(r.rule.head))
                fixed[i].insert(r.rule.head);

    std::vector<std::vector<Atom>> free_spaces(base.size());
    std::vector<CtxAtom> free_atoms;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (const auto& atom : base[i])
            if (!fixed[i].count(atom)) {
                free_spaces[i].push_back(atom);
                free_atoms.push_back({static_cast<int>(i), atom});
            }

    PossibilityEvaluator eval(mcs, limits);
    std::map<CtxAtom, Degree> best_without;
    for (const auto& ca : free_atoms)
        best_without[ca] = Degree::zero();

    for_each_state(free_spaces, limits, [&](const BeliefState& partial) {
        BeliefState state(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            state[i] = fixed[i];
            state[i].insert(partial[i].begin(), partial[i].end());
        }
        std::optional<Degree> pi;
        for (const auto& ca : free_atoms) {
            if (state[static_cast<std::size_t>(ca.ctx)].count(ca.atom))
                continue;
            if (!pi)
                pi = eval.possibility(state);
            auto& slot = best_without[ca];
            slot = deg_max(slot, *pi);
        }
    });

    PossBeliefState annotated(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (const auto& atom : base[i]) {
            Degree necessity = fixed[i].count(atom)
                                   ? Degree::one()
                                   : best_without[{static_cast<int>(i), atom}].one_minus();
            if (!necessity.is_zero())
                annotated[i].emplace(atom, necessity);
        }
    }
    return annotated;
}

} // namespace detail

PossBeliefState poss_grounded_equilibrium(const Mcs& mcs, const Limits& limits) {
    const BeliefState base = grounded_equilibrium(mcs, limits); // validates definiteness
    return detail::annotate_necessities(mcs, base, limits);
}

std::vector<PossBeliefState> poss_equilibria(const Mcs& mcs, const Limits& limits) {
    std::vector<PossBeliefState> result;
    for (const auto& state : enumerate_equilibria(mcs, limits)) {
        const Mcs reduced = poss_reduct(mcs, state);
        PossBeliefState annotated = detail::annotate_necessities(reduced, state, limits);
        if (classical_projection(annotated) == state)
            result.push_back(std::move(annotated));
    }
    return result;
}

} // namespace mcsc
