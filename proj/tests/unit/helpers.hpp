// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/problem_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace test_helpers {

using namespace mcsc;

inline Rule R(Atom head, AtomSet pos = {}, AtomSet neg = {}) {
    return Rule{std::move(head), std::move(pos), std::move(neg)};
}

inline PossRule PR(Rule rule, const char* degree = "1") {
    return PossRule{std::move(rule), Degree::parse(degree)};
}

inline Program prog(Semantics semantics, std::vector<PossRule> rules,
                    std::vector<ChoiceClause> choices = {}, std::vector<DenyClause> denies = {}) {
    Program p;
    p.semantics = semantics;
    p.rules = std::move(rules);
    p.choices = std::move(choices);
    p.denies = std::move(denies);
    p.alphabet = p.mentioned_atoms();
    return p;
}

inline std::string data_file(const std::string& name) {
    return std::string(MCSC_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline CoalitionProblem load_robots() {
    return load_problem_file(data_file("robots.json"));
}

/// Example-1 style scholarly system, built programmatically: c1 is an
/// answer-set program choosing exactly one computing category, c2 and c3 are
/// propositional/Horn contexts under CWA.
inline Mcs scholars(bool with_profb) {
    Mcs mcs;
    Context c1;
    c1.name = "c1";
    c1.program = prog(Semantics::answer_set,
                      {PR(R("sensors")), PR(R("corba")),
                       PR(R("distributedComputing", {"corba"}, {"centralizedComputing"}))},
                      {}, {DenyClause{{"centralizedComputing", "distributedComputing"}}});
    Context c2;
    c2.name = "c2";
    std::vector<PossRule> kb2 = {PR(R("profA"))};
    if (with_profb)
        kb2.push_back(PR(R("profB")));
    c2.program = prog(Semantics::choice_minimal_model, std::move(kb2));
    Context c3;
    c3.name = "c3";
    c3.program =
        prog(Semantics::choice_minimal_model, {PR(R("ambientComputing", {"ubiquitousComputing"}))});
    mcs.contexts = {std::move(c1), std::move(c2), std::move(c3)};

    BridgeRule r1{0, "centralizedComputing", {{1, "middleware"}}, {}, Degree::one()};
    BridgeRule r2{0, "distributedComputing", {{2, "ambientComputing"}}, {}, Degree::one()};
    BridgeRule r3{1, "middleware", {{0, "corba"}}, {}, Degree::one()};
    BridgeRule r4{2, "ubiquitousComputing", {{0, "sensors"}, {1, "profB"}}, {}, Degree::one()};
    mcs.bridges = {r1, r2, r3, r4};
    for (int i = 0; i < 3; ++i) {
        auto heads = mcs.incoming_heads(i);
        mcs.contexts[static_cast<std::size_t>(i)].program.alphabet.insert(heads.begin(),
                                                                          heads.end());
    }
    return mcs;
}

/// Possibilistic variant (all contexts are poss-programs).
inline Mcs poss_scholars() {
    Mcs mcs;
    mcs.possibilistic = true;
    Context c1;
    c1.name = "c1";
    c1.program = prog(Semantics::answer_set,
                      {PR(R("sensors")), PR(R("corba")),
                       PR(R("distributedComputing", {"corba"}, {"centralizedComputing"}), "0.8")});
    Context c2;
    c2.name = "c2";
    c2.program = prog(Semantics::answer_set, {PR(R("profA"))});
    Context c3;
    c3.name = "c3";
    c3.program =
        prog(Semantics::answer_set, {PR(R("ambientComputing", {"ubiquitousComputing"}), "0.9")});
    mcs.contexts = {std::move(c1), std::move(c2), std::move(c3)};

    BridgeRule r1{0, "centralizedComputing", {{1, "middleware"}}, {}, Degree::parse("0.7")};
    BridgeRule r2{0, "distributedComputing", {{2, "ambientComputing"}}, {}, Degree::parse("0.6")};
    BridgeRule r3{1, "middleware", {{0, "corba"}}, {}, Degree::parse("0.9")};
    BridgeRule r4{2, "ubiquitousComputing", {{0, "sensors"}, {1, "profB"}}, {},
                  Degree::parse("0.8")};
    mcs.bridges = {r1, r2, r3, r4};
    for (int i = 0; i < 3; ++i) {
        auto heads = mcs.incoming_heads(i);
        mcs.contexts[static_cast<std::size_t>(i)].program.alphabet.insert(heads.begin(),
                                                                          heads.end());
    }
    return mcs;
}

/// Canonical form for order-insensitive system comparison.
inline Mcs canonical(Mcs mcs) {
    std::sort(mcs.bridges.begin(), mcs.bridges.end());
    for (auto& c : mcs.contexts) {
        std::sort(c.program.rules.begin(), c.program.rules.end());
        std::sort(c.program.choices.begin(), c.program.choices.end());
        std::sort(c.program.denies.begin(), c.program.denies.end());
    }
    return mcs;
}

} // namespace test_helpers
