// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/logic.hpp"
#include "mcsc/errors.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace mcsc;
using namespace test_helpers;

TEST_CASE("least model: fixpoint of definite rules") {
    CHECK(least_model(prog(Semantics::answer_set, {})) == AtomSet{});

    // one cross-fact implication, restricted to a single context
    auto p = prog(Semantics::answer_set, {PR(R("middleware", {"corba"}))});
    CHECK(least_model(p, {"corba"}) == AtomSet{"corba", "middleware"});

    auto chain = prog(Semantics::answer_set,
                      {PR(R("b", {"a"})), PR(R("c", {"b"})), PR(R("a"))});
    CHECK(least_model(chain) == AtomSet{"a", "b", "c"});

    auto notdef = prog(Semantics::answer_set, {PR(R("b", {"a"}, {"c"}))});
    CHECK_THROWS_AS(least_model(notdef), Error);
}

TEST_CASE("reduct follows the negative bodies literally") {
    auto p = prog(Semantics::answer_set, {PR(R("b", {"a"}, {"c"}))});
    CHECK(reduct(p, {"a"}).rules == std::vector<PossRule>{PR(R("b", {"a"}))});
    CHECK(reduct(p, {"a", "c"}).rules.empty());

    // Example-2 kb1 w.r.t. {sensors, corba}: the negative body is disjoint,
    // the 0.8 rule survives as its positive projection.
    auto kb1 = prog(Semantics::answer_set,
                    {PR(R("sensors")), PR(R("corba")),
                     PR(R("distributedComputing", {"corba"}, {"centralizedComputing"}), "0.8")});
    auto reduced = reduct(kb1, {"sensors", "corba"});
    CHECK(reduced.rules == std::vector<PossRule>{PR(R("sensors")), PR(R("corba")),
                                                 PR(R("distributedComputing", {"corba"}), "0.8")});
    // ... and w.r.t. a set containing centralizedComputing it is deleted.
    auto reduced2 = reduct(kb1, {"sensors", "corba", "centralizedComputing"});
    CHECK(reduced2.rules == std::vector<PossRule>{PR(R("sensors")), PR(R("corba"))});
}

TEST_CASE("answer sets via the reduct fixpoint") {
    CHECK(answer_sets(prog(Semantics::answer_set, {PR(R("a"))})) ==
          std::vector<AtomSet>{{"a"}});

    auto even = prog(Semantics::answer_set, {PR(R("a", {}, {"b"})), PR(R("b", {}, {"a"}))});
    CHECK(answer_sets(even) == std::vector<AtomSet>{{"a"}, {"b"}});

    auto odd = prog(Semantics::answer_set, {PR(R("a", {}, {"a"}))});
    CHECK(answer_sets(odd).empty());

    auto constrained = prog(Semantics::answer_set, {PR(R("a")), PR(R("b"))},
                            {}, {DenyClause{{"a", "b"}}});
    CHECK(answer_sets(constrained).empty());

    Program too_big = prog(Semantics::answer_set, {PR(R("a"))});
    for (int i = 0; i < 30; ++i)
        too_big.alphabet.insert("x" + std::to_string(i));
    CHECK_THROWS_AS(answer_sets(too_big), Error);
}

TEST_CASE("minimal models of choice knowledge bases") {
    // kb4 of the running example: a fact plus one capability choice
    auto kb4 = prog(Semantics::choice_minimal_model, {PR(R("a_3s"))},
                    {ChoiceClause{{"a_1c", "a_4c"}}});
    CHECK(minimal_models(kb4) ==
          std::vector<AtomSet>{{"a_1c", "a_3s"}, {"a_3s", "a_4c"}});

    auto plain = prog(Semantics::choice_minimal_model, {PR(R("x"))});
    CHECK(minimal_models(plain) == std::vector<AtomSet>{{"x"}});

    auto two_choices = prog(Semantics::choice_minimal_model, {},
                            {ChoiceClause{{"a", "b"}}, ChoiceClause{{"b", "c"}}});
    CHECK(minimal_models(two_choices) == std::vector<AtomSet>{{"a", "c"}, {"b"}});

    // deny clauses cut models
    auto blocked = prog(Semantics::choice_minimal_model, {PR(R("cE"))},
                        {ChoiceClause{{"a", "b"}}}, {DenyClause{{"a", "cE"}}});
    CHECK(minimal_models(blocked) == std::vector<AtomSet>{{"b", "cE"}});
}

TEST_CASE("applicable rules") {
    auto p = prog(Semantics::answer_set, {PR(R("b", {"a"}, {"c"}))});
    CHECK(applicable_rules(p, {"a"}).size() == 1);
    CHECK(applicable_rules(p, {"a", "c"}).empty());

    auto kb1 = prog(Semantics::answer_set,
                    {PR(R("sensors")), PR(R("corba")),
                     PR(R("distributedComputing", {"corba"}, {"centralizedComputing"}))});
    auto app = applicable_rules(kb1, {"sensors", "corba", "centralizedComputing"});
    REQUIRE(app.size() == 2);
    CHECK(app[0].rule.head == "sensors");
    CHECK(app[1].rule.head == "corba");
}

TEST_CASE("grounded rule sequences") {
    CHECK(is_grounded_ruleset({R("a")}));
    CHECK_FALSE(is_grounded_ruleset({R("a", {"b"}), R("b", {"a"})}));
    CHECK(is_grounded_ruleset({R("a"), R("b", {"a"})}));
    CHECK_THROWS_AS(is_grounded_ruleset({R("a", {}, {"b"})}), Error);
}

TEST_CASE("acceptable sets dispatch on the semantics tag") {
    auto asp = prog(Semantics::answer_set, {PR(R("a", {}, {"b"})), PR(R("b", {}, {"a"}))});
    CHECK(acceptable_sets(asp, {}).size() == 2);
    CHECK(acceptable_sets(asp, {"b"}) == std::vector<AtomSet>{{"b"}});

    auto cwa = prog(Semantics::choice_minimal_model, {}, {ChoiceClause{{"a", "b"}}});
    CHECK(acceptable_sets(cwa, {"z"}).size() == 2);
}
