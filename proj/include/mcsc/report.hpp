// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/evaluate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mcsc {

/// Machine- and human-renderable outcome of one CLI workflow. Field order is
/// fixed; rendering the same report twice is byte-identical.
struct ResultReport {
    struct ContextBeliefs {
        std::string context;
        std::vector<std::string> atoms;     // projected onto the problem vocabulary
        std::vector<std::string> raw_atoms; // including compiler-internal atoms, when distinct
        std::vector<std::pair<std::string, std::string>> annotated; // atom -> necessity
    };

    struct EquilibriumEntry {
        std::string id;
        std::vector<ContextBeliefs> contexts;
    };

    struct AssignmentEntry {
        std::string goal;
        std::string agent;
        std::string plan;
        std::string necessity;
    };

    struct CoalitionEntry {
        std::string id;
        std::vector<AssignmentEntry> assignments;
        std::vector<std::string> unassigned_goals;
    };

    struct MetricRow {
        std::string id;
        std::vector<std::string> scores;
    };

    std::string command; // solve | rank | check
    std::string mode;    // classical | possibilistic
    bool inconsistent = false;
    std::vector<EquilibriumEntry> equilibria;
    std::vector<CoalitionEntry> coalitions;
    std::vector<std::string> criteria;
    std::vector<MetricRow> metric_rows;
    std::optional<Ranking> ranking;
    std::vector<std::string> diagnostics;
};

std::string render_text(const ResultReport& report);
std::string render_json(const ResultReport& report);

} // namespace mcsc
