// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace mcsc {

std::string render_text(const ResultReport& report) {
    std::ostringstream out;
    out << "mode: " << report.mode << "\n";
    if (report.inconsistent)
        out << "INCONSISTENT\n";
    else
        out << "equilibria: " << report.equilibria.size() << "\n";
    for (const auto& eq : report.equilibria) {
        out << "equilibrium " << eq.id << "\n";
        for (const auto& ctx : eq.contexts) {
            out << "  " << ctx.context << ":";
            if (!ctx.annotated.empty()) {
                for (const auto& [atom, degree] : ctx.annotated)
                    out << " " << atom << "[" << degree << "]";
            } else {
                for (const auto& atom : ctx.atoms)
                    out << " " << atom;
            }
            out << "\n";
        }
    }
    for (const auto& coalition : report.coalitions) {
        out << "coalition " << coalition.id << "\n";
        for (const auto& a : coalition.assignments) {
            out << "  " << a.goal << " -> " << a.agent;
            if (!a.plan.empty())
                out << " via " << a.plan;
            if (!a.necessity.empty())
                out << " [" << a.necessity << "]";
            out << "\n";
        }
        for (const auto& goal : coalition.unassigned_goals)
            out << "  " << goal << " -> unachieved\n";
    }
    if (!report.metric_rows.empty()) {
        out << "scores:";
        for (const auto& c : report.criteria)
            out << " " << c;
        out << "\n";
        for (const auto& row : report.metric_rows) {
            out << "  " << row.id << ":";
            for (const auto& s : row.scores)
                out << " " << s;
            out << "\n";
        }
    }
    if (report.ranking) {
        out << "ranking (" << report.ranking->method << "):\n";
        for (std::size_t i = 0; i < report.ranking->entries.size(); ++i) {
            const auto& e = report.ranking->entries[i];
            out << "  " << (i + 1) << ". " << e.id << " " << e.display << "\n";
        }
    }
    for (const auto& d : report.diagnostics)
        out << "note: " << d << "\n";
    return out.str();
}

std::string render_json(const ResultReport& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["command"] = report.command;
    doc["mode"] = report.mode;
    doc["inconsistent"] = report.inconsistent;
    doc["equilibria"] = ordered_json::array();
    for (const auto& eq : report.equilibria) {
        ordered_json entry;
        entry["id"] = eq.id;
        entry["contexts"] = ordered_json::array();
        for (const auto& ctx : eq.contexts) {
            ordered_json c;
            c["context"] = ctx.context;
            c["atoms"] = ctx.atoms;
            if (!ctx.raw_atoms.empty())
                c["raw_atoms"] = ctx.raw_atoms;
            if (!ctx.annotated.empty()) {
                ordered_json annotated = ordered_json::array();
                for (const auto& [atom, degree] : ctx.annotated)
                    annotated.push_back({{"atom", atom}, {"necessity", degree}});
                c["annotated"] = std::move(annotated);
            }
            entry["contexts"].push_back(std::move(c));
        }
        doc["equilibria"].push_back(std::move(entry));
    }
    doc["coalitions"] = ordered_json::array();
    for (const auto& coalition : report.coalitions) {
        ordered_json entry;
        entry["id"] = coalition.id;
        entry["assignments"] = ordered_json::array();
        for (const auto& a : coalition.assignments) {
            ordered_json assignment;
            assignment["goal"] = a.goal;
            assignment["agent"] = a.agent;
            assignment["plan"] = a.plan;
            assignment["necessity"] = a.necessity;
            entry["assignments"].push_back(std::move(assignment));
        }
        entry["unassigned_goals"] = coalition.unassigned_goals;
        doc["coalitions"].push_back(std::move(entry));
    }
    if (!report.metric_rows.empty()) {
        ordered_json metrics;
        metrics["criteria"] = report.criteria;
        metrics["rows"] = ordered_json::array();
        for (const auto& row : report.metric_rows)
            metrics["rows"].push_back({{"id", row.id}, {"scores", row.scores}});
        doc["metrics"] = std::move(metrics);
    }
    if (report.ranking) {
        ordered_json ranking;
        ranking["method"] = report.ranking->method;
        ranking["order"] = ordered_json::array();
        for (const auto& e : report.ranking->entries)
            ranking["order"].push_back({{"id", e.id}, {"score", e.display}});
        doc["ranking"] = std::move(ranking);
    }
    doc["diagnostics"] = report.diagnostics;
    return doc.dump(2) + "\n";
}

} // namespace mcsc
