// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/errors.hpp"

namespace mcsc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::parse_error: return "ParseError";
        case Errc::schema_error: return "SchemaError";
        case Errc::degree_out_of_range: return "DegreeOutOfRange";
        case Errc::invalid_program: return "InvalidProgram";
        case Errc::rule_not_definite: return "RuleNotDefinite";
        case Errc::alphabet_too_large: return "AlphabetTooLarge";
        case Errc::search_space_exceeded: return "SearchSpaceExceeded";
        case Errc::unknown_context: return "UnknownContext";
        case Errc::not_definite: return "NotDefinite";
        case Errc::unknown_agent: return "UnknownAgent";
        case Errc::unknown_action: return "UnknownAction";
        case Errc::unknown_goal: return "UnknownGoal";
        case Errc::missing_distance: return "MissingDistance";
        case Errc::missing_possibility: return "MissingPossibility";
        case Errc::weight_mismatch: return "WeightMismatch";
        case Errc::non_positive_score: return "NonPositiveScore";
        case Errc::zero_column: return "ZeroColumn";
        case Errc::graph_too_large: return "GraphTooLarge";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

SourceError::SourceError(Errc code, const std::string& message, int line, int column)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

} // namespace mcsc
