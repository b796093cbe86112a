// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace mcsc {

enum class Errc {
    parse_error,
    schema_error,
    degree_out_of_range,
    invalid_program,
    rule_not_definite,
    alphabet_too_large,
    search_space_exceeded,
    unknown_context,
    not_definite,
    unknown_agent,
    unknown_action,
    unknown_goal,
    missing_distance,
    missing_possibility,
    weight_mismatch,
    non_positive_score,
    zero_column,
    graph_too_large,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Syntax/semantic error in a textual document, with 1-based source position.
class SourceError : public Error {
public:
    SourceError(Errc code, const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace mcsc
