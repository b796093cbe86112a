// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/problem.hpp"

#include <string_view>

namespace mcsc {

/// Parses a coalition-problem document (JSON). Schema violations name the
/// offending key path. The document is validated before it is returned.
CoalitionProblem parse_problem(std::string_view text);

CoalitionProblem load_problem_file(const std::string& path);

} // namespace mcsc
