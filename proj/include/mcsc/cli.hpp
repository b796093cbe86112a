// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcsc {

/// Full CLI entry point: `solve`, `rank` and `check` workflows.
/// Returns 0 on success, 1 on errors, 2 when a system has no equilibrium.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mcsc
