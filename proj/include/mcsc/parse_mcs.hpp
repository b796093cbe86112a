// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "mcsc/types.hpp"

#include <string>
#include <string_view>

namespace mcsc {

/// Textual MCS language.
///
///   system   := context*
///   context  := "context" NAME ("asp" | "cwa")? "{" stmt* "}"
///   stmt     := "atoms" ATOM+ "."                 (explicit alphabet)
///             | "choice" ATOM ("|" ATOM)* "."
///             | "deny" ATOM ("," ATOM)* "."
///             | ATOM (":-" lit ("," lit)*)? degree? "."
///             | "(" NAME ":" ATOM ")" ":-" blit ("," blit)* degree? "."
///   lit      := "not"? ATOM
///   blit     := "not"? "(" NAME ":" ATOM ")"
///   degree   := "[" DECIMAL "]"
///
/// "%" starts a line comment. Without an `atoms` declaration a context's
/// alphabet is inferred as its local atoms plus incoming bridge heads.
struct McsDocument {
    Mcs mcs;
};

McsDocument parse_mcs(std::string_view text);

/// Canonical text; parse(print(m)) reconstructs m exactly.
std::string print_mcs(const Mcs& mcs);

} // namespace mcsc
