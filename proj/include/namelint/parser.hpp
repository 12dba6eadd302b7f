#pragma once

#include "namelint/ast.hpp"
#include "namelint/token.hpp"

#include <span>
#include <string_view>

namespace namelint {

/// Parses a source file of the supported JavaScript subset into a Program
/// node. Semicolons are mandatory. Recognized constructs outside the subset
/// (`new`, `switch`, arrow functions, ...) are rejected with ParseError.
Node parse(std::string_view source, std::string_view file_id = {});

/// Same as parse(), over an already tokenized file.
Node parse_tokens(std::span<const Token> tokens);

} // namespace namelint
