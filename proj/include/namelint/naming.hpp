#pragma once

#include "namelint/ast.hpp"
#include "namelint/token.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace namelint {

inline constexpr std::string_view id_prefix = "ID:";
inline constexpr std::string_view lit_prefix = "LIT:";

/// Name of an expression, prefixed with "ID:" or "LIT:", or nullopt when the
/// expression has no name (function expressions, binary expressions, ...).
///
///   list            ID:list        this.msg      ID:msg
///   23              LIT:23         i++           ID:i
///   this            LIT:this       config.get()  ID:get
///   x[i]            ID:x           db.allNames()[3]  ID:allNames
std::optional<std::string> extract_name(const Node &node);

/// The token sequence CBOW trains on. Identifiers and literals are prefixed
/// like extracted names, `this` becomes LIT:this, everything else keeps its
/// raw text.
std::vector<std::string> embedding_token_stream(std::span<const Token> tokens);

} // namespace namelint
