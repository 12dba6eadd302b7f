#pragma once

#include "namelint/token.hpp"

#include <string_view>
#include <vector>

namespace namelint {

/// Splits source text into tokens, dropping whitespace and comments.
/// Operators are matched by maximal munch. Throws LexError on anything the
/// subset does not lex (template strings, unterminated literals, stray
/// characters).
std::vector<Token> tokenize(std::string_view source,
                            std::string_view file_id = {});

} // namespace namelint
