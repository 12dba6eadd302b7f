#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace namelint {

/// The closed set of binary and logical operators that the wrong-operator
/// detector mutates between. The order is part of every serialized model.
class OperatorAlphabet {
public:
  static constexpr std::array<std::string_view, 22> symbols = {
      "+",  "-",   "*",   "/",  "%",  "==", "===", "!=",
      "!==", "<",  "<=",  ">",  ">=", "&&", "||",  "&",
      "|",  "^",   "<<",  ">>", ">>>", "instanceof"};

  static constexpr std::size_t size() noexcept { return symbols.size(); }

  static std::optional<std::size_t> index_of(std::string_view op) noexcept {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == op)
        return i;
    return std::nullopt;
  }

  static bool contains(std::string_view op) noexcept {
    return index_of(op).has_value();
  }

  static bool is_logical(std::string_view op) noexcept {
    return op == "&&" || op == "||";
  }
};

} // namespace namelint
