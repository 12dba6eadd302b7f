#include "namelint/naming.hpp"

namespace namelint {

std::optional<std::string> extract_name(const Node &node) {
  switch (node.kind) {
  case NodeKind::Identifier:
    return std::string(id_prefix) + node.name;
  case NodeKind::Literal:
    if (node.value.empty())
      return std::nullopt;
    return std::string(lit_prefix) + node.value;
  case NodeKind::This:
    return std::string(lit_prefix) + "this";
  case NodeKind::Update:
    return extract_name(node.child(0));
  case NodeKind::Member:
    if (node.computed)
      return extract_name(node.child(0));
    return std::string(id_prefix) + node.name;
  case NodeKind::Call:
    return extract_name(node.child(0));
  default:
    return std::nullopt;
  }
}

std::vector<std::string> embedding_token_stream(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) {
    if (t.kind == TokenKind::Identifier)
      out.push_back(std::string(id_prefix) + t.text);
    else if (t.is_literal())
      out.push_back(std::string(lit_prefix) + t.value);
    else if (t.is(TokenKind::Keyword, "this"))
      out.push_back(std::string(lit_prefix) + "this");
    else
      out.push_back(t.text);
  }
  return out;
}

} // namespace namelint
