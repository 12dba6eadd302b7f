#pragma once

#include "namelint/ast.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace namelint {

/// ESTree-style JSON documents, as produced by external JavaScript parsers.
/// Nodes carry `type` and a start `loc` {line, column}; children use the
/// usual ESTree field names. Node types outside the subset become Opaque
/// nodes whose children are every nested node, in document order.
Node ingest_ast(const nlohmann::ordered_json &document);
Node ingest_ast(std::string_view document_text);

nlohmann::ordered_json export_ast(const Node &node);

/// Renders a tree back to subset source text. Nested expressions are fully
/// parenthesized, so parse(print_source(ast)) has the same shape as ast.
std::string print_source(const Node &node);

} // namespace namelint
