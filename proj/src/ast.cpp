#include "namelint/ast.hpp"

#include <array>

namespace namelint {

namespace {

constexpr std::array<const char *, node_kind_count> kind_names = {
    "Program", "FunctionDecl", "FunctionExpr", "Block",      "VarDecl",
    "ExprStmt", "If",          "For",          "While",      "Return",
    "Assign",  "Call",         "New",          "Member",     "Binary",
    "Logical", "Unary",        "Update",       "Conditional", "Identifier",
    "Literal", "This",         "Array",        "Object",     "Empty",
    "Opaque"};

constexpr std::array<const char *, 5> literal_names = {"NONE", "number",
                                                       "string", "boolean",
                                                       "null"};

bool same_attrs(const Node &a, const Node &b) {
  return a.kind == b.kind && a.op == b.op && a.name == b.name &&
         a.value == b.value && a.literal_type == b.literal_type &&
         a.params == b.params && a.computed == b.computed &&
         a.prefix == b.prefix && a.children.size() == b.children.size();
}

void walk_impl(const Node &node, std::vector<const Node *> &path,
               const NodeVisitor &visit) {
  visit(node, path);
  path.push_back(&node);
  for (const Node &child : node.children)
    walk_impl(child, path, visit);
  path.pop_back();
}

void dump_impl(const Node &node, std::string &out) {
  out += '(';
  out += to_string(node.kind);
  if (!node.op.empty())
    out += " op=" + node.op;
  if (!node.name.empty())
    out += " name=" + node.name;
  if (node.kind == NodeKind::Literal)
    out += std::string(" ") + to_string(node.literal_type) + "=" + node.value;
  if (node.computed)
    out += " computed";
  if (node.prefix)
    out += " prefix";
  if (!node.params.empty()) {
    out += " [";
    for (std::size_t i = 0; i < node.params.size(); ++i) {
      if (i)
        out += ',';
      out += node.params[i];
    }
    out += ']';
  }
  for (const Node &child : node.children) {
    out += ' ';
    dump_impl(child, out);
  }
  out += ')';
}

} // namespace

const char *to_string(NodeKind kind) {
  return kind_names[static_cast<std::size_t>(kind)];
}

std::optional<NodeKind> node_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kind_names.size(); ++i)
    if (name == kind_names[i])
      return static_cast<NodeKind>(i);
  return std::nullopt;
}

const char *to_string(LiteralType type) {
  return literal_names[static_cast<std::size_t>(type)];
}

std::optional<LiteralType> literal_type_from_string(std::string_view name) {
  for (std::size_t i = 0; i < literal_names.size(); ++i)
    if (name == literal_names[i])
      return static_cast<LiteralType>(i);
  return std::nullopt;
}

bool Node::same_shape(const Node &other) const {
  if (!same_attrs(*this, other))
    return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!children[i].same_shape(other.children[i]))
      return false;
  return true;
}

bool Node::same_tree(const Node &other) const {
  if (!same_attrs(*this, other) || span.start != other.span.start)
    return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!children[i].same_tree(other.children[i]))
      return false;
  return true;
}

void walk(const Node &root, const NodeVisitor &visit) {
  std::vector<const Node *> path;
  walk_impl(root, path, visit);
}

std::string dump(const Node &node) {
  std::string out;
  dump_impl(node, out);
  return out;
}

} // namespace namelint
