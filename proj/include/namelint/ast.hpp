#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

enum class NodeKind : std::uint8_t {
  Program,
  FunctionDecl,
  FunctionExpr,
  Block,
  VarDecl,
  ExprStmt,
  If,
  For,
  While,
  Return,
  Assign,
  Call,
  New,
  Member,
  Binary,
  Logical,
  Unary,
  Update,
  Conditional,
  Identifier,
  Literal,
  This,
  Array,
  Object,
  Empty,
  Opaque,
};

inline constexpr std::size_t node_kind_count = 26;

const char *to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

enum class LiteralType : std::uint8_t { None, Number, String, Boolean, Null };

const char *to_string(LiteralType type);
std::optional<LiteralType> literal_type_from_string(std::string_view name);

struct Position {
  int line = 1;
  int column = 0;

  friend auto operator<=>(const Position &, const Position &) = default;
};

struct Span {
  Position start;
  Position end;

  bool contains(const Span &inner) const noexcept {
    return start <= inner.start && inner.end <= end;
  }
};

/// One syntax tree node. Children are stored by value in source order; the
/// meaning of each child slot depends on the kind:
///
///   Program, Block       statements
///   FunctionDecl/Expr    [body Block]; `name`, `params`
///   VarDecl              declarators: Identifier, or Assign("=", Identifier,
///                        init); `op` holds var/let/const
///   ExprStmt             [expression]
///   If                   [test, consequent, alternate?]
///   For                  [init, test, update, body]; omitted clauses Empty
///   While                [test, body]
///   Return               [argument?]
///   Assign               [target, value]; `op`
///   Call, New            [callee, arguments...]
///   Member               [base] + [index] when computed; `name` otherwise
///   Binary, Logical      [left, right]; `op`
///   Unary, Update        [argument]; `op`, `prefix`
///   Conditional          [test, consequent, alternate]
///   Identifier           `name`
///   Literal              `value`, `literal_type`
///   Array                elements
///   Object               property values; keys in `params`
///   Opaque               children in document order; `name` is the
///                        foreign node type
struct Node {
  NodeKind kind = NodeKind::Empty;
  std::vector<Node> children;
  std::string op;
  std::string name;
  std::string value;
  LiteralType literal_type = LiteralType::None;
  std::vector<std::string> params;
  bool computed = false;
  bool prefix = false;
  Span span;

  Node() = default;
  explicit Node(NodeKind k) : kind(k) {}

  const Node &child(std::size_t i) const { return children.at(i); }
  bool is(NodeKind k) const noexcept { return kind == k; }

  /// Structural equality that ignores spans.
  bool same_shape(const Node &other) const;
  /// Structural equality including start positions.
  bool same_tree(const Node &other) const;
};

/// Pre-order traversal. The callback receives the node and the chain of its
/// ancestors, nearest last.
using NodeVisitor =
    std::function<void(const Node &, const std::vector<const Node *> &)>;
void walk(const Node &root, const NodeVisitor &visit);

/// Debug rendering as an s-expression, used by tests and diagnostics.
std::string dump(const Node &node);

} // namespace namelint
