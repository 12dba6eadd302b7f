#include "namelint/parser.hpp"

#include "namelint/error.hpp"
#include "namelint/lexer.hpp"
#include "namelint/operators.hpp"

#include <array>
#include <utility>

namespace namelint {

namespace {

struct BinaryLevel {
  int precedence;
  std::array<std::string_view, 4> ops;
};

// Lowest precedence first.
constexpr std::array<BinaryLevel, 10> binary_levels = {{
    {1, {"||"}},
    {2, {"&&"}},
    {3, {"|"}},
    {4, {"^"}},
    {5, {"&"}},
    {6, {"==", "!=", "===", "!=="}},
    {7, {"<", ">", "<=", ">="}},
    {8, {"<<", ">>", ">>>"}},
    {9, {"+", "-"}},
    {10, {"*", "/", "%"}},
}};

bool is_assign_op(std::string_view op) {
  static constexpr std::array<std::string_view, 12> ops = {
      "=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", ">>>=", "&=", "|=", "^="};
  for (auto candidate : ops)
    if (candidate == op)
      return true;
  return false;
}

class Parser {
public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Node program() {
    Node root(NodeKind::Program);
    root.span.start = {1, 0};
    while (!at_end())
      root.children.push_back(statement());
    root.span.end = last_end_;
    return root;
  }

private:
  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token *peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  bool check(TokenKind kind, std::string_view text) const {
    const Token *t = peek();
    return t && t->is(kind, text);
  }
  bool check_op(std::string_view text) const {
    return check(TokenKind::Operator, text);
  }
  bool check_punct(std::string_view text) const {
    return check(TokenKind::Punctuation, text);
  }
  bool check_keyword(std::string_view text) const {
    return check(TokenKind::Keyword, text);
  }

  Position here() const {
    if (const Token *t = peek())
      return {t->line, t->column};
    return last_end_;
  }

  std::string describe_current() const {
    const Token *t = peek();
    if (!t)
      return "end of input";
    return std::string(to_string(t->kind)) + " '" + t->text + "'";
  }

  [[noreturn]] void fail(std::string expected) const {
    const Position at = here();
    throw ParseError(at.line, at.column, std::move(expected),
                     describe_current());
  }

  const Token &consume() {
    const Token &t = tokens_[pos_++];
    last_end_ = {t.line, t.column + static_cast<int>(t.text.size())};
    return t;
  }

  const Token &expect(TokenKind kind, std::string_view text) {
    if (!check(kind, text))
      fail("'" + std::string(text) + "'");
    return consume();
  }

  const Token &expect_identifier() {
    const Token *t = peek();
    if (!t || t->kind != TokenKind::Identifier)
      fail("identifier");
    return consume();
  }

  Node finish(Node node, Position start) const {
    node.span.start = start;
    node.span.end = last_end_;
    return node;
  }

  // --- statements ---------------------------------------------------------

  Node statement() {
    const Token *t = peek();
    const Position start = here();
    if (t->kind == TokenKind::Keyword) {
      if (t->text == "function")
        return function(NodeKind::FunctionDecl);
      if (t->text == "var" || t->text == "let" || t->text == "const") {
        Node decl = var_decl();
        expect(TokenKind::Punctuation, ";");
        return finish(std::move(decl), start);
      }
      if (t->text == "if")
        return if_statement();
      if (t->text == "for")
        return for_statement();
      if (t->text == "while")
        return while_statement();
      if (t->text == "return")
        return return_statement();
      if (t->text != "this" && t->text != "new" && t->text != "typeof" &&
          t->text != "void" && t->text != "delete")
        fail("statement");
    }
    if (check_punct("{"))
      return block();
    if (check_punct(";")) {
      consume();
      return finish(Node(NodeKind::Empty), start);
    }
    Node stmt(NodeKind::ExprStmt);
    stmt.children.push_back(expression());
    expect(TokenKind::Punctuation, ";");
    return finish(std::move(stmt), start);
  }

  Node block() {
    const Position start = here();
    expect(TokenKind::Punctuation, "{");
    Node node(NodeKind::Block);
    while (!check_punct("}")) {
      if (at_end())
        fail("'}'");
      node.children.push_back(statement());
    }
    consume();
    return finish(std::move(node), start);
  }

  Node var_decl() {
    const Position start = here();
    Node decl(NodeKind::VarDecl);
    decl.op = consume().text;
    do {
      const Position id_start = here();
      Node id(NodeKind::Identifier);
      id.name = expect_identifier().text;
      id = finish(std::move(id), id_start);
      if (check_op("=")) {
        consume();
        Node assign(NodeKind::Assign);
        assign.op = "=";
        assign.children.push_back(std::move(id));
        assign.children.push_back(assignment());
        decl.children.push_back(finish(std::move(assign), id_start));
      } else {
        decl.children.push_back(std::move(id));
      }
    } while (check_punct(",") && (consume(), true));
    return finish(std::move(decl), start);
  }

  Node if_statement() {
    const Position start = here();
    consume();
    expect(TokenKind::Punctuation, "(");
    Node node(NodeKind::If);
    node.children.push_back(expression());
    expect(TokenKind::Punctuation, ")");
    node.children.push_back(statement());
    if (check_keyword("else")) {
      consume();
      node.children.push_back(statement());
    }
    return finish(std::move(node), start);
  }

  // Omitted for-clauses have no text of their own; they sit at the `for`.
  static Node empty_clause(Position at) {
    Node node(NodeKind::Empty);
    node.span.start = node.span.end = at;
    return node;
  }

  Node for_statement() {
    const Position start = here();
    consume();
    expect(TokenKind::Punctuation, "(");
    Node node(NodeKind::For);
    if (check_punct(";"))
      node.children.push_back(empty_clause(start));
    else if (check_keyword("var") || check_keyword("let") ||
             check_keyword("const"))
      node.children.push_back(var_decl());
    else
      node.children.push_back(expression());
    expect(TokenKind::Punctuation, ";");
    node.children.push_back(check_punct(";") ? empty_clause(start) : expression());
    expect(TokenKind::Punctuation, ";");
    node.children.push_back(check_punct(")") ? empty_clause(start) : expression());
    expect(TokenKind::Punctuation, ")");
    node.children.push_back(statement());
    return finish(std::move(node), start);
  }

  Node while_statement() {
    const Position start = here();
    consume();
    expect(TokenKind::Punctuation, "(");
    Node node(NodeKind::While);
    node.children.push_back(expression());
    expect(TokenKind::Punctuation, ")");
    node.children.push_back(statement());
    return finish(std::move(node), start);
  }

  Node return_statement() {
    const Position start = here();
    consume();
    Node node(NodeKind::Return);
    if (!check_punct(";"))
      node.children.push_back(expression());
    expect(TokenKind::Punctuation, ";");
    return finish(std::move(node), start);
  }

  Node function(NodeKind kind) {
    const Position start = here();
    expect(TokenKind::Keyword, "function");
    Node node(kind);
    if (kind == NodeKind::FunctionDecl) {
      node.name = expect_identifier().text;
    } else if (const Token *t = peek(); t && t->kind == TokenKind::Identifier) {
      node.name = consume().text;
    }
    expect(TokenKind::Punctuation, "(");
    if (!check_punct(")")) {
      do {
        node.params.push_back(expect_identifier().text);
      } while (check_punct(",") && (consume(), true));
    }
    expect(TokenKind::Punctuation, ")");
    node.children.push_back(block());
    return finish(std::move(node), start);
  }

  // --- expressions --------------------------------------------------------

  Node expression() { return assignment(); }

  Node assignment() {
    const Position start = here();
    Node target = conditional();
    const Token *t = peek();
    if (!t || t->kind != TokenKind::Operator || !is_assign_op(t->text))
      return target;
    if (target.kind != NodeKind::Identifier && target.kind != NodeKind::Member)
      fail("assignable expression before '" + t->text + "'");
    Node node(NodeKind::Assign);
    node.op = consume().text;
    node.children.push_back(std::move(target));
    node.children.push_back(assignment());
    return finish(std::move(node), start);
  }

  Node conditional() {
    const Position start = here();
    Node test = binary(0);
    if (!check_op("?"))
      return test;
    consume();
    Node node(NodeKind::Conditional);
    node.children.push_back(std::move(test));
    node.children.push_back(assignment());
    expect(TokenKind::Punctuation, ":");
    node.children.push_back(assignment());
    return finish(std::move(node), start);
  }

  bool at_level_op(std::size_t level) const {
    const Token *t = peek();
    if (!t || t->kind != TokenKind::Operator)
      return false;
    for (auto op : binary_levels[level].ops)
      if (!op.empty() && op == t->text)
        return true;
    // instanceof shares the relational level.
    return binary_levels[level].precedence == 7 && t->text == "instanceof";
  }

  Node binary(std::size_t level) {
    if (level == binary_levels.size())
      return unary();
    const Position start = here();
    Node left = binary(level + 1);
    while (at_level_op(level)) {
      const std::string op = consume().text;
      Node node(OperatorAlphabet::is_logical(op) ? NodeKind::Logical
                                                 : NodeKind::Binary);
      node.op = op;
      node.children.push_back(std::move(left));
      node.children.push_back(binary(level + 1));
      left = finish(std::move(node), start);
    }
    return left;
  }

  Node unary() {
    const Position start = here();
    const Token *t = peek();
    if (!t)
      fail("expression");
    if (t->kind == TokenKind::Operator &&
        (t->text == "!" || t->text == "~" || t->text == "+" || t->text == "-")) {
      Node node(NodeKind::Unary);
      node.op = consume().text;
      node.prefix = true;
      node.children.push_back(unary());
      return finish(std::move(node), start);
    }
    if (t->kind == TokenKind::Keyword &&
        (t->text == "typeof" || t->text == "void" || t->text == "delete")) {
      Node node(NodeKind::Unary);
      node.op = consume().text;
      node.prefix = true;
      node.children.push_back(unary());
      return finish(std::move(node), start);
    }
    if (t->kind == TokenKind::Operator && (t->text == "++" || t->text == "--")) {
      Node node(NodeKind::Update);
      node.op = consume().text;
      node.prefix = true;
      node.children.push_back(unary());
      require_assignable(node.children.back(), node.op);
      return finish(std::move(node), start);
    }
    Node operand = call_member();
    if (check_op("++") || check_op("--")) {
      require_assignable(operand, peek()->text);
      Node node(NodeKind::Update);
      node.op = consume().text;
      node.children.push_back(std::move(operand));
      return finish(std::move(node), start);
    }
    return operand;
  }

  void require_assignable(const Node &node, const std::string &op) const {
    if (node.kind != NodeKind::Identifier && node.kind != NodeKind::Member)
      fail("assignable operand for '" + op + "'");
  }

  Node call_member() {
    const Position start = here();
    return postfix(primary(), start, true);
  }

  /// Member accesses and, when `calls`, argument lists following `node`.
  Node postfix(Node node, Position start, bool calls) {
    while (true) {
      if (check_punct(".")) {
        consume();
        const Token *t = peek();
        if (!t || (t->kind != TokenKind::Identifier &&
                   t->kind != TokenKind::Keyword &&
                   t->kind != TokenKind::BooleanLiteral &&
                   t->kind != TokenKind::NullLiteral &&
                   !(t->kind == TokenKind::Operator && t->text == "instanceof")))
          fail("property name");
        Node member(NodeKind::Member);
        member.name = consume().text;
        member.children.push_back(std::move(node));
        node = finish(std::move(member), start);
      } else if (check_punct("[")) {
        consume();
        Node member(NodeKind::Member);
        member.computed = true;
        member.children.push_back(std::move(node));
        member.children.push_back(expression());
        expect(TokenKind::Punctuation, "]");
        node = finish(std::move(member), start);
      } else if (calls && check_punct("(")) {
        Node call(NodeKind::Call);
        call.children.push_back(std::move(node));
        arguments(call);
        node = finish(std::move(call), start);
      } else {
        return node;
      }
    }
  }

  void arguments(Node &call) {
    expect(TokenKind::Punctuation, "(");
    if (!check_punct(")")) {
      do {
        call.children.push_back(assignment());
      } while (check_punct(",") && (consume(), true));
    }
    expect(TokenKind::Punctuation, ")");
  }

  // `new C(args)`; the argument list is optional, as in `new C`.
  Node new_expression() {
    const Position start = here();
    consume();
    const Position callee_start = here();
    Node callee = check_keyword("new") ? new_expression() : primary();
    Node node(NodeKind::New);
    node.children.push_back(postfix(std::move(callee), callee_start, false));
    if (check_punct("("))
      arguments(node);
    return finish(std::move(node), start);
  }

  Node primary() {
    const Position start = here();
    const Token *t = peek();
    if (!t)
      fail("expression");
    switch (t->kind) {
    case TokenKind::Identifier: {
      Node node(NodeKind::Identifier);
      node.name = consume().text;
      return finish(std::move(node), start);
    }
    case TokenKind::NumberLiteral:
    case TokenKind::StringLiteral:
    case TokenKind::BooleanLiteral:
    case TokenKind::NullLiteral: {
      Node node(NodeKind::Literal);
      node.literal_type = t->kind == TokenKind::NumberLiteral ? LiteralType::Number
                          : t->kind == TokenKind::StringLiteral
                              ? LiteralType::String
                          : t->kind == TokenKind::BooleanLiteral
                              ? LiteralType::Boolean
                              : LiteralType::Null;
      node.value = consume().value;
      return finish(std::move(node), start);
    }
    case TokenKind::Keyword:
      if (t->text == "this") {
        consume();
        return finish(Node(NodeKind::This), start);
      }
      if (t->text == "function")
        return function(NodeKind::FunctionExpr);
      if (t->text == "new")
        return new_expression();
      fail("expression");
    case TokenKind::Punctuation:
      if (t->text == "(") {
        consume();
        Node inner = expression();
        expect(TokenKind::Punctuation, ")");
        return inner;
      }
      if (t->text == "[")
        return array();
      if (t->text == "{")
        return object();
      fail("expression");
    case TokenKind::Operator:
      fail("expression");
    }
    fail("expression");
  }

  Node array() {
    const Position start = here();
    consume();
    Node node(NodeKind::Array);
    while (!check_punct("]")) {
      node.children.push_back(assignment());
      if (!check_punct(","))
        break;
      consume();
    }
    expect(TokenKind::Punctuation, "]");
    return finish(std::move(node), start);
  }

  Node object() {
    const Position start = here();
    consume();
    Node node(NodeKind::Object);
    while (!check_punct("}")) {
      const Token *key = peek();
      if (!key)
        fail("property key");
      if (key->kind == TokenKind::Identifier || key->kind == TokenKind::Keyword ||
          key->kind == TokenKind::BooleanLiteral ||
          key->kind == TokenKind::NullLiteral)
        node.params.push_back(consume().text);
      else if (key->kind == TokenKind::StringLiteral ||
               key->kind == TokenKind::NumberLiteral)
        node.params.push_back(consume().value);
      else
        fail("property key");
      expect(TokenKind::Punctuation, ":");
      node.children.push_back(assignment());
      if (!check_punct(","))
        break;
      consume();
    }
    expect(TokenKind::Punctuation, "}");
    return finish(std::move(node), start);
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  Position last_end_{1, 0};
};

} // namespace

Node parse_tokens(std::span<const Token> tokens) {
  return Parser(tokens).program();
}

Node parse(std::string_view source, std::string_view file_id) {
  const auto tokens = tokenize(source, file_id);
  return parse_tokens(tokens);
}

} // namespace namelint
