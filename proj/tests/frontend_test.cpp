#include "namelint/ast.hpp"
#include "namelint/error.hpp"
#include "namelint/estree.hpp"
#include "namelint/lexer.hpp"
#include "namelint/operators.hpp"
#include "namelint/parser.hpp"

#include <gtest/gtest.h>

#include <set>

namespace namelint {
namespace {

std::vector<std::pair<TokenKind, std::string>> kinds(std::string_view src) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto &t : tokenize(src))
    out.emplace_back(t.kind, t.text);
  return out;
}

const Node &first_expression(const Node &program) {
  const Node &stmt = program.child(0);
  EXPECT_EQ(stmt.kind, NodeKind::ExprStmt);
  return stmt.child(0);
}

TEST(Lexer, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Lexer, VarDeclaration) {
  using K = TokenKind;
  const std::vector<std::pair<K, std::string>> expected = {
      {K::Keyword, "var"},
      {K::Identifier, "x"},
      {K::Operator, "="},
      {K::NumberLiteral, "23"},
      {K::Punctuation, ";"}};
  EXPECT_EQ(kinds("var x = 23;"), expected);
}

TEST(Lexer, MaximalMunch) {
  using K = TokenKind;
  const std::vector<std::pair<K, std::string>> expected = {
      {K::Identifier, "i"}, {K::Operator, "<="}, {K::Identifier, "length"}};
  EXPECT_EQ(kinds("i <= length"), expected);
  EXPECT_EQ(kinds("a >>>= b")[1].second, ">>>=");
  EXPECT_EQ(kinds("a !== b")[1].second, "!==");
}

TEST(Lexer, Positions) {
  const auto tokens = tokenize("a\n  bb // note\n/* x\n */ c");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].line, 2);
  EXPECT_EQ(tokens[1].column, 2);
  EXPECT_EQ(tokens[2].line, 4);
  EXPECT_EQ(tokens[2].column, 4);
}

TEST(Lexer, LiteralValues) {
  const auto tokens = tokenize("0x10 1.50 'a\\n' \"q\" true null this");
  EXPECT_EQ(tokens[0].value, "16");
  EXPECT_EQ(tokens[1].value, "1.5");
  EXPECT_EQ(tokens[1].text, "1.50");
  EXPECT_EQ(tokens[2].value, "a\n");
  EXPECT_EQ(tokens[2].text, "'a\\n'");
  EXPECT_EQ(tokens[3].kind, TokenKind::StringLiteral);
  EXPECT_EQ(tokens[4].kind, TokenKind::BooleanLiteral);
  EXPECT_EQ(tokens[5].kind, TokenKind::NullLiteral);
  EXPECT_EQ(tokens[6].kind, TokenKind::Keyword);
}

TEST(Lexer, TokensCoverNonWhitespace) {
  const std::string src = "f(a.b, 'x y', 3e2);\n// c\nvar q=[1,2];";
  std::string rebuilt;
  for (const auto &t : tokenize(src)) {
    // every token text sits at its reported position
    std::size_t offset = 0;
    for (int line = 1; line < t.line; ++line)
      offset = src.find('\n', offset) + 1;
    EXPECT_EQ(src.substr(offset + t.column, t.text.size()), t.text);
    rebuilt += t.text;
  }
  EXPECT_EQ(rebuilt, "f(a.b,'x y',3e2);varq=[1,2];");
}

TEST(Lexer, Errors) {
  EXPECT_THROW(tokenize("a @ b"), LexError);
  EXPECT_THROW(tokenize("`tpl`"), LexError);
  EXPECT_THROW(tokenize("'open"), LexError);
  EXPECT_THROW(tokenize("/* open"), LexError);
  EXPECT_THROW(tokenize("12abc"), LexError);
  try {
    tokenize("x\n  #");
    FAIL();
  } catch (const LexError &e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 2);
  }
}

TEST(Lexer, Deterministic) {
  const std::string src = "for (var i = 0; i < n; i++) { s += a[i]; }";
  EXPECT_EQ(tokenize(src), tokenize(src));
}

TEST(Parser, MinimalCall) {
  const Node program = parse("f(a, b);");
  EXPECT_EQ(dump(program), "(Program (ExprStmt (Call (Identifier name=f) "
                           "(Identifier name=a) (Identifier name=b))))");
}

TEST(Parser, MemberChain) {
  const Node program = parse("x.y[3];");
  const Node &m = first_expression(program);
  EXPECT_EQ(dump(m), "(Member computed (Member name=y (Identifier name=x)) "
                     "(Literal number=3))");
}

TEST(Parser, ForLoop) {
  const Node program = parse("for (var i = 0; i !== len; ++i) {}");
  const Node &loop = program.child(0);
  ASSERT_EQ(loop.kind, NodeKind::For);
  EXPECT_EQ(loop.child(0).kind, NodeKind::VarDecl);
  EXPECT_EQ(loop.child(1).kind, NodeKind::Binary);
  EXPECT_EQ(loop.child(1).op, "!==");
  EXPECT_EQ(loop.child(2).kind, NodeKind::Update);
  EXPECT_EQ(loop.child(2).op, "++");
  EXPECT_TRUE(loop.child(2).prefix);
  EXPECT_EQ(loop.child(3).kind, NodeKind::Block);
}

TEST(Parser, Precedence) {
  const Node program = parse("a + b * c === d || !e && f;");
  const Node &e = first_expression(program);
  EXPECT_EQ(dump(e),
            "(Logical op=|| (Binary op==== (Binary op=+ (Identifier name=a) "
            "(Binary op=* (Identifier name=b) (Identifier name=c))) "
            "(Identifier name=d)) (Logical op=&& (Unary op=! prefix "
            "(Identifier name=e)) (Identifier name=f)))");
}

TEST(Parser, LeftAssociative) {
  const Node program = parse("a - b - c;");
  const Node &e = first_expression(program);
  EXPECT_EQ(e.child(0).kind, NodeKind::Binary);
  EXPECT_EQ(e.child(1).kind, NodeKind::Identifier);
}

TEST(Parser, Statements) {
  const Node p = parse(R"(
    function add(a, b) { return a + b; }
    var f = function () { return; }, g;
    if (x) y(); else { z = {k: 1, 'two': [2, 3]}; }
    while (i < 3) i++;
    for (;;) ;
    this.msg = cond ? 1 : null;
  )");
  ASSERT_EQ(p.children.size(), 6u);
  EXPECT_EQ(p.child(0).kind, NodeKind::FunctionDecl);
  EXPECT_EQ(p.child(0).params, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(p.child(1).child(0).kind, NodeKind::Assign);
  EXPECT_EQ(p.child(1).child(0).child(1).kind, NodeKind::FunctionExpr);
  EXPECT_EQ(p.child(1).child(1).kind, NodeKind::Identifier);
  EXPECT_EQ(p.child(2).children.size(), 3u);
  const Node &object = p.child(2).child(2).child(0).child(0).child(1);
  EXPECT_EQ(object.kind, NodeKind::Object);
  EXPECT_EQ(object.params, (std::vector<std::string>{"k", "two"}));
  EXPECT_EQ(p.child(4).child(0).kind, NodeKind::Empty);
  EXPECT_EQ(p.child(4).child(3).kind, NodeKind::Empty);
  EXPECT_EQ(p.child(5).child(0).child(1).kind, NodeKind::Conditional);
}

TEST(Parser, NewExpressions) {
  const Node p = parse("var p = new Promise();\n"
                       "new a.b[c](x, y).then(done);\n"
                       "var q = new Date;");
  const Node &promise = p.child(0).child(0).child(1);
  EXPECT_EQ(promise.kind, NodeKind::New);
  ASSERT_EQ(promise.children.size(), 1u);
  EXPECT_EQ(promise.child(0).name, "Promise");
  // the argument list belongs to new, the trailing call to the result
  const Node &then = p.child(1).child(0);
  EXPECT_EQ(then.kind, NodeKind::Call);
  const Node &ctor = then.child(0).child(0);
  EXPECT_EQ(ctor.kind, NodeKind::New);
  EXPECT_EQ(ctor.children.size(), 3u);
  EXPECT_EQ(ctor.child(0).kind, NodeKind::Member);
  EXPECT_TRUE(ctor.child(0).computed);
  EXPECT_EQ(p.child(2).child(0).child(1).kind, NodeKind::New);
  EXPECT_EQ(p.child(2).child(0).child(1).span.end.column, 16);
}

TEST(Parser, RejectsOutsideSubset) {
  for (const char *src :
       {"do {} while (x);", "switch (x) {}", "x => x;", "a in b;", "f(a, b)",
        "var;", "1 = 2;", "(a + b)++;", "class A {}"}) {
    EXPECT_THROW(parse(src), ParseError) << src;
  }
}

TEST(Parser, ErrorCarriesPosition) {
  try {
    parse("f(a,\n  );");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 2);
    EXPECT_EQ(e.found(), "Punctuation ')'");
  }
}

TEST(Parser, SpansNest) {
  const Node p = parse("function f(a) {\n  if (a < 2) { return g(a, 3); }\n}\n"
                       "var q = [1, {k: x.y}];");
  walk(p, [](const Node &n, const std::vector<const Node *> &path) {
    if (!path.empty())
      EXPECT_TRUE(path.back()->span.contains(n.span)) << dump(n);
  });
}

TEST(Parser, EveryBinaryOperatorInAlphabet) {
  const Node p = parse("a + b; c instanceof d; e >>> f; g !== h; i | j;");
  walk(p, [](const Node &n, const auto &) {
    if (n.kind == NodeKind::Binary || n.kind == NodeKind::Logical)
      EXPECT_TRUE(OperatorAlphabet::contains(n.op)) << n.op;
  });
}

TEST(OperatorAlphabetTest, Bijection) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < OperatorAlphabet::size(); ++i) {
    EXPECT_EQ(OperatorAlphabet::index_of(OperatorAlphabet::symbols[i]), i);
    seen.insert(OperatorAlphabet::symbols[i]);
  }
  EXPECT_EQ(seen.size(), 22u);
}

TEST(Estree, CallMatchesParse) {
  const auto doc = R"({"type":"Program","body":[{"type":"ExpressionStatement",
    "expression":{"type":"CallExpression","callee":{"type":"Identifier","name":"f"},
    "arguments":[{"type":"Identifier","name":"a"},{"type":"Identifier","name":"b"}]}}]})";
  EXPECT_TRUE(ingest_ast(std::string_view(doc)).same_shape(parse("f(a,b);")));
}

TEST(Estree, UnknownTypeBecomesOpaque) {
  const auto doc = R"({"type":"Program","body":[{"type":"WithStatement",
    "object":{"type":"Identifier","name":"o"},
    "body":{"type":"ExpressionStatement","expression":{"type":"Identifier","name":"x"}}}]})";
  const Node n = ingest_ast(std::string_view(doc));
  const Node &with = n.child(0);
  EXPECT_EQ(with.kind, NodeKind::Opaque);
  EXPECT_EQ(with.name, "WithStatement");
  ASSERT_EQ(with.children.size(), 2u);
  EXPECT_EQ(with.child(0).name, "o");
  EXPECT_EQ(with.child(1).kind, NodeKind::ExprStmt);
}

TEST(Estree, MissingTypeIsSchemaError) {
  try {
    ingest_ast(std::string_view(R"({"type":"Program","body":[{"expression":1}]})"));
    FAIL();
  } catch (const SchemaError &e) {
    EXPECT_EQ(e.path(), "/body/0/type");
  }
  EXPECT_THROW(ingest_ast(std::string_view(R"({"body":[]})")), SchemaError);
  EXPECT_THROW(ingest_ast(std::string_view(
                   R"({"type":"Identifier","name":3})")),
               SchemaError);
  EXPECT_THROW(ingest_ast(std::string_view("{not json")), SchemaError);
}

TEST(Estree, ForeignOperatorsAndRegexAreOpaque) {
  const auto doc = R"({"type":"Program","body":[{"type":"ExpressionStatement",
    "expression":{"type":"BinaryExpression","operator":"in",
    "left":{"type":"Literal","value":"k"},
    "right":{"type":"Literal","regex":{"pattern":"a","flags":""},"value":null}}}]})";
  const Node n = ingest_ast(std::string_view(doc));
  const Node &bin = n.child(0).child(0);
  EXPECT_EQ(bin.kind, NodeKind::Opaque);
  EXPECT_EQ(bin.child(1).kind, NodeKind::Opaque);
}

TEST(Estree, RoundTripThroughExport) {
  const char *sources[] = {
      "f(a, b);",
      "x.y[3];",
      "var p = new Promise();\nvar q = new a.b[c](x, 2).then(f);",
      "new (f())(); new new C()(); (new C).d;",
      "for (var i = 0; i !== len; ++i) {}",
      "function add(a, b) { return a + b; }\nvar s = add(1, 'two');",
      "if (a && !b) { c = d ? e : null; } else while (x) x--;",
      "var o = {k: [1, 2], 'q r': this.z}, p;\nfor (;;) ;",
      "g(function (x) { return typeof x; }, -1);",
  };
  for (const char *src : sources) {
    const Node ast = parse(src);
    const Node back = ingest_ast(export_ast(ast));
    EXPECT_TRUE(back.same_tree(ast)) << src << "\n"
                                     << dump(ast) << "\n"
                                     << dump(back);
  }
}

TEST(Estree, PrintedSourceReparses) {
  const char *sources[] = {
      "a - (b - c);",
      "x = y = z;",
      "(function () {});",
      "({a: 1}).a;",
      "f(-(-x), !(a || b), (1).toString());",
      "var q = 'it\\'s\\n';",
  };
  for (const char *src : sources) {
    const Node ast = parse(src);
    EXPECT_TRUE(parse(print_source(ast)).same_shape(ast))
        << src << " printed as " << print_source(ast);
  }
}

TEST(Estree, LocIsOptional) {
  const auto doc = R"({"type":"Program","loc":{"line":3,"column":1},"body":[
    {"type":"ExpressionStatement","loc":{"start":{"line":4,"column":2}},
     "expression":{"type":"Identifier","name":"x"}}]})";
  const Node n = ingest_ast(std::string_view(doc));
  EXPECT_EQ(n.span.start, (Position{3, 1}));
  EXPECT_EQ(n.child(0).span.start, (Position{4, 2}));
  EXPECT_EQ(n.child(0).child(0).span.start, (Position{4, 2}));
}

} // namespace
} // namespace namelint
