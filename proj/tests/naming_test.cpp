#include "namelint/error.hpp"
#include "namelint/lexer.hpp"
#include "namelint/naming.hpp"
#include "namelint/parser.hpp"
#include "namelint/support.hpp"
#include "namelint/vocabulary.hpp"

#include "test_corpora.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace namelint {
namespace {

std::optional<std::string> name_of(const std::string &expression) {
  const Node program = parse(expression + ";");
  return extract_name(program.child(0).child(0));
}

std::vector<std::string> stream_of(std::string_view src) {
  return embedding_token_stream(tokenize(src));
}

TEST(ExtractName, TableRows) {
  const std::pair<const char *, const char *> rows[] = {
      {"list", "ID:list"},
      {"23", "LIT:23"},
      {"this", "LIT:this"},
      {"i++", "ID:i"},
      {"myObject.prop", "ID:prop"},
      {"myArray[5]", "ID:myArray"},
      {"nextElement()", "ID:nextElement"},
      {"db.allNames()[3]", "ID:allNames"},
  };
  for (const auto &[expression, expected] : rows)
    EXPECT_EQ(name_of(expression), std::optional<std::string>(expected))
        << expression;
}

TEST(ExtractName, MoreForms) {
  EXPECT_EQ(name_of("'abc'"), "LIT:abc");
  EXPECT_EQ(name_of("0.50"), "LIT:0.5");
  EXPECT_EQ(name_of("true"), "LIT:true");
  EXPECT_EQ(name_of("null"), "LIT:null");
  EXPECT_EQ(name_of("--count"), "ID:count");
  EXPECT_EQ(name_of("this.msg"), "ID:msg");
  EXPECT_EQ(name_of("a.b.c()"), "ID:c");
  EXPECT_EQ(name_of("f()()"), "ID:f");
}

TEST(ExtractName, NothingForOtherForms) {
  for (const char *e : {"a + b", "(function () {})", "[1]", "!x", "(a = b)",
                        "''", "x ? y : z", "({a: 1})", "new Foo(a)"})
    EXPECT_EQ(name_of(e), std::nullopt) << e;
}

TEST(TokenStream, Examples) {
  EXPECT_EQ(stream_of("var x = 23;"),
            (std::vector<std::string>{"var", "ID:x", "=", "LIT:23", ";"}));
  EXPECT_TRUE(stream_of("").empty());
  EXPECT_EQ(stream_of("this.msg"),
            (std::vector<std::string>{"LIT:this", ".", "ID:msg"}));
}

TEST(TokenStream, PrefixedTokensMatchTheAst) {
  const std::string src =
      "function f(a, b) { return a.len + 'x' * 2; }\nf(this.q, null);";
  const Node program = parse(src);
  std::set<std::string> names;
  walk(program, [&](const Node &n, const auto &) {
    if (n.kind == NodeKind::Identifier)
      names.insert(n.name);
    if (n.kind == NodeKind::Member && !n.computed)
      names.insert(n.name);
    if (n.kind == NodeKind::FunctionDecl) {
      names.insert(n.name);
      names.insert(n.params.begin(), n.params.end());
    }
    if (n.kind == NodeKind::Literal)
      names.insert(n.value);
    if (n.kind == NodeKind::This)
      names.insert("this");
  });
  for (const auto &token : stream_of(src)) {
    if (token.starts_with("ID:"))
      EXPECT_TRUE(names.count(token.substr(3))) << token;
    else if (token.starts_with("LIT:"))
      EXPECT_TRUE(names.count(token.substr(4))) << token;
  }
}

TEST(Vocabulary, CapForcesUnknown) {
  const std::vector<TokenStream> streams = {{"a", "a", "b"}};
  const Vocabulary v = build_vocabulary(streams, 3);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.entries()[0], (VocabEntry{"UNK", 1}));
  EXPECT_EQ(v.entries()[1], (VocabEntry{"NONE", 0}));
  EXPECT_EQ(v.entries()[2], (VocabEntry{"a", 2}));
  EXPECT_EQ(v.index_of("b"), Vocabulary::unk_index);
  EXPECT_EQ(v.index_of("a"), 2u);
}

TEST(Vocabulary, TieBreakIsLexicographic) {
  const std::vector<TokenStream> streams = {{"b", "a"}};
  const Vocabulary v = build_vocabulary(streams, 4);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v.token(2), "a");
  EXPECT_EQ(v.token(3), "b");
}

TEST(Vocabulary, KeptCountsDominateExcluded) {
  Rng rng(5);
  std::vector<TokenStream> streams(20);
  for (auto &s : streams)
    for (int i = 0; i < 50; ++i)
      s.push_back("t" + std::to_string(rng.below(40)));
  const Vocabulary v = build_vocabulary(streams, 12);
  TokenCounts counts;
  for (const auto &s : streams)
    counts.add(s);
  std::uint64_t smallest_kept = UINT64_MAX;
  for (std::size_t i = 2; i < v.size(); ++i)
    smallest_kept = std::min(smallest_kept, v.entries()[i].count);
  for (const auto &[token, count] : counts.counts())
    if (!v.contains(token))
      EXPECT_LE(count, smallest_kept);
}

TEST(Vocabulary, EmptyCorpus) {
  const std::vector<TokenStream> none = {{}, {}};
  try {
    build_vocabulary(none, 10);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyCorpus);
  }
}

TEST(Vocabulary, MergeIsOrderIndependent) {
  TokenCounts a, b, ab, ba;
  a.add(TokenStream{"x", "y", "x"});
  b.add(TokenStream{"y", "z"});
  ab.merge(a);
  ab.merge(b);
  ba.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab.counts(), ba.counts());
  EXPECT_EQ(ab.total(), 5u);
  EXPECT_EQ(Vocabulary::from_counts(ab, 10).checksum(),
            Vocabulary::from_counts(ba, 10).checksum());
}

TEST(Vocabulary, FileRoundTrip) {
  const std::vector<TokenStream> streams = {
      {"ID:a b", "LIT:100%", "ID:a b", ";", "LIT:\t"}};
  const Vocabulary v = build_vocabulary(streams, 10);
  std::uint64_t config = 0;
  const Vocabulary back =
      parse_vocabulary(format_vocabulary(v, 0xabcdef), &config);
  EXPECT_EQ(back.entries(), v.entries());
  EXPECT_EQ(back.checksum(), v.checksum());
  EXPECT_EQ(config, 0xabcdefu);
  EXPECT_THROW(parse_vocabulary("0\tUNK\t0\n2\tNONE\t0\n"), Error);
  EXPECT_THROW(parse_vocabulary("0\tNONE\t0\n1\tUNK\t0\n"), Error);
}

TEST(Vocabulary, StreamsFileRoundTrip) {
  const std::vector<std::pair<std::string, TokenStream>> files = {
      {"dir/a b.js", {"var", "ID:x", "=", "LIT:hello world", ";"}},
      {"empty.js", {}}};
  EXPECT_EQ(parse_streams(format_streams(files)), files);
}

TEST(Coverage, Examples) {
  const std::vector<TokenStream> one = {{"a"}};
  const std::size_t cap3[] = {3};
  EXPECT_EQ(coverage_curve(one, cap3),
            (std::vector<std::pair<std::size_t, double>>{{3, 1.0}}));
  const std::vector<TokenStream> four = {{"a", "a", "b", "c"}};
  EXPECT_EQ(coverage_curve(four, cap3),
            (std::vector<std::pair<std::size_t, double>>{{3, 0.5}}));
  const std::size_t cap2[] = {2};
  EXPECT_EQ(coverage_curve(four, cap2)[0].second, 0.0);
}

TEST(Coverage, ZipfCorpusIsMonotoneAndConcentrated) {
  const auto streams = testing::zipf_corpus(5000, 1.2, 200000, 7);
  TokenCounts counts;
  for (const auto &s : streams)
    counts.add(s);
  const std::size_t distinct = counts.counts().size();
  std::vector<std::size_t> caps;
  for (std::size_t c = 2; c <= distinct + 2; c += distinct / 25)
    caps.push_back(c);
  const auto curve = coverage_curve(counts, caps);
  for (std::size_t i = 1; i < curve.size(); ++i)
    EXPECT_LE(curve[i - 1].second, curve[i].second);

  // direct count of the top 10% against the curve
  const std::size_t cap = distinct / 10 + 2;
  auto ranked = counts.ranked();
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < cap - 2; ++i)
    covered += ranked[i].second;
  const std::size_t caps10[] = {cap};
  const double fraction = coverage_curve(counts, caps10)[0].second;
  EXPECT_DOUBLE_EQ(fraction, static_cast<double>(covered) /
                                 static_cast<double>(counts.total()));
  EXPECT_GE(fraction, 0.85);
}

} // namespace
} // namespace namelint
