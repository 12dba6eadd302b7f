#include "namelint/embeddings.hpp"
#include "namelint/error.hpp"

#include "test_corpora.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace namelint {
namespace {

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Usage;
}

Vocabulary vocab_of(const std::vector<TokenStream> &streams,
                    std::size_t cap = 10000) {
  return build_vocabulary(streams, cap);
}

TEST(CbowDataset, SingleTokenHasNoContext) {
  const std::vector<TokenStream> s = {{"ID:a"}};
  EXPECT_TRUE(build_cbow_dataset(s, vocab_of(s), 2).empty());
}

TEST(CbowDataset, DirectRule) {
  const std::vector<TokenStream> s = {{"x", "ID:a", "y"}};
  const Vocabulary v = vocab_of(s);
  const auto pairs = build_cbow_dataset(s, v, 2);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].target, v.index_of("ID:a"));
  std::multiset<std::uint32_t> ctx(pairs[0].context.begin(),
                                   pairs[0].context.end());
  EXPECT_EQ(ctx, (std::multiset<std::uint32_t>{
                     static_cast<std::uint32_t>(v.index_of("x")),
                     static_cast<std::uint32_t>(v.index_of("y"))}));
}

TEST(CbowDataset, CountingOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t length = 1 + rng.below(12);
    TokenStream stream;
    for (std::size_t i = 0; i < length; ++i)
      stream.push_back("ID:t" + std::to_string(rng.below(5)));
    const std::vector<TokenStream> s = {stream};
    const auto pairs = build_cbow_dataset(s, vocab_of(s), 2);
    EXPECT_EQ(pairs.size(), length == 1 ? 0 : length);
    for (const auto &p : pairs)
      EXPECT_LE(p.context.size(), 2u);
  }
}

TEST(CbowDataset, UnknownTargetsSkippedUnknownContextKept) {
  const std::vector<TokenStream> s = {
      {"ID:a", "ID:a", "ID:b", "ID:a", "ID:c", "ID:a"}};
  const Vocabulary v = vocab_of(s, 3); // keeps only ID:a
  const auto pairs = build_cbow_dataset(s, v, 4);
  EXPECT_EQ(pairs.size(), 4u);
  bool saw_unk = false;
  for (const auto &p : pairs) {
    EXPECT_EQ(p.target, v.index_of("ID:a"));
    for (auto c : p.context)
      saw_unk |= c == Vocabulary::unk_index;
  }
  EXPECT_TRUE(saw_unk);
  EXPECT_THROW(build_cbow_dataset(s, v, 3), Error);
}

TEST(Cbow, EmptyDatasetRejected) {
  const std::vector<TokenStream> s = {{"ID:a"}};
  const Vocabulary v = vocab_of(s);
  EXPECT_EQ(code_of([&] { train_cbow({}, CbowConfig{}, v); }),
            ErrorCode::EmptyDataset);
}

TEST(Cbow, ZeroEpochsReturnsInitialization) {
  const auto corpus = testing::synonym_corpus(3, 10, 1);
  const Vocabulary v = vocab_of(corpus.streams);
  const auto pairs = build_cbow_dataset(corpus.streams, v, 4);
  CbowConfig config;
  config.dim = 8;
  config.epochs = 0;
  config.seed = 99;
  const auto result = train_cbow(pairs, config, v);
  Rng rng(99);
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t d = 0; d < 8; ++d) {
      const double expected = rng.uniform(-0.5 / 8, 0.5 / 8);
      EXPECT_EQ(result.matrix.row(r)[d],
                r == Vocabulary::none_index ? 0.0 : expected);
    }
  EXPECT_TRUE(result.epoch_loss.empty());
}

TEST(Cbow, DeterministicAndFinite) {
  const auto corpus = testing::synonym_corpus(3, 20, 2);
  const Vocabulary v = vocab_of(corpus.streams);
  const auto pairs = build_cbow_dataset(corpus.streams, v, 4);
  CbowConfig config;
  config.dim = 12;
  config.epochs = 2;
  for (std::size_t neg : {0u, 3u}) {
    config.negative_samples = neg;
    const auto a = train_cbow(pairs, config, v);
    const auto b = train_cbow(pairs, config, v);
    EXPECT_EQ(a.matrix.values(), b.matrix.values());
    EXPECT_EQ(a.epoch_loss, b.epoch_loss);
    for (double x : a.matrix.values())
      EXPECT_TRUE(std::isfinite(x));
    for (double x : a.matrix.lookup("NONE"))
      EXPECT_EQ(x, 0.0);
  }
}

TEST(Cbow, LossNonIncreasingOverFirstEpochs) {
  // 125 statements x 8 names gives 1000 pairs
  const auto corpus = testing::synonym_corpus(5, 125, 4);
  const Vocabulary v = vocab_of(corpus.streams);
  const auto pairs = build_cbow_dataset(corpus.streams, v, 4);
  CbowConfig config;
  config.dim = 16;
  config.epochs = 3;
  config.learning_rate = 0.05;
  for (std::size_t neg : {0u, 5u}) {
    config.negative_samples = neg;
    const auto loss = train_cbow(pairs, config, v).epoch_loss;
    ASSERT_EQ(loss.size(), 3u);
    for (std::size_t i = 1; i < loss.size(); ++i)
      EXPECT_LE(loss[i], loss[i - 1] * 1.01) << "negatives " << neg;
  }
}

TEST(Cbow, PlantedSynonymsAreNearest) {
  const auto corpus = testing::synonym_corpus(6, 300, 5);
  const Vocabulary v = vocab_of(corpus.streams);
  const auto pairs = build_cbow_dataset(corpus.streams, v, 10);
  CbowConfig config;
  config.dim = 16;
  config.epochs = 5;
  const EmbeddingMatrix m = train_cbow(pairs, config, v).matrix;
  for (const auto &[a, b] : corpus.pairs) {
    for (const auto &[query, partner] :
         {std::pair{a, b}, std::pair{b, a}}) {
      const auto near = nearest(m, query, 3);
      EXPECT_TRUE(std::any_of(near.begin(), near.end(),
                              [&](const auto &p) { return p.first == partner; }))
          << query;
    }
    // partner beats at least 95% of the unrelated tokens
    const double own = cosine(m.lookup(a), m.lookup(b));
    std::size_t beaten = 0, others = 0;
    for (std::size_t r = 2; r < m.rows(); ++r) {
      if (m.tokens()[r] == a || m.tokens()[r] == b)
        continue;
      ++others;
      beaten += own > cosine(m.lookup(a), m.row(r));
    }
    EXPECT_GE(static_cast<double>(beaten), 0.95 * static_cast<double>(others));
  }
}

TEST(RandomEmbedding, DistinctBinaryRows) {
  const std::vector<TokenStream> s = {{"ID:a"}};
  const Vocabulary v = vocab_of(s); // UNK, NONE, ID:a
  const auto m = random_embedding(v, 8, 4);
  EXPECT_EQ(m.values(), random_embedding(v, 8, 4).values());
  std::set<std::vector<double>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.emplace(m.row(r).begin(), m.row(r).end());
    for (double x : m.row(r))
      EXPECT_TRUE(x == 0.0 || x == 1.0);
  }
  EXPECT_EQ(rows.size(), 3u);
  for (double x : m.lookup("NONE"))
    EXPECT_EQ(x, 0.0);
}

TEST(RandomEmbedding, PigeonholeAndHamming) {
  TokenStream stream;
  for (int i = 0; i < 8; ++i)
    stream.push_back("ID:t" + std::to_string(i));
  const std::vector<TokenStream> ten = {stream};
  EXPECT_EQ(code_of([&] { random_embedding(vocab_of(ten), 1, 1); }),
            ErrorCode::CollisionExhaustion);

  stream.clear();
  for (int i = 0; i < 98; ++i)
    stream.push_back("ID:t" + std::to_string(i));
  const std::vector<TokenStream> hundred = {stream};
  const auto m = random_embedding(vocab_of(hundred), 32, 8);
  ASSERT_EQ(m.rows(), 100u);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      EXPECT_FALSE(std::equal(m.row(i).begin(), m.row(i).end(),
                              m.row(j).begin()));
}

EmbeddingMatrix handmade(std::vector<std::vector<double>> rows) {
  std::vector<std::string> tokens = {"UNK", "NONE"};
  for (std::size_t i = 2; i < rows.size(); ++i)
    tokens.push_back("ID:t" + std::to_string(i));
  EmbeddingMatrix m(tokens, rows[0].size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  return m;
}

TEST(Nearest, DuplicateRowFirst) {
  const auto m = handmade(
      {{1, 1, 1}, {0, 0, 0}, {1, 2, 0}, {0, 1, 5}, {1, 2, 0}, {1, 1, 0}});
  const auto near = nearest(m, "ID:t2", 3);
  ASSERT_EQ(near.size(), 3u);
  EXPECT_EQ(near[0].first, "ID:t4");
  EXPECT_NEAR(near[0].second, 1.0, 1e-12);
  for (std::size_t i = 1; i < near.size(); ++i)
    EXPECT_GE(near[i - 1].second, near[i].second);
}

TEST(Nearest, OrthogonalRowsAndErrors) {
  const auto m =
      handmade({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto near = nearest(m, "ID:t3", 5);
  ASSERT_EQ(near.size(), 2u);
  EXPECT_EQ(near[0], (std::pair<std::string, double>{"ID:t2", 0.0}));
  EXPECT_EQ(near[1], (std::pair<std::string, double>{"ID:t4", 0.0}));
  EXPECT_EQ(code_of([&] { nearest(m, "ID:zzz", 1); }),
            ErrorCode::UnknownToken);
  EXPECT_EQ(code_of([&] { nearest(m, "UNK", 1); }), ErrorCode::ReservedToken);
}

TEST(Cosine, Properties) {
  const std::vector<double> a = {1, 2, 3}, b = {-2, 0.5, 4}, z = {0, 0, 0};
  EXPECT_NEAR(cosine(a, a), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(cosine(a, b), cosine(b, a));
  EXPECT_EQ(cosine(a, z), 0.0);
}

TEST(EmbeddingFile, RoundTripPreservesChecksum) {
  const auto corpus = testing::synonym_corpus(2, 10, 6);
  const Vocabulary v = vocab_of(corpus.streams);
  CbowConfig config;
  config.dim = 6;
  config.epochs = 1;
  const auto m =
      train_cbow(build_cbow_dataset(corpus.streams, v, 2), config, v).matrix;
  std::uint64_t cfg = 0;
  const auto back = parse_embeddings(format_embeddings(m, 0x1234), &cfg);
  EXPECT_EQ(cfg, 0x1234u);
  EXPECT_EQ(back.tokens(), m.tokens());
  EXPECT_EQ(back.vocab_checksum(), v.checksum());
  EXPECT_EQ(back.checksum(), m.checksum());
  EXPECT_EQ(format_embeddings(back, 0x1234), format_embeddings(m, 0x1234));
}

} // namespace
} // namespace namelint
