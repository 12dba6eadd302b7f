#pragma once

#include "namelint/vocabulary.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace namelint {

/// One e-dimensional row per vocabulary token, in vocabulary order. The NONE
/// row is zero; lookups of unknown tokens fall back to the UNK row.
class EmbeddingMatrix {
public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::vector<std::string> tokens, std::size_t dim,
                  std::uint64_t vocab_checksum);
  EmbeddingMatrix(const Vocabulary &vocab, std::size_t dim);

  std::size_t rows() const noexcept { return tokens_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string> &tokens() const noexcept { return tokens_; }
  std::uint64_t vocab_checksum() const noexcept { return vocab_checksum_; }

  std::span<double> row(std::size_t i) {
    return {values_.data() + i * dim_, dim_};
  }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  std::optional<std::size_t> find(std::string_view token) const;
  /// NONE gives the zero row, anything absent gives the UNK row.
  std::span<const double> lookup(std::string_view token) const;

  std::vector<double> &values() noexcept { return values_; }
  const std::vector<double> &values() const noexcept { return values_; }

  /// Checksum of the canonical (9 significant digit) rendering, so it is
  /// stable across save/load.
  std::uint64_t checksum() const;

private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t dim_ = 0;
  std::vector<double> values_;
  std::uint64_t vocab_checksum_ = 0;
};

struct CbowConfig {
  std::size_t window = 20;
  std::size_t dim = 200;
  std::size_t epochs = 5;
  double learning_rate = 0.05;
  /// Linear decay of the rate towards zero over the run.
  bool linear_decay = false;
  std::uint64_t seed = 1;
  /// 0 selects the full softmax; k > 0 selects negative sampling with k
  /// noise tokens drawn from the unigram^0.75 distribution.
  std::size_t negative_samples = 0;

  void validate() const;
};

struct CbowPair {
  std::vector<std::uint32_t> context;
  std::uint32_t target = 0;

  friend bool operator==(const CbowPair &, const CbowPair &) = default;
};

/// One pair per ID:/LIT: occurrence whose token is in the vocabulary, with
/// up to window/2 neighbours on each side. Pairs without context are
/// dropped.
std::vector<CbowPair> build_cbow_dataset(std::span<const TokenStream> streams,
                                         const Vocabulary &vocab,
                                         std::size_t window);

struct CbowResult {
  EmbeddingMatrix matrix;
  /// Mean loss per epoch.
  std::vector<double> epoch_loss;
};

/// Throws EmptyDataset when pairs is empty.
CbowResult train_cbow(std::span<const CbowPair> pairs, const CbowConfig &config,
                      const Vocabulary &vocab);

/// Baseline: a distinct non-zero 0/1 vector per token (NONE stays zero).
/// Throws CollisionExhaustion when 2^dim < |V|.
EmbeddingMatrix random_embedding(const Vocabulary &vocab, std::size_t dim,
                                 std::uint64_t seed);

/// Cosine similarity; 0 when either vector is zero.
double cosine(std::span<const double> a, std::span<const double> b);

/// The k rows most similar to token, excluding token itself, UNK and NONE.
/// Throws UnknownToken or ReservedToken.
std::vector<std::pair<std::string, double>>
nearest(const EmbeddingMatrix &matrix, std::string_view token, std::size_t k);

/// Header `e=<dim> vocab=<hex> config=<hex>`, then `<token>\t<v0> ...`.
std::string format_embeddings(const EmbeddingMatrix &matrix,
                              std::uint64_t config_checksum);
EmbeddingMatrix parse_embeddings(std::string_view text,
                                 std::uint64_t *config_checksum = nullptr);

} // namespace namelint
