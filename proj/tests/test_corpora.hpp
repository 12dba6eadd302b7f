#pragma once

// Small synthetic corpora shared by the unit and acceptance tests.

#include "namelint/corpus.hpp"
#include "namelint/support.hpp"
#include "namelint/synthcorpus.hpp"
#include "namelint/vocabulary.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace namelint::testing {

struct SynonymCorpus {
  std::vector<TokenStream> streams;
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// `groups` topics, each with its own context words and one planted pair of
/// names that occur interchangeably in those contexts.
inline SynonymCorpus synonym_corpus(std::size_t groups, std::size_t statements,
                                    std::uint64_t seed) {
  SynonymCorpus corpus;
  Rng rng(seed);
  for (std::size_t g = 0; g < groups; ++g)
    corpus.pairs.emplace_back("ID:name" + std::to_string(g) + "a",
                              "ID:name" + std::to_string(g) + "b");
  auto context = [&](std::size_t g) {
    return "ID:ctx" + std::to_string(g) + "_" + std::to_string(rng.below(4));
  };
  for (std::size_t s = 0; s < statements; ++s) {
    TokenStream stream;
    for (int line = 0; line < 8; ++line) {
      const std::size_t g = rng.below(groups);
      const auto &[a, b] = corpus.pairs[g];
      stream.insert(stream.end(),
                    {"var", rng.bernoulli(0.5) ? a : b, "=", context(g), "(",
                     context(g), ")", ";"});
    }
    corpus.streams.push_back(std::move(stream));
  }
  return corpus;
}

/// Zipf(s) sample over n distinct tokens, drawn by inverse CDF.
inline std::vector<TokenStream> zipf_corpus(std::size_t n, double s,
                                     std::size_t occurrences,
                                     std::uint64_t seed) {
  std::vector<double> cdf(n);
  double total = 0;
  for (std::size_t k = 0; k < n; ++k)
    cdf[k] = total += 1.0 / std::pow(static_cast<double>(k + 1), s);
  Rng rng(seed);
  std::vector<TokenStream> streams(occurrences / 1000);
  for (auto &stream : streams)
    for (int i = 0; i < 1000; ++i) {
      const double u = rng.uniform() * total;
      const auto k = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      stream.push_back("ID:t" + std::to_string(k));
    }
  return streams;
}

inline std::filesystem::path data_dir() { return NAMELINT_DATA_DIR; }

inline ConventionSpec load_spec(const std::string &name) {
  return parse_convention_spec(read_file(data_dir() / name));
}

inline Corpus to_corpus(const SyntheticCorpus &synthetic) {
  Corpus corpus;
  for (const auto &file : synthetic.files)
    corpus.files.push_back(load_source(file.id, file.source));
  return corpus;
}

} // namespace namelint::testing
