#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace namelint {

using TokenStream = std::vector<std::string>;

inline constexpr std::string_view unk_token = "UNK";
inline constexpr std::string_view none_token = "NONE";

/// Occurrence counts, mergeable across shards of a corpus.
class TokenCounts {
public:
  void add(const TokenStream &stream);
  void add(std::string_view token, std::uint64_t count = 1);
  void merge(const TokenCounts &other);

  std::uint64_t total() const noexcept { return total_; }
  const std::map<std::string, std::uint64_t, std::less<>> &counts() const {
    return counts_;
  }

  /// (token, count) by count descending, then token ascending.
  std::vector<std::pair<std::string, std::uint64_t>> ranked() const;

private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
};

struct VocabEntry {
  std::string token;
  std::uint64_t count = 0;

  friend bool operator==(const VocabEntry &, const VocabEntry &) = default;
};

/// Frequency-capped token set. Index 0 is UNK (its count is the number of
/// excluded occurrences), index 1 is NONE (count 0); the rest are ranked by
/// count with ties broken by token order.
class Vocabulary {
public:
  static constexpr std::size_t unk_index = 0;
  static constexpr std::size_t none_index = 1;

  Vocabulary();
  static Vocabulary from_counts(const TokenCounts &counts, std::size_t cap);
  /// Rebuilds from stored entries; validates the reserved prefix.
  static Vocabulary from_entries(std::vector<VocabEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<VocabEntry> &entries() const noexcept { return entries_; }
  const std::string &token(std::size_t index) const {
    return entries_.at(index).token;
  }

  std::optional<std::size_t> find(std::string_view token) const;
  /// Index of token, UNK's index when absent.
  std::size_t index_of(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }

  std::uint64_t checksum() const noexcept { return checksum_; }

private:
  void reindex();

  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t checksum_ = 0;
};

/// Throws EmptyCorpus when the streams hold no tokens. cap must be >= 2.
Vocabulary build_vocabulary(std::span<const TokenStream> streams,
                            std::size_t cap);

/// Fraction of occurrences covered by the cap-most-frequent tokens, for each
/// cap. Two slots of every cap are reserved, as in build_vocabulary.
std::vector<std::pair<std::size_t, double>>
coverage_curve(std::span<const TokenStream> streams,
               std::span<const std::size_t> caps);
std::vector<std::pair<std::size_t, double>>
coverage_curve(const TokenCounts &counts, std::span<const std::size_t> caps);

/// `<index>\t<token>\t<count>` lines; a trailing `#config=<hex>` line binds
/// the file to the run configuration that produced it.
std::string format_vocabulary(const Vocabulary &vocab,
                              std::uint64_t config_checksum);
Vocabulary parse_vocabulary(std::string_view text,
                            std::uint64_t *config_checksum = nullptr);

/// Token-stream corpus file: one line per source file, `<fileId>\t` then the
/// escaped tokens separated by single spaces.
std::string format_streams(
    std::span<const std::pair<std::string, TokenStream>> files);
std::vector<std::pair<std::string, TokenStream>>
parse_streams(std::string_view text);

} // namespace namelint
