#include "namelint/vocabulary.hpp"

#include "namelint/error.hpp"
#include "namelint/support.hpp"

#include <algorithm>

namespace namelint {

void TokenCounts::add(const TokenStream &stream) {
  for (const auto &token : stream)
    add(token);
}

void TokenCounts::add(std::string_view token, std::uint64_t count) {
  auto it = counts_.find(token);
  if (it == counts_.end())
    it = counts_.emplace(std::string(token), 0).first;
  it->second += count;
  total_ += count;
}

void TokenCounts::merge(const TokenCounts &other) {
  for (const auto &[token, count] : other.counts_)
    add(token, count);
}

std::vector<std::pair<std::string, std::uint64_t>> TokenCounts::ranked() const {
  std::vector<std::pair<std::string, std::uint64_t>> out(counts_.begin(),
                                                         counts_.end());
  // counts_ is already in token order, so a stable sort on count alone
  // leaves ties lexicographic.
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  return out;
}

Vocabulary::Vocabulary() {
  entries_ = {{std::string(unk_token), 0}, {std::string(none_token), 0}};
  reindex();
}

Vocabulary Vocabulary::from_counts(const TokenCounts &counts, std::size_t cap) {
  if (cap < 2)
    throw Error(ErrorCode::Usage, "vocabulary cap must be at least 2");
  Vocabulary vocab;
  std::uint64_t excluded = 0;
  for (auto &[token, count] : counts.ranked()) {
    if (token == unk_token || token == none_token) {
      excluded += count;
      continue;
    }
    if (vocab.entries_.size() < cap)
      vocab.entries_.push_back({token, count});
    else
      excluded += count;
  }
  vocab.entries_[unk_index].count = excluded;
  vocab.reindex();
  return vocab;
}

Vocabulary Vocabulary::from_entries(std::vector<VocabEntry> entries) {
  if (entries.size() < 2 || entries[unk_index].token != unk_token ||
      entries[none_index].token != none_token)
    throw Error(ErrorCode::Format,
                "vocabulary must start with UNK and NONE entries");
  Vocabulary vocab;
  vocab.entries_ = std::move(entries);
  vocab.reindex();
  if (vocab.index_.size() != vocab.entries_.size())
    throw Error(ErrorCode::Format, "vocabulary has duplicate tokens");
  return vocab;
}

void Vocabulary::reindex() {
  index_.clear();
  std::string canonical;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].token, i);
    canonical += entries_[i].token;
    canonical += '\t';
    canonical += std::to_string(entries_[i].count);
    canonical += '\n';
  }
  checksum_ = fnv1a(canonical);
}

std::optional<std::size_t> Vocabulary::find(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t Vocabulary::index_of(std::string_view token) const {
  return find(token).value_or(unk_index);
}

namespace {

TokenCounts count_streams(std::span<const TokenStream> streams) {
  TokenCounts counts;
  for (const auto &stream : streams)
    counts.add(stream);
  if (counts.total() == 0)
    throw Error(ErrorCode::EmptyCorpus, "corpus contains no tokens");
  return counts;
}

} // namespace

Vocabulary build_vocabulary(std::span<const TokenStream> streams,
                            std::size_t cap) {
  return Vocabulary::from_counts(count_streams(streams), cap);
}

std::vector<std::pair<std::size_t, double>>
coverage_curve(const TokenCounts &counts, std::span<const std::size_t> caps) {
  if (counts.total() == 0)
    throw Error(ErrorCode::EmptyCorpus, "corpus contains no tokens");
  const auto ranked = counts.ranked();
  std::vector<std::uint64_t> prefix(ranked.size() + 1, 0);
  for (std::size_t i = 0; i < ranked.size(); ++i)
    prefix[i + 1] = prefix[i] + ranked[i].second;

  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t cap : caps) {
    const std::size_t slots = std::min(cap > 2 ? cap - 2 : 0, ranked.size());
    out.emplace_back(cap, static_cast<double>(prefix[slots]) /
                              static_cast<double>(counts.total()));
  }
  return out;
}

std::vector<std::pair<std::size_t, double>>
coverage_curve(std::span<const TokenStream> streams,
               std::span<const std::size_t> caps) {
  return coverage_curve(count_streams(streams), caps);
}

std::string format_vocabulary(const Vocabulary &vocab,
                              std::uint64_t config_checksum) {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const auto &e = vocab.entries()[i];
    out += std::to_string(i) + '\t' + escape_token(e.token) + '\t' +
           std::to_string(e.count) + '\n';
  }
  out += "#config=" + hex64(config_checksum) + '\n';
  return out;
}

Vocabulary parse_vocabulary(std::string_view text,
                            std::uint64_t *config_checksum) {
  std::vector<VocabEntry> entries;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty())
      continue;
    if (line.starts_with("#config=")) {
      if (config_checksum)
        *config_checksum = parse_hex64(line.substr(8));
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw Error(ErrorCode::Format, "vocabulary line needs 3 fields: " +
                                         std::string(line));
    if (parse_int(fields[0]) != static_cast<std::int64_t>(entries.size()))
      throw Error(ErrorCode::Format, "vocabulary indices must be sequential");
    const auto count = parse_int(fields[2]);
    if (count < 0)
      throw Error(ErrorCode::Format, "negative vocabulary count");
    entries.push_back(
        {unescape_token(fields[1]), static_cast<std::uint64_t>(count)});
  }
  return Vocabulary::from_entries(std::move(entries));
}

std::string
format_streams(std::span<const std::pair<std::string, TokenStream>> files) {
  std::string out;
  for (const auto &[file_id, stream] : files) {
    out += escape_token(file_id);
    out += '\t';
    for (std::size_t i = 0; i < stream.size(); ++i) {
      if (i)
        out += ' ';
      out += escape_token(stream[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::string, TokenStream>>
parse_streams(std::string_view text) {
  std::vector<std::pair<std::string, TokenStream>> out;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty())
      continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw Error(ErrorCode::Format, "token stream line lacks a file id");
    TokenStream stream;
    const auto body = line.substr(tab + 1);
    if (!body.empty())
      for (std::string_view token : split(body, ' '))
        stream.push_back(unescape_token(token));
    out.emplace_back(unescape_token(line.substr(0, tab)), std::move(stream));
  }
  return out;
}

} // namespace namelint
