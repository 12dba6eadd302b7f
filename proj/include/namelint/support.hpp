#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

/// Seeded pseudo-random source. Wraps mt19937_64 and maps its raw output
/// onto reals and bounded integers itself, so draws are identical across
/// standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  /// Fisher-Yates shuffle driven by below().
  template <typename T> void shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data,
                    std::uint64_t basis = 0xcbf29ce484222325ULL);

/// Mixes a global seed with a key (typically a file id) into a child seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);
std::uint64_t parse_hex64(std::string_view text);

/// Percent-escapes whitespace and '%' so a token fits in space- and
/// tab-delimited text files.
std::string escape_token(std::string_view token);
std::string unescape_token(std::string_view text);

/// Shortest decimal string that round-trips to the same double.
std::string shortest_real(double value);
/// Decimal with `digits` significant digits, locale independent.
std::string format_real(double value, int digits = 9);
/// Fixed notation with `decimals` places, locale independent.
std::string format_fixed(double value, int decimals);
double parse_real(std::string_view text);
std::int64_t parse_int(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char delimiter);
std::string_view trim(std::string_view text);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

} // namespace namelint
