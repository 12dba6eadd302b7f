#pragma once

#include "namelint/embeddings.hpp"
#include "namelint/mlp.hpp"
#include "namelint/patterns.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace namelint::cli {

/// Run configuration, read from JSON with the same field names. Relative
/// paths resolve against the config file's directory.
struct RunConfig {
  std::filesystem::path train = "train";
  std::filesystem::path validate = "validate";
  /// Corpus scanned for warnings; the validation corpus when empty.
  std::filesystem::path scan;
  std::filesystem::path out = "out";
  std::size_t vocab_cap = 10000;
  CbowConfig cbow;
  FitConfig fit;
  std::uint64_t tables_seed = 1;
  std::uint64_t example_seed = 1;
  std::uint64_t random_seed = 1;
  std::vector<Pattern> patterns{std::begin(all_patterns),
                                std::end(all_patterns)};
  std::vector<double> thresholds{0.5, 0.6, 0.7, 0.8, 0.9};

  /// Covers only the fields that change artifacts: corpus, vocabulary,
  /// embedding, encoding and training settings.
  std::uint64_t checksum() const;
};

RunConfig parse_run_config(std::string_view json_text,
                           const std::filesystem::path &base_dir = {});
std::string format_run_config(const RunConfig &config);

struct Options {
  std::string command;
  std::optional<std::filesystem::path> config;
  std::optional<std::string> pattern;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
  bool random = false;
  std::optional<std::size_t> vocab_cap;
  std::optional<std::filesystem::path> out;
  std::size_t k = 10;
  std::vector<std::string> args;
};

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_input = 2,
  exit_internal = 3,
};

/// Executes one subcommand, reporting on out/err. Never throws.
int run(const Options &options, std::ostream &out, std::ostream &err);

} // namespace namelint::cli
