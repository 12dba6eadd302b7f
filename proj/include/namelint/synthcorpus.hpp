#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

/// Interchangeable names. Members starting with a digit or a quote are
/// literals; the rest are identifiers.
struct NameCluster {
  std::string name;
  std::vector<std::string> members;
  /// Members only used by files drawn as held-out, plus in the
  /// context-only `inspect` function every file carries.
  std::vector<std::string> held_out;
};

struct CallTemplate {
  /// Possibly dotted, `ctx.translate`.
  std::string callee;
  std::vector<std::string> arg_classes;
};

struct BinopTemplate {
  std::string left;
  std::string op;
  std::string right;
};

struct ConventionSpec {
  std::vector<NameCluster> clusters;
  std::vector<CallTemplate> call_templates;
  std::vector<BinopTemplate> binop_templates;
  std::size_t file_count = 0;
  std::size_t sites_per_file = 10;
  double bug_rate = 0;
  /// Probability that a file draws its names from the held-out members.
  double held_out_rate = 0;
  std::uint64_t seed = 1;

  /// Throws Spec on undefined clusters, bad names or rates.
  void validate() const;
};

/// JSON with keys clusters[{name, members, heldOut}],
/// callTemplates[{callee, argClasses}], binopTemplates[{left, op, right}],
/// fileCount, sitesPerFile, bugRate, heldOutRate, seed.
ConventionSpec parse_convention_spec(std::string_view json_text);
std::string format_convention_spec(const ConventionSpec &spec);

struct PlantedBug {
  std::string file;
  int line = 1;
  int column = 0;
  /// swapped-args, wrong-operator or wrong-operand.
  std::string pattern;
  /// args-swapped, operator-replaced or operand-replaced.
  std::string violation;

  friend bool operator==(const PlantedBug &, const PlantedBug &) = default;
};

struct SyntheticFile {
  std::string id;
  std::string source;
};

struct SyntheticCorpus {
  std::vector<SyntheticFile> files;
  std::vector<PlantedBug> ground_truth;
  std::size_t site_count = 0;
};

SyntheticCorpus generate_corpus(const ConventionSpec &spec);

/// `fileId\tline\tcolumn\tpattern\tviolationKind` per planted bug.
std::string format_ground_truth(const std::vector<PlantedBug> &bugs);

/// Writes the files under dir plus dir/ground_truth.tsv.
void write_corpus(const SyntheticCorpus &corpus,
                  const std::filesystem::path &dir);

} // namespace namelint
