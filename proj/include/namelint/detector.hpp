#pragma once

#include "namelint/corpus.hpp"
#include "namelint/embeddings.hpp"
#include "namelint/encoding.hpp"
#include "namelint/mlp.hpp"
#include "namelint/patterns.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

/// A trained classifier plus everything needed to vectorize new code the
/// same way: embedding dimension, encoding tables and the checksums of the
/// artifacts it was trained against.
struct DetectorModel {
  Pattern pattern = Pattern::SwappedArgs;
  Mlp mlp;
  std::size_t dim = 0;
  EncodingTables tables;
  std::uint64_t embedding_checksum = 0;
  std::uint64_t vocab_checksum = 0;
  std::uint64_t config_checksum = 0;
  FitConfig fit;
};

/// Runs the pattern's generator over every file, seeding each file with
/// derive_seed(seed, fileId) so results do not depend on file order.
ExampleSet generate_corpus_examples(Pattern pattern, const Corpus &corpus,
                                    std::uint64_t seed);

/// Positives labelled 0, negatives 1, in pair order.
Dataset vectorize(const ExampleSet &examples, const EmbeddingMatrix &E,
                  const EncodingTables &tables);

/// Throws InsufficientData with fewer than 2 * batch_size examples.
DetectorModel train_detector(const ExampleSet &examples,
                             const EmbeddingMatrix &E,
                             const EncodingTables &tables,
                             const FitConfig &config,
                             std::vector<double> *epoch_loss = nullptr);

struct Warning {
  Origin origin;
  Pattern pattern = Pattern::SwappedArgs;
  double probability = 0;
  std::string summary;
  std::optional<std::string> fix;

  friend bool operator==(const Warning &, const Warning &) = default;
};

/// Throws ChecksumMismatch unless E is the embedding the model was trained
/// with.
void check_binding(const DetectorModel &model, const EmbeddingMatrix &E);

/// Predicts every unmodified site of one file; warnings above t, unsorted.
std::vector<Warning> scan_file(const Node &program, std::string_view file_id,
                               const DetectorModel &model,
                               const EmbeddingMatrix &E, double threshold);

/// Warnings with probability > t, most probable first, ties by origin.
std::vector<Warning> scan(const Corpus &corpus, const DetectorModel &model,
                          const EmbeddingMatrix &E, double threshold);

struct ThresholdMetrics {
  double t = 0;
  double recall = 0;
  std::size_t fps = 0;
};

struct EvalReport {
  double accuracy = 0;
  std::vector<ThresholdMetrics> per_threshold;
  std::size_t c_pos = 0;
  std::size_t c_neg = 0;
};

/// Accuracy counts positives with D < 0.5 and negatives with D >= 0.5;
/// recall and false positives use D > t.
EvalReport evaluate_predictions(std::span<const double> positives,
                                std::span<const double> negatives,
                                std::span<const double> thresholds);

EvalReport evaluate(const ExampleSet &examples, const DetectorModel &model,
                    const EmbeddingMatrix &E,
                    std::span<const double> thresholds);

inline constexpr double default_thresholds[] = {0.5, 0.6, 0.7, 0.8, 0.9};

/// `prob\tpattern\tfile\tline\tcol\tsummary\tfix` per warning.
std::string format_warnings(std::span<const Warning> warnings,
                            std::uint64_t config_checksum);
std::string render_warnings(std::span<const Warning> warnings);

std::string format_eval_report(const EvalReport &report, Pattern pattern,
                               std::uint64_t config_checksum);

std::string format_checkpoint(const DetectorModel &model);
/// Throws Format on malformed text and ChecksumMismatch if the stored
/// tables differ from the ones their seed regenerates.
DetectorModel parse_checkpoint(std::string_view text);

} // namespace namelint
