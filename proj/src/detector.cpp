#include "namelint/detector.hpp"

#include "namelint/error.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <json.hpp>

namespace namelint {

ExampleSet generate_corpus_examples(Pattern pattern, const Corpus &corpus,
                                    std::uint64_t seed) {
  ExampleSet all;
  all.pattern = pattern;
  for (const auto &file : corpus.files)
    all.append(generate_examples(pattern, file.ast, file.id,
                                 derive_seed(seed, file.id)));
  return all;
}

namespace {

void represent(const CallSiteExample &ex, const EmbeddingMatrix &E,
               const EncodingTables &tables, std::span<double> out) {
  represent_call(ex, E, tables, out);
}

void represent(const BinOpExample &ex, const EmbeddingMatrix &E,
               const EncodingTables &tables, std::span<double> out) {
  represent_binop(ex, E, tables, out);
}

} // namespace

Dataset vectorize(const ExampleSet &examples, const EmbeddingMatrix &E,
                  const EncodingTables &tables) {
  Dataset data(representation_length(examples.pattern, E.dim()));
  auto add_pairs = [&](const auto &pairs) {
    for (const auto &[pos, neg] : pairs) {
      represent(pos, E, tables, data.add(0.0));
      represent(neg, E, tables, data.add(1.0));
    }
  };
  if (examples.pattern == Pattern::SwappedArgs)
    add_pairs(examples.calls);
  else
    add_pairs(examples.binops);
  return data;
}

namespace {

void require_examples(std::size_t examples, const FitConfig &config) {
  if (examples < 2 * config.batch_size)
    throw Error(ErrorCode::InsufficientData,
                std::to_string(examples) + " examples, need at least " +
                    std::to_string(2 * config.batch_size));
}

} // namespace

DetectorModel train_detector(const ExampleSet &examples,
                             const EmbeddingMatrix &E,
                             const EncodingTables &tables,
                             const FitConfig &config,
                             std::vector<double> *epoch_loss) {
  config.validate();
  require_examples(2 * examples.pair_count(), config);
  const Dataset data = vectorize(examples, E, tables);

  DetectorModel model;
  model.pattern = examples.pattern;
  model.dim = E.dim();
  model.tables = tables;
  model.embedding_checksum = E.checksum();
  model.vocab_checksum = E.vocab_checksum();
  model.fit = config;
  model.mlp = Mlp::init(data.dim(), config.hidden_dim, config.seed);
  auto result = fit(model.mlp, data, config);
  if (epoch_loss)
    *epoch_loss = std::move(result.epoch_loss);
  return model;
}

void check_binding(const DetectorModel &model, const EmbeddingMatrix &E) {
  if (E.dim() != model.dim)
    throw Error(ErrorCode::DimensionMismatch,
                "embedding dimension " + std::to_string(E.dim()) +
                    " differs from the model's " + std::to_string(model.dim));
  if (E.vocab_checksum() != model.vocab_checksum)
    throw Error(ErrorCode::ChecksumMismatch,
                "embedding vocabulary " + hex64(E.vocab_checksum()) +
                    " differs from the model's " + hex64(model.vocab_checksum));
  if (E.checksum() != model.embedding_checksum)
    throw Error(ErrorCode::ChecksumMismatch,
                "embedding " + hex64(E.checksum()) +
                    " differs from the one the model was trained with (" +
                    hex64(model.embedding_checksum) + ")");
}

std::vector<Warning> scan_file(const Node &program, std::string_view file_id,
                               const DetectorModel &model,
                               const EmbeddingMatrix &E, double threshold) {
  std::vector<Warning> out;
  std::vector<double> x(representation_length(model.pattern, E.dim()));
  if (model.pattern == Pattern::SwappedArgs) {
    for (const auto &site : extract_calls(program, file_id)) {
      represent_call(site, E, model.tables, x);
      const double p = model.mlp.predict(x);
      if (p <= threshold)
        continue;
      CallSiteExample swapped = site;
      std::swap(swapped.arg1, swapped.arg2);
      out.push_back({site.origin, model.pattern, p, summarize(site),
                     "swap arguments: " + summarize(swapped)});
    }
  } else {
    for (const auto &site : extract_binops(program, file_id)) {
      represent_binop(site, E, model.tables, x);
      const double p = model.mlp.predict(x);
      if (p > threshold)
        out.push_back(
            {site.origin, model.pattern, p, summarize(site), std::nullopt});
    }
  }
  return out;
}

std::vector<Warning> scan(const Corpus &corpus, const DetectorModel &model,
                          const EmbeddingMatrix &E, double threshold) {
  if (!(threshold >= 0 && threshold <= 1))
    throw Error(ErrorCode::Usage, "threshold must be in [0, 1]");
  check_binding(model, E);
  std::vector<Warning> all;
  for (const auto &file : corpus.files) {
    auto found = scan_file(file.ast, file.id, model, E, threshold);
    std::move(found.begin(), found.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end(), [](const Warning &a, const Warning &b) {
    if (a.probability != b.probability)
      return a.probability > b.probability;
    if (a.origin != b.origin)
      return a.origin < b.origin;
    return a.summary < b.summary;
  });
  return all;
}

EvalReport evaluate_predictions(std::span<const double> positives,
                                std::span<const double> negatives,
                                std::span<const double> thresholds) {
  if (thresholds.empty())
    throw Error(ErrorCode::Usage, "no thresholds to evaluate");
  EvalReport report;
  report.c_pos = positives.size();
  report.c_neg = negatives.size();
  std::size_t correct = 0;
  for (double d : positives)
    correct += d < 0.5;
  for (double d : negatives)
    correct += d >= 0.5;
  const std::size_t total = positives.size() + negatives.size();
  report.accuracy =
      total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  for (double t : thresholds) {
    if (!(t >= 0 && t <= 1))
      throw Error(ErrorCode::Usage, "threshold must be in [0, 1]");
    ThresholdMetrics m{t, 0.0, 0};
    std::size_t found = 0;
    for (double d : negatives)
      found += d > t;
    for (double d : positives)
      m.fps += d > t;
    m.recall = negatives.empty() ? 0.0
                                 : static_cast<double>(found) /
                                       static_cast<double>(negatives.size());
    report.per_threshold.push_back(m);
  }
  return report;
}

EvalReport evaluate(const ExampleSet &examples, const DetectorModel &model,
                    const EmbeddingMatrix &E,
                    std::span<const double> thresholds) {
  if (examples.pattern != model.pattern)
    throw Error(ErrorCode::Usage, "examples and model disagree on the pattern");
  require_examples(2 * examples.pair_count(), model.fit);
  check_binding(model, E);
  const Dataset data = vectorize(examples, E, model.tables);
  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i)
    (data.label(i) == 0.0 ? pos : neg).push_back(model.mlp.predict(data.row(i)));
  return evaluate_predictions(pos, neg, thresholds);
}

std::string format_warnings(std::span<const Warning> warnings,
                            std::uint64_t config_checksum) {
  std::string out = "#warnings config=" + hex64(config_checksum) + '\n';
  for (const auto &w : warnings) {
    out += format_fixed(w.probability, 6) + '\t' + to_string(w.pattern) +
           '\t' + escape_token(w.origin.file) + '\t' +
           std::to_string(w.origin.line) + '\t' +
           std::to_string(w.origin.column) + '\t' + escape_token(w.summary) +
           '\t' + (w.fix ? escape_token(*w.fix) : "") + '\n';
  }
  return out;
}

std::string render_warnings(std::span<const Warning> warnings) {
  std::string out;
  for (const auto &w : warnings) {
    out += w.origin.file + ':' + std::to_string(w.origin.line) + ':' +
           std::to_string(w.origin.column + 1) + ": " + to_string(w.pattern) +
           " (" + format_fixed(w.probability, 3) + ") " + w.summary + '\n';
    if (w.fix)
      out += "    " + *w.fix + '\n';
  }
  if (warnings.empty())
    out += "no warnings\n";
  return out;
}

std::string format_eval_report(const EvalReport &report, Pattern pattern,
                               std::uint64_t config_checksum) {
  nlohmann::ordered_json j;
  j["pattern"] = to_string(pattern);
  j["config"] = hex64(config_checksum);
  j["accuracy"] = report.accuracy;
  j["perThreshold"] = nlohmann::ordered_json::array();
  for (const auto &m : report.per_threshold)
    j["perThreshold"].push_back(
        {{"t", m.t}, {"recall", m.recall}, {"fps", m.fps}});
  j["counts"] = {{"C_pos", report.c_pos}, {"C_neg", report.c_neg}};
  return j.dump(2) + '\n';
}

// --- checkpoint -------------------------------------------------------------

std::string format_checkpoint(const DetectorModel &model) {
  const FitConfig &f = model.fit;
  std::string out = "#checkpoint\n";
  out += std::string("pattern=") + to_string(model.pattern) + '\n';
  out += "dim=" + std::to_string(model.dim) + '\n';
  out += "input=" + std::to_string(model.mlp.input_dim()) + '\n';
  out += "hidden=" + std::to_string(model.mlp.hidden_dim()) + '\n';
  out += "embedding=" + hex64(model.embedding_checksum) + '\n';
  out += "vocab=" + hex64(model.vocab_checksum) + '\n';
  out += "config=" + hex64(model.config_checksum) + '\n';
  out += "tables_seed=" + std::to_string(model.tables.seed()) + '\n';
  out += "tables=" + hex64(model.tables.checksum()) + '\n';
  out += "epochs=" + std::to_string(f.epochs) + '\n';
  out += "batch=" + std::to_string(f.batch_size) + '\n';
  out += "dropout=" + format_real(f.dropout) + '\n';
  out += "lr=" + format_real(f.learning_rate) + '\n';
  out += "rho=" + format_real(f.rho) + '\n';
  out += "eps=" + format_real(f.epsilon) + '\n';
  out += "seed=" + std::to_string(f.seed) + '\n';
  out += std::string("shuffle=") + (f.shuffle ? "1" : "0") + '\n';
  out += "#tables\n" + model.tables.describe();
  out += "#parameters\n" + format_mlp(model.mlp);
  return out;
}

DetectorModel parse_checkpoint(std::string_view text) {
  if (!text.starts_with("#checkpoint\n"))
    throw Error(ErrorCode::Format, "not a checkpoint file");
  const auto tables_at = text.find("\n#tables\n");
  const auto params_at = text.find("\n#parameters\n");
  if (tables_at == std::string_view::npos ||
      params_at == std::string_view::npos || params_at < tables_at)
    throw Error(ErrorCode::Format, "checkpoint lacks #tables/#parameters");

  DetectorModel model;
  std::uint64_t tables_checksum = 0;
  std::uint64_t tables_seed = 0;
  std::size_t input = 0, hidden = 0;
  const auto header = text.substr(12, tables_at - 12 + 1);
  for (std::string_view line : split(header, '\n')) {
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Format,
                  "bad checkpoint line '" + std::string(line) + "'");
    const auto key = line.substr(0, eq);
    const auto value = line.substr(eq + 1);
    auto as_size = [&] { return static_cast<std::size_t>(parse_int(value)); };
    if (key == "pattern") {
      auto p = pattern_from_string(value);
      if (!p)
        throw Error(ErrorCode::Format, "unknown pattern in checkpoint");
      model.pattern = *p;
    } else if (key == "dim") {
      model.dim = as_size();
    } else if (key == "input") {
      input = as_size();
    } else if (key == "hidden") {
      hidden = as_size();
    } else if (key == "embedding") {
      model.embedding_checksum = parse_hex64(value);
    } else if (key == "vocab") {
      model.vocab_checksum = parse_hex64(value);
    } else if (key == "config") {
      model.config_checksum = parse_hex64(value);
    } else if (key == "tables_seed") {
      tables_seed = static_cast<std::uint64_t>(parse_int(value));
    } else if (key == "tables") {
      tables_checksum = parse_hex64(value);
    } else if (key == "epochs") {
      model.fit.epochs = as_size();
    } else if (key == "batch") {
      model.fit.batch_size = as_size();
    } else if (key == "dropout") {
      model.fit.dropout = parse_real(value);
    } else if (key == "lr") {
      model.fit.learning_rate = parse_real(value);
    } else if (key == "rho") {
      model.fit.rho = parse_real(value);
    } else if (key == "eps") {
      model.fit.epsilon = parse_real(value);
    } else if (key == "seed") {
      model.fit.seed = static_cast<std::uint64_t>(parse_int(value));
    } else if (key == "shuffle") {
      model.fit.shuffle = value == "1";
    }
  }

  model.tables = EncodingTables(tables_seed);
  const auto stored_tables =
      text.substr(tables_at + 9, params_at + 1 - (tables_at + 9));
  if (model.tables.checksum() != tables_checksum ||
      model.tables.describe() != stored_tables)
    throw Error(ErrorCode::ChecksumMismatch,
                "checkpoint encoding tables do not match their seed");
  model.mlp = parse_mlp(text.substr(params_at + 13));
  model.fit.hidden_dim = model.mlp.hidden_dim();
  if (model.mlp.input_dim() != input || model.mlp.hidden_dim() != hidden ||
      input != representation_length(model.pattern, model.dim))
    throw Error(ErrorCode::DimensionMismatch,
                "checkpoint dimensions are inconsistent");
  return model;
}

} // namespace namelint
