#include "namelint/cli.hpp"

#include "namelint/corpus.hpp"
#include "namelint/detector.hpp"
#include "namelint/error.hpp"
#include "namelint/naming.hpp"
#include "namelint/support.hpp"
#include "namelint/synthcorpus.hpp"
#include "namelint/vocabulary.hpp"

#include <json.hpp>
#include <ostream>
#include <set>

namespace namelint::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

Json artifact_fields(const RunConfig &c) {
  Json j;
  j["train"] = c.train.generic_string();
  j["vocabCap"] = c.vocab_cap;
  j["cbow"] = {{"window", c.cbow.window},
               {"dim", c.cbow.dim},
               {"epochs", c.cbow.epochs},
               {"learningRate", c.cbow.learning_rate},
               {"linearDecay", c.cbow.linear_decay},
               {"seed", c.cbow.seed},
               {"negativeSamples", c.cbow.negative_samples}};
  j["fit"] = {{"epochs", c.fit.epochs},
              {"batchSize", c.fit.batch_size},
              {"dropout", c.fit.dropout},
              {"learningRate", c.fit.learning_rate},
              {"rho", c.fit.rho},
              {"epsilon", c.fit.epsilon},
              {"seed", c.fit.seed},
              {"shuffle", c.fit.shuffle},
              {"hiddenDim", c.fit.hidden_dim}};
  j["tablesSeed"] = c.tables_seed;
  j["exampleSeed"] = c.example_seed;
  j["randomSeed"] = c.random_seed;
  return j;
}

template <typename T> void read(const Json &j, const char *key, T &target) {
  if (const auto it = j.find(key); it != j.end())
    target = it->get<T>();
}

} // namespace

std::uint64_t RunConfig::checksum() const {
  return fnv1a(artifact_fields(*this).dump());
}

RunConfig parse_run_config(std::string_view json_text,
                           const fs::path &base_dir) {
  RunConfig c;
  try {
    const Json j = Json::parse(json_text);
    if (!j.is_object())
      throw Error(ErrorCode::Format, "run config must be a JSON object");
    static const std::set<std::string> known = {
        "train",    "validate",   "scan",        "out",
        "vocabCap", "cbow",       "fit",         "tablesSeed",
        "exampleSeed", "randomSeed", "patterns", "thresholds"};
    for (const auto &item : j.items())
      if (!known.count(item.key()))
        throw Error(ErrorCode::Format,
                    "unknown run config key '" + item.key() + "'");
    auto path = [&](const char *key, fs::path &target) {
      if (const auto it = j.find(key); it != j.end()) {
        fs::path p = it->get<std::string>();
        target = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
      } else if (target.is_relative() && !target.empty() && !base_dir.empty()) {
        target = base_dir / target;
      }
    };
    path("train", c.train);
    path("validate", c.validate);
    path("scan", c.scan);
    path("out", c.out);
    read(j, "vocabCap", c.vocab_cap);
    if (const auto it = j.find("cbow"); it != j.end()) {
      read(*it, "window", c.cbow.window);
      read(*it, "dim", c.cbow.dim);
      read(*it, "epochs", c.cbow.epochs);
      read(*it, "learningRate", c.cbow.learning_rate);
      read(*it, "linearDecay", c.cbow.linear_decay);
      read(*it, "seed", c.cbow.seed);
      read(*it, "negativeSamples", c.cbow.negative_samples);
    }
    if (const auto it = j.find("fit"); it != j.end()) {
      read(*it, "epochs", c.fit.epochs);
      read(*it, "batchSize", c.fit.batch_size);
      read(*it, "dropout", c.fit.dropout);
      read(*it, "learningRate", c.fit.learning_rate);
      read(*it, "rho", c.fit.rho);
      read(*it, "epsilon", c.fit.epsilon);
      read(*it, "seed", c.fit.seed);
      read(*it, "shuffle", c.fit.shuffle);
      read(*it, "hiddenDim", c.fit.hidden_dim);
    }
    read(j, "tablesSeed", c.tables_seed);
    read(j, "exampleSeed", c.example_seed);
    read(j, "randomSeed", c.random_seed);
    if (const auto it = j.find("patterns"); it != j.end()) {
      c.patterns.clear();
      for (const auto &name : *it) {
        auto p = pattern_from_string(name.get<std::string>());
        if (!p)
          throw Error(ErrorCode::Format,
                      "unknown pattern " + name.get<std::string>());
        c.patterns.push_back(*p);
      }
    }
    read(j, "thresholds", c.thresholds);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Format, std::string("invalid run config: ") +
                                       e.what());
  }
  c.cbow.validate();
  c.fit.validate();
  return c;
}

std::string format_run_config(const RunConfig &c) {
  Json j = artifact_fields(c);
  j["validate"] = c.validate.generic_string();
  if (!c.scan.empty())
    j["scan"] = c.scan.generic_string();
  j["out"] = c.out.generic_string();
  j["patterns"] = Json::array();
  for (auto p : c.patterns)
    j["patterns"].push_back(to_string(p));
  j["thresholds"] = c.thresholds;
  return j.dump(2) + '\n';
}

namespace {

class Session {
public:
  Session(const Options &options, std::ostream &out, std::ostream &err)
      : opt_(options), out_(out), err_(err) {
    if (opt_.config) {
      config_ = parse_run_config(read_file(*opt_.config),
                                 opt_.config->parent_path());
    }
    if (opt_.seed) {
      config_.cbow.seed = config_.fit.seed = config_.tables_seed =
          config_.example_seed = config_.random_seed = *opt_.seed;
    }
    if (opt_.vocab_cap)
      config_.vocab_cap = *opt_.vocab_cap;
    if (opt_.out)
      config_.out = *opt_.out;
    if (opt_.pattern) {
      auto p = pattern_from_string(*opt_.pattern);
      if (!p)
        throw Error(ErrorCode::Usage, "unknown pattern '" + *opt_.pattern +
                                          "' (swapped-args, wrong-operator, "
                                          "wrong-operand)");
      config_.patterns = {*p};
    }
    checksum_ = config_.checksum();
  }

  int dispatch() {
    const std::string &c = opt_.command;
    if (c == "extract")
      return extract();
    if (c == "embed")
      return embed();
    if (c == "gen")
      return for_patterns(&Session::gen);
    if (c == "train")
      return for_patterns(&Session::train);
    if (c == "scan")
      return for_patterns(&Session::scan_pattern);
    if (c == "eval")
      return for_patterns(&Session::eval);
    if (c == "similar")
      return similar();
    if (c == "vocab-coverage")
      return coverage();
    if (c == "synth")
      return synth();
    if (c == "pipeline")
      return pipeline();
    throw Error(ErrorCode::Usage, "unknown command '" + c + "'");
  }

private:
  fs::path out_path(const std::string &name) const {
    return config_.out / name;
  }

  std::string suffix() const { return opt_.random ? ".random" : ""; }

  std::string read_input(const fs::path &path, const char *what) const {
    if (!fs::exists(path))
      throw Error(ErrorCode::Io, std::string("missing ") + what + ": " +
                                     path.string() + " (run the earlier stage)");
    return read_file(path);
  }

  void check_config(std::uint64_t found, const fs::path &path) const {
    if (found != checksum_)
      throw Error(ErrorCode::ChecksumMismatch,
                  path.string() + " was produced with config " + hex64(found) +
                      ", current config is " + hex64(checksum_));
  }

  Corpus load(const fs::path &path) const {
    Corpus corpus = load_corpus(path);
    for (const auto &f : corpus.failures)
      err_ << "skipped " << f.id << ": " << f.message << '\n';
    if (corpus.files.empty())
      throw Error(ErrorCode::EmptyCorpus, "no input files in " + path.string());
    return corpus;
  }

  Vocabulary load_vocab() const {
    const auto path = out_path("vocab.tsv");
    std::uint64_t config = 0;
    Vocabulary vocab = parse_vocabulary(read_input(path, "vocabulary"), &config);
    check_config(config, path);
    return vocab;
  }

  EmbeddingMatrix load_embeddings() const {
    const auto path = out_path("embeddings" + suffix() + ".txt");
    std::uint64_t config = 0;
    EmbeddingMatrix m = parse_embeddings(read_input(path, "embeddings"), &config);
    check_config(config, path);
    return m;
  }

  DetectorModel load_model(Pattern p) const {
    const auto path =
        out_path(std::string("model.") + to_string(p) + suffix() + ".ckpt");
    DetectorModel model = parse_checkpoint(read_input(path, "checkpoint"));
    check_config(model.config_checksum, path);
    if (model.pattern != p)
      throw Error(ErrorCode::Format, path.string() + " holds another pattern");
    return model;
  }

  int for_patterns(int (Session::*step)(Pattern)) {
    for (Pattern p : config_.patterns)
      if (int rc = (this->*step)(p); rc != exit_ok)
        return rc;
    return exit_ok;
  }

  int extract() {
    const Corpus corpus = load(config_.train);
    std::vector<std::pair<std::string, TokenStream>> streams;
    TokenCounts counts;
    for (const auto &f : corpus.files) {
      streams.emplace_back(f.id, embedding_token_stream(f.tokens));
      counts.add(streams.back().second);
    }
    if (counts.total() == 0)
      throw Error(ErrorCode::EmptyCorpus, "corpus contains no tokens");
    const Vocabulary vocab = Vocabulary::from_counts(counts, config_.vocab_cap);
    write_file(out_path("streams.txt"), "#config=" + hex64(checksum_) + '\n' +
                                            format_streams(streams));
    write_file(out_path("vocab.tsv"), format_vocabulary(vocab, checksum_));
    out_ << "extracted " << corpus.files.size() << " files ("
         << corpus.failures.size() << " failed), " << counts.total()
         << " tokens, vocabulary " << vocab.size() << '\n';
    return exit_ok;
  }

  std::vector<TokenStream> load_streams() const {
    const auto path = out_path("streams.txt");
    std::string text = read_input(path, "token streams");
    if (!text.starts_with("#config="))
      throw Error(ErrorCode::Format, "streams file lacks its #config line");
    const auto eol = text.find('\n');
    check_config(parse_hex64(std::string_view(text).substr(8, eol - 8)), path);
    std::vector<TokenStream> streams;
    for (auto &[id, s] : parse_streams(std::string_view(text).substr(eol + 1)))
      streams.push_back(std::move(s));
    return streams;
  }

  int embed() {
    const Vocabulary vocab = load_vocab();
    if (opt_.random) {
      const EmbeddingMatrix m =
          random_embedding(vocab, config_.cbow.dim, config_.random_seed);
      write_file(out_path("embeddings.random.txt"),
                 format_embeddings(m, checksum_));
      out_ << "random embedding: " << m.rows() << " x " << m.dim() << '\n';
      return exit_ok;
    }
    const auto streams = load_streams();
    const auto pairs =
        build_cbow_dataset(streams, vocab, config_.cbow.window);
    const CbowResult result = train_cbow(pairs, config_.cbow, vocab);
    write_file(out_path("embeddings.txt"),
               format_embeddings(result.matrix, checksum_));
    out_ << "cbow: " << pairs.size() << " pairs";
    for (std::size_t e = 0; e < result.epoch_loss.size(); ++e)
      out_ << (e ? ", " : "; loss ") << format_real(result.epoch_loss[e], 5);
    out_ << '\n';
    return exit_ok;
  }

  int gen(Pattern p) {
    const Vocabulary vocab = load_vocab();
    const Corpus corpus = load(config_.train);
    const ExampleSet set =
        generate_corpus_examples(p, corpus, config_.example_seed);
    write_file(out_path(std::string("examples.") + to_string(p) + ".tsv"),
               format_examples(set, {vocab.checksum(), checksum_}));
    out_ << to_string(p) << ": " << set.pair_count() << " pairs\n";
    return exit_ok;
  }

  int train(Pattern p) {
    const auto path = out_path(std::string("examples.") + to_string(p) + ".tsv");
    ExamplesHeader header;
    const ExampleSet set = parse_examples(read_input(path, "examples"), &header);
    check_config(header.config_checksum, path);
    const EmbeddingMatrix E = load_embeddings();
    if (E.vocab_checksum() != header.vocab_checksum)
      throw Error(ErrorCode::ChecksumMismatch,
                  "embedding vocabulary " + hex64(E.vocab_checksum()) +
                      " differs from the examples' " +
                      hex64(header.vocab_checksum));
    std::vector<double> losses;
    DetectorModel model = train_detector(
        set, E, EncodingTables(config_.tables_seed), config_.fit, &losses);
    model.config_checksum = checksum_;
    write_file(
        out_path(std::string("model.") + to_string(p) + suffix() + ".ckpt"),
        format_checkpoint(model));
    out_ << to_string(p) << suffix() << ": trained on "
         << 2 * set.pair_count() << " examples";
    if (!losses.empty())
      out_ << ", final loss " << format_real(losses.back(), 5);
    out_ << '\n';
    return exit_ok;
  }

  int scan_pattern(Pattern p) {
    const double t = opt_.threshold.value_or(0.5);
    const DetectorModel model = load_model(p);
    const EmbeddingMatrix E = load_embeddings();
    const Corpus corpus =
        load(config_.scan.empty() ? config_.validate : config_.scan);
    const auto warnings = scan(corpus, model, E, t);
    write_file(out_path(std::string("warnings.") + to_string(p) + suffix() +
                        ".tsv"),
               format_warnings(warnings, checksum_));
    out_ << render_warnings(warnings);
    return exit_ok;
  }

  int eval(Pattern p) {
    const DetectorModel model = load_model(p);
    const EmbeddingMatrix E = load_embeddings();
    const Corpus corpus = load(config_.validate);
    const ExampleSet set =
        generate_corpus_examples(p, corpus, config_.example_seed);
    std::vector<double> thresholds = config_.thresholds;
    if (opt_.threshold)
      thresholds = {*opt_.threshold};
    const EvalReport report = evaluate(set, model, E, thresholds);
    write_file(
        out_path(std::string("eval.") + to_string(p) + suffix() + ".json"),
        format_eval_report(report, p, checksum_));
    out_ << to_string(p) << suffix() << ": accuracy "
         << format_fixed(report.accuracy, 4);
    for (const auto &m : report.per_threshold)
      out_ << "  t=" << format_real(m.t, 3) << " recall "
           << format_fixed(m.recall, 4) << " fps " << m.fps;
    out_ << '\n';
    return exit_ok;
  }

  int similar() {
    if (opt_.args.size() != 1)
      throw Error(ErrorCode::Usage, "similar takes exactly one token");
    const EmbeddingMatrix E = load_embeddings();
    for (const auto &[token, sim] : nearest(E, opt_.args[0], opt_.k))
      out_ << token << '\t' << format_fixed(sim, 6) << '\n';
    return exit_ok;
  }

  int coverage() {
    const auto streams = load_streams();
    TokenCounts counts;
    for (const auto &s : streams)
      counts.add(s);
    std::vector<std::size_t> caps;
    for (const auto &a : opt_.args) {
      const auto cap = parse_int(a);
      if (cap < 1)
        throw Error(ErrorCode::Usage, "caps must be positive");
      caps.push_back(static_cast<std::size_t>(cap));
    }
    if (caps.empty()) {
      const std::size_t distinct = counts.counts().size();
      for (std::size_t pct = 10; pct <= 100; pct += 10)
        caps.push_back(std::max<std::size_t>(1, distinct * pct / 100) + 2);
    }
    out_ << "cap\tcoverage\n";
    for (const auto &[cap, fraction] : coverage_curve(counts, caps))
      out_ << cap << '\t' << format_fixed(fraction, 6) << '\n';
    return exit_ok;
  }

  int synth() {
    if (opt_.args.size() != 1)
      throw Error(ErrorCode::Usage, "synth takes the spec file");
    ConventionSpec spec =
        parse_convention_spec(read_input(opt_.args[0], "spec file"));
    if (opt_.seed)
      spec.seed = *opt_.seed;
    const SyntheticCorpus corpus = generate_corpus(spec);
    write_corpus(corpus, config_.out);
    out_ << "wrote " << corpus.files.size() << " files, " << corpus.site_count
         << " sites, " << corpus.ground_truth.size() << " planted bugs to "
         << config_.out.string() << '\n';
    return exit_ok;
  }

  int pipeline() {
    extract();
    embed();
    for (Pattern p : config_.patterns) {
      gen(p);
      train(p);
      eval(p);
    }
    return exit_ok;
  }

  const Options &opt_;
  std::ostream &out_;
  std::ostream &err_;
  RunConfig config_;
  std::uint64_t checksum_ = 0;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::Usage:
    return exit_usage;
  case ErrorCode::NonFiniteLoss:
    return exit_internal;
  default:
    return exit_input;
  }
}

} // namespace

int run(const Options &options, std::ostream &out, std::ostream &err) {
  try {
    Session session(options, out, err);
    return session.dispatch();
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

} // namespace namelint::cli
