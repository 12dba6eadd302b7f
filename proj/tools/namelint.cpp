#include "namelint/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  namespace cli = namelint::cli;
  cli::Options opt;

  CLI::App app{"namelint: learn name-based bug detectors from a corpus"};
  app.require_subcommand(1);

  std::string config, out;
  double threshold = 0.5;
  std::uint64_t seed = 0;
  std::size_t vocab_cap = 0;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--config", config, "run configuration (JSON)");
    sub->add_option("--seed", seed, "overrides every seed in the config");
    sub->add_option("--vocab-cap", vocab_cap, "vocabulary size cap");
    sub->add_option("--out", out, "output directory");
  };
  auto with_pattern = [&](CLI::App *sub) {
    sub->add_option("--pattern", opt.pattern,
                    "swapped-args, wrong-operator or wrong-operand");
  };

  struct Spec {
    const char *name;
    const char *help;
  };
  for (Spec s : {
           Spec{"extract", "tokenize the training corpus, build the vocabulary"},
           Spec{"embed", "train CBOW embeddings (--random for the baseline)"},
           Spec{"gen", "generate positive/negative examples"},
           Spec{"train", "train a detector per pattern"},
           Spec{"scan", "report suspicious sites in a corpus"},
           Spec{"eval", "accuracy, recall and false positives on held-out code"},
           Spec{"similar", "nearest neighbours of a token"},
           Spec{"vocab-coverage", "occurrence coverage for vocabulary caps"},
           Spec{"synth", "generate a synthetic convention corpus"},
           Spec{"pipeline", "extract, embed, gen, train and eval"},
       }) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    common(sub);
    const std::string name = s.name;
    if (name == "gen" || name == "train" || name == "scan" || name == "eval" ||
        name == "pipeline")
      with_pattern(sub);
    if (name == "embed" || name == "train" || name == "scan" ||
        name == "eval" || name == "similar")
      sub->add_flag("--random", opt.random, "use the random baseline embedding");
    if (name == "scan" || name == "eval")
      sub->add_option("--threshold", threshold, "report probabilities above t")
          ->check(CLI::Range(0.0, 1.0));
    if (name == "similar") {
      sub->add_option("token", opt.args, "prefixed token, e.g. ID:width")
          ->required();
      sub->add_option("-k", opt.k, "number of neighbours");
    }
    if (name == "vocab-coverage")
      sub->add_option("caps", opt.args, "vocabulary caps");
    if (name == "synth")
      sub->add_option("spec", opt.args, "convention spec (JSON)")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::exit_usage;
  }

  CLI::App *sub = app.get_subcommands().front();
  opt.command = sub->get_name();
  if (sub->count("--config"))
    opt.config = config;
  if (sub->count("--out"))
    opt.out = out;
  if (sub->count("--seed"))
    opt.seed = seed;
  if (sub->count("--vocab-cap"))
    opt.vocab_cap = vocab_cap;
  if (sub->get_option_no_throw("--threshold") && sub->count("--threshold"))
    opt.threshold = threshold;
  return cli::run(opt, std::cout, std::cerr);
}
