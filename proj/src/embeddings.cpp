#include "namelint/embeddings.hpp"

#include "namelint/error.hpp"
#include "namelint/naming.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace namelint {

EmbeddingMatrix::EmbeddingMatrix(std::vector<std::string> tokens,
                                 std::size_t dim, std::uint64_t vocab_checksum)
    : tokens_(std::move(tokens)), dim_(dim),
      values_(tokens_.size() * dim, 0.0), vocab_checksum_(vocab_checksum) {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (!index_.emplace(tokens_[i], i).second)
      throw Error(ErrorCode::Format, "duplicate embedding token " + tokens_[i]);
}

EmbeddingMatrix::EmbeddingMatrix(const Vocabulary &vocab, std::size_t dim)
    : EmbeddingMatrix(
          [&] {
            std::vector<std::string> tokens;
            for (const auto &e : vocab.entries())
              tokens.push_back(e.token);
            return tokens;
          }(),
          dim, vocab.checksum()) {}

std::optional<std::size_t> EmbeddingMatrix::find(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::span<const double> EmbeddingMatrix::lookup(std::string_view token) const {
  return row(find(token).value_or(Vocabulary::unk_index));
}

namespace {

std::string format_rows(const EmbeddingMatrix &m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += escape_token(m.tokens()[i]);
    out += '\t';
    const auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j)
        out += ' ';
      out += format_real(r[j]);
    }
    out += '\n';
  }
  return out;
}

} // namespace

std::uint64_t EmbeddingMatrix::checksum() const {
  return fnv1a(format_rows(*this));
}

void CbowConfig::validate() const {
  if (window == 0 || window % 2 != 0)
    throw Error(ErrorCode::Usage, "CBOW window must be even and positive");
  if (dim < 1)
    throw Error(ErrorCode::Usage, "embedding dimension must be positive");
  if (!(learning_rate > 0))
    throw Error(ErrorCode::Usage, "learning rate must be positive");
}

std::vector<CbowPair> build_cbow_dataset(std::span<const TokenStream> streams,
                                         const Vocabulary &vocab,
                                         std::size_t window) {
  if (window % 2 != 0)
    throw Error(ErrorCode::Usage, "CBOW window must be even");
  const std::size_t half = window / 2;
  std::vector<CbowPair> pairs;
  for (const auto &stream : streams) {
    std::vector<std::uint32_t> ids(stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i)
      ids[i] = static_cast<std::uint32_t>(vocab.index_of(stream[i]));
    for (std::size_t i = 0; i < stream.size(); ++i) {
      const std::string &token = stream[i];
      if (!token.starts_with(id_prefix) && !token.starts_with(lit_prefix))
        continue;
      if (ids[i] == Vocabulary::unk_index)
        continue;
      CbowPair pair;
      pair.target = ids[i];
      const std::size_t lo = i >= half ? i - half : 0;
      const std::size_t hi = std::min(stream.size(), i + half + 1);
      for (std::size_t j = lo; j < hi; ++j)
        if (j != i)
          pair.context.push_back(ids[j]);
      if (!pair.context.empty())
        pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// Samples token indices proportionally to count^0.75.
class NoiseTable {
public:
  explicit NoiseTable(const Vocabulary &vocab) {
    double total = 0;
    for (const auto &e : vocab.entries()) {
      total += std::pow(static_cast<double>(e.count), 0.75);
      cumulative_.push_back(total);
    }
    if (total <= 0)
      throw Error(ErrorCode::EmptyDataset, "vocabulary has no counts");
  }

  std::uint32_t draw(Rng &rng) const {
    const double u = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<std::uint32_t>(
        std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1));
  }

private:
  std::vector<double> cumulative_;
};

} // namespace

CbowResult train_cbow(std::span<const CbowPair> pairs, const CbowConfig &config,
                      const Vocabulary &vocab) {
  config.validate();
  // e = 1 is only meaningful for the random baseline
  if (config.dim < 2)
    throw Error(ErrorCode::Usage, "CBOW needs an embedding dimension of 2+");
  if (pairs.empty())
    throw Error(ErrorCode::EmptyDataset, "no CBOW training pairs");
  const std::size_t e = config.dim;
  const std::size_t v = vocab.size();

  Rng rng(config.seed);
  EmbeddingMatrix input(vocab, e);
  const double bound = 0.5 / static_cast<double>(e);
  for (double &x : input.values())
    x = rng.uniform(-bound, bound);
  std::vector<double> output(v * e, 0.0);

  std::optional<NoiseTable> noise;
  if (config.negative_samples > 0)
    noise.emplace(vocab);

  std::vector<double> hidden(e), grad_hidden(e), scores(v);
  std::vector<std::uint32_t> targets;
  std::vector<double> labels;
  CbowResult result;
  const double total_steps =
      static_cast<double>(config.epochs) * static_cast<double>(pairs.size());
  double step = 0;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    double loss_sum = 0;
    for (const CbowPair &pair : pairs) {
      double lr = config.learning_rate;
      if (config.linear_decay)
        lr *= std::max(1e-4, 1.0 - step / total_steps);
      step += 1;

      std::fill(hidden.begin(), hidden.end(), 0.0);
      for (std::uint32_t c : pair.context) {
        const auto r = input.row(c);
        for (std::size_t d = 0; d < e; ++d)
          hidden[d] += r[d];
      }
      const double inv = 1.0 / static_cast<double>(pair.context.size());
      for (double &h : hidden)
        h *= inv;
      std::fill(grad_hidden.begin(), grad_hidden.end(), 0.0);

      auto update_output = [&](std::size_t j, double g) {
        double *u = output.data() + j * e;
        for (std::size_t d = 0; d < e; ++d) {
          grad_hidden[d] += g * u[d];
          u[d] -= lr * g * hidden[d];
        }
      };

      if (!noise) {
        double top = -INFINITY;
        for (std::size_t j = 0; j < v; ++j) {
          const double *u = output.data() + j * e;
          double s = 0;
          for (std::size_t d = 0; d < e; ++d)
            s += u[d] * hidden[d];
          scores[j] = s;
          top = std::max(top, s);
        }
        double z = 0;
        for (std::size_t j = 0; j < v; ++j) {
          scores[j] = std::exp(scores[j] - top);
          z += scores[j];
        }
        loss_sum -= std::log(std::max(scores[pair.target] / z, 1e-300));
        for (std::size_t j = 0; j < v; ++j)
          update_output(j, scores[j] / z - (j == pair.target ? 1.0 : 0.0));
      } else {
        targets.assign(1, pair.target);
        labels.assign(1, 1.0);
        for (std::size_t k = 0; k < config.negative_samples; ++k) {
          targets.push_back(noise->draw(rng));
          labels.push_back(0.0);
        }
        for (std::size_t k = 0; k < targets.size(); ++k) {
          const double *u = output.data() + targets[k] * e;
          double s = 0;
          for (std::size_t d = 0; d < e; ++d)
            s += u[d] * hidden[d];
          const double p = sigmoid(s);
          loss_sum -= std::log(std::max(labels[k] > 0 ? p : 1.0 - p, 1e-300));
          update_output(targets[k], p - labels[k]);
        }
      }

      for (std::uint32_t c : pair.context) {
        const auto r = input.row(c);
        for (std::size_t d = 0; d < e; ++d)
          r[d] -= lr * inv * grad_hidden[d];
      }
    }
    const double mean = loss_sum / static_cast<double>(pairs.size());
    if (!std::isfinite(mean))
      throw Error(ErrorCode::NonFiniteLoss,
                  "CBOW loss diverged in epoch " + std::to_string(epoch + 1));
    result.epoch_loss.push_back(mean);
  }

  for (double &x : input.row(Vocabulary::none_index))
    x = 0.0;
  result.matrix = std::move(input);
  return result;
}

EmbeddingMatrix random_embedding(const Vocabulary &vocab, std::size_t dim,
                                 std::uint64_t seed) {
  if (dim < 1)
    throw Error(ErrorCode::Usage, "embedding dimension must be positive");
  if (dim < 64 && (std::uint64_t{1} << dim) < vocab.size())
    throw Error(ErrorCode::CollisionExhaustion,
                "cannot draw " + std::to_string(vocab.size()) +
                    " distinct binary vectors of length " +
                    std::to_string(dim));
  Rng rng(seed);
  EmbeddingMatrix m(vocab, dim);
  std::set<std::vector<bool>> used;
  used.insert(std::vector<bool>(dim, false));
  std::vector<bool> bits(dim);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (i == Vocabulary::none_index)
      continue;
    do {
      for (std::size_t d = 0; d < dim; ++d)
        bits[d] = (rng.next() >> 63) != 0;
    } while (!used.insert(bits).second);
    auto r = m.row(i);
    for (std::size_t d = 0; d < dim; ++d)
      r[d] = bits[d] ? 1.0 : 0.0;
  }
  return m;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "cosine of unequal lengths");
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0)
    return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<std::pair<std::string, double>>
nearest(const EmbeddingMatrix &matrix, std::string_view token, std::size_t k) {
  if (token == unk_token || token == none_token)
    throw Error(ErrorCode::ReservedToken,
                "reserved token " + std::string(token));
  const auto query = matrix.find(token);
  if (!query)
    throw Error(ErrorCode::UnknownToken,
                "unknown token " + std::string(token));
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    if (i == *query || i == Vocabulary::unk_index ||
        i == Vocabulary::none_index)
      continue;
    out.emplace_back(matrix.tokens()[i],
                     cosine(matrix.row(*query), matrix.row(i)));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second)
      return a.second > b.second;
    return a.first < b.first;
  });
  if (out.size() > k)
    out.resize(k);
  return out;
}

std::string format_embeddings(const EmbeddingMatrix &matrix,
                              std::uint64_t config_checksum) {
  return "e=" + std::to_string(matrix.dim()) +
         " vocab=" + hex64(matrix.vocab_checksum()) +
         " config=" + hex64(config_checksum) + '\n' + format_rows(matrix);
}

EmbeddingMatrix parse_embeddings(std::string_view text,
                                 std::uint64_t *config_checksum) {
  const auto lines = split(text, '\n');
  std::size_t dim = 0;
  std::uint64_t vocab = 0;
  bool have_dim = false, have_vocab = false;
  for (std::string_view field : split(lines.front(), ' ')) {
    if (field.starts_with("e=")) {
      dim = static_cast<std::size_t>(parse_int(field.substr(2)));
      have_dim = true;
    } else if (field.starts_with("vocab=")) {
      vocab = parse_hex64(field.substr(6));
      have_vocab = true;
    } else if (field.starts_with("config=")) {
      if (config_checksum)
        *config_checksum = parse_hex64(field.substr(7));
    }
  }
  if (!have_dim || !have_vocab || dim == 0)
    throw Error(ErrorCode::Format, "embedding header needs e= and vocab=");

  std::vector<std::string> tokens;
  std::vector<double> values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty())
      continue;
    const auto tab = lines[i].find('\t');
    if (tab == std::string_view::npos)
      throw Error(ErrorCode::Format,
                  "embedding line " + std::to_string(i + 1) + " lacks a tab");
    tokens.push_back(unescape_token(lines[i].substr(0, tab)));
    const auto fields = split(lines[i].substr(tab + 1), ' ');
    if (fields.size() != dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "embedding line " + std::to_string(i + 1) + " has " +
                      std::to_string(fields.size()) + " values, expected " +
                      std::to_string(dim));
    for (auto f : fields) {
      const double x = parse_real(f);
      if (!std::isfinite(x))
        throw Error(ErrorCode::Format, "non-finite embedding value");
      values.push_back(x);
    }
  }
  EmbeddingMatrix m(std::move(tokens), dim, vocab);
  m.values() = std::move(values);
  return m;
}

} // namespace namelint
