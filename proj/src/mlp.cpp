#include "namelint/mlp.hpp"

#include "namelint/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace namelint {

namespace {

constexpr double clamp_eps = 1e-12;

double sigmoid(double z) {
  if (z >= 0)
    return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double clamp_probability(double p) {
  return std::clamp(p, clamp_eps, 1.0 - clamp_eps);
}

} // namespace

void FitConfig::validate() const {
  if (batch_size < 1)
    throw Error(ErrorCode::Usage, "batch size must be at least 1");
  if (!(dropout >= 0 && dropout < 1))
    throw Error(ErrorCode::Usage, "dropout must be in [0, 1)");
  if (!(learning_rate > 0) || !(rho >= 0 && rho < 1) || !(epsilon > 0))
    throw Error(ErrorCode::Usage, "invalid RMSprop hyperparameters");
  if (hidden_dim < 1)
    throw Error(ErrorCode::Usage, "hidden layer must have a unit");
}

std::span<double> Dataset::add(double label) {
  values_.resize(values_.size() + dim_, 0.0);
  labels_.push_back(label);
  return {values_.data() + values_.size() - dim_, dim_};
}

void Dataset::add(std::span<const double> x, double label) {
  if (x.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "dataset row has wrong length");
  std::copy(x.begin(), x.end(), add(label).begin());
}

Mlp::Mlp(std::size_t input_dim, std::size_t hidden_dim)
    : input_(input_dim), hidden_(hidden_dim),
      theta_(hidden_dim * input_dim + 2 * hidden_dim + 1, 0.0) {
  if (input_dim < 1 || hidden_dim < 1)
    throw Error(ErrorCode::Usage, "network dimensions must be positive");
}

Mlp Mlp::init(std::size_t input_dim, std::size_t hidden_dim,
              std::uint64_t seed) {
  Mlp mlp(input_dim, hidden_dim);
  Rng rng(seed);
  const double r1 =
      std::sqrt(6.0 / static_cast<double>(input_dim + hidden_dim));
  for (std::size_t i = 0; i < hidden_dim * input_dim; ++i)
    mlp.theta_[i] = rng.uniform(-r1, r1);
  const double r2 = std::sqrt(6.0 / static_cast<double>(hidden_dim + 1));
  for (std::size_t h = 0; h < hidden_dim; ++h)
    mlp.theta_[mlp.w2_offset() + h] = rng.uniform(-r2, r2);
  return mlp;
}

double Mlp::predict(std::span<const double> x) const {
  if (x.size() != input_)
    throw Error(ErrorCode::DimensionMismatch,
                "input has " + std::to_string(x.size()) + " entries, expected " +
                    std::to_string(input_));
  double z = b2();
  const double *w = theta_.data();
  for (std::size_t h = 0; h < hidden_; ++h, w += input_) {
    double a = b1(h);
    for (std::size_t i = 0; i < input_; ++i)
      a += w[i] * x[i];
    if (a > 0)
      z += w2(h) * a;
  }
  return clamp_probability(sigmoid(z));
}

double Mlp::backprop(std::span<const double> x, double label,
                     std::span<double> grad, double weight,
                     std::span<const double> input_mask,
                     std::span<const double> hidden_mask) const {
  if (x.size() != input_)
    throw Error(ErrorCode::DimensionMismatch, "input has wrong length");
  thread_local std::vector<double> xin, act;
  xin.assign(x.begin(), x.end());
  if (!input_mask.empty())
    for (std::size_t i = 0; i < input_; ++i)
      xin[i] *= input_mask[i];

  act.assign(hidden_, 0.0);
  double z = b2();
  const double *w = theta_.data();
  for (std::size_t h = 0; h < hidden_; ++h, w += input_) {
    double a = b1(h);
    for (std::size_t i = 0; i < input_; ++i)
      a += w[i] * xin[i];
    a = a > 0 ? a : 0.0;
    if (!hidden_mask.empty())
      a *= hidden_mask[h];
    act[h] = a;
    z += w2(h) * a;
  }
  const double p = sigmoid(z);
  const double loss = binary_cross_entropy(p, label);

  const double dz = (p - label) * weight;
  grad[b2_offset()] += dz;
  for (std::size_t h = 0; h < hidden_; ++h) {
    grad[w2_offset() + h] += dz * act[h];
    if (act[h] <= 0)
      continue;
    double da = dz * w2(h);
    if (!hidden_mask.empty())
      da *= hidden_mask[h];
    grad[b1_offset() + h] += da;
    double *g = grad.data() + h * input_;
    for (std::size_t i = 0; i < input_; ++i)
      g[i] += da * xin[i];
  }
  return loss;
}

double binary_cross_entropy(double p, double label) {
  p = clamp_probability(p);
  return -(label * std::log(p) + (1.0 - label) * std::log(1.0 - p));
}

FitResult fit(Mlp &mlp, const Dataset &data, const FitConfig &config) {
  config.validate();
  if (data.empty())
    throw Error(ErrorCode::EmptyDataset, "no training examples");
  if (data.dim() != mlp.input_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dataset rows do not match the network input");
  // relu would silently swallow a NaN feature
  for (std::size_t i = 0; i < data.size(); ++i)
    for (double v : data.row(i))
      if (!std::isfinite(v))
        throw Error(ErrorCode::NonFiniteLoss,
                    "example " + std::to_string(i) + " has a non-finite feature");

  Rng rng(config.seed);
  auto &theta = mlp.parameters();
  std::vector<double> grad(theta.size()), square(theta.size(), 0.0);
  std::vector<double> input_mask, hidden_mask;
  const double keep = 1.0 - config.dropout;
  const bool dropout = config.dropout > 0;
  if (dropout) {
    input_mask.resize(mlp.input_dim());
    hidden_mask.resize(mlp.hidden_dim());
  }
  auto draw_mask = [&](std::vector<double> &mask) {
    for (double &m : mask)
      m = rng.uniform() < config.dropout ? 0.0 : 1.0 / keep;
  };

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  FitResult result;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle)
      rng.shuffle(order);
    double epoch_sum = 0;
    for (std::size_t start = 0; start < order.size();
         start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      const double weight = 1.0 / static_cast<double>(end - start);
      std::fill(grad.begin(), grad.end(), 0.0);
      double batch_sum = 0;
      for (std::size_t k = start; k < end; ++k) {
        if (dropout) {
          draw_mask(input_mask);
          draw_mask(hidden_mask);
        }
        batch_sum += mlp.backprop(data.row(order[k]), data.label(order[k]),
                                  grad, weight, input_mask, hidden_mask);
      }
      const double batch_loss = batch_sum * weight;
      if (!std::isfinite(batch_loss))
        throw Error(ErrorCode::NonFiniteLoss,
                    "loss became non-finite in epoch " +
                        std::to_string(epoch + 1) + ", batch starting at " +
                        std::to_string(start));
      for (std::size_t p = 0; p < theta.size(); ++p) {
        square[p] = config.rho * square[p] +
                    (1.0 - config.rho) * grad[p] * grad[p];
        theta[p] -=
            config.learning_rate * grad[p] / std::sqrt(square[p] + config.epsilon);
        if (!std::isfinite(theta[p]))
          throw Error(ErrorCode::NonFiniteLoss,
                      "parameter " + std::to_string(p) +
                          " became non-finite in epoch " +
                          std::to_string(epoch + 1));
      }
      result.batch_loss.push_back(batch_loss);
      epoch_sum += batch_sum;
    }
    result.epoch_loss.push_back(epoch_sum / static_cast<double>(data.size()));
  }
  return result;
}

double gradient_check(const Mlp &mlp, std::span<const double> x,
                      double label) {
  std::vector<double> analytic(mlp.parameters().size(), 0.0);
  mlp.backprop(x, label, analytic, 1.0);

  constexpr double h = 1e-5;
  Mlp probe = mlp;
  std::vector<double> scratch(analytic.size());
  auto loss_at = [&] {
    std::fill(scratch.begin(), scratch.end(), 0.0);
    return probe.backprop(x, label, scratch, 1.0);
  };
  double worst = 0;
  for (std::size_t p = 0; p < analytic.size(); ++p) {
    const double saved = probe.parameters()[p];
    probe.parameters()[p] = saved + h;
    const double up = loss_at();
    probe.parameters()[p] = saved - h;
    const double down = loss_at();
    probe.parameters()[p] = saved;
    const double numeric = (up - down) / (2 * h);
    const double a = analytic[p];
    if (a == 0 && numeric == 0)
      continue;
    const double scale = std::max({std::abs(a), std::abs(numeric), 1e-8});
    worst = std::max(worst, std::abs(a - numeric) / scale);
  }
  return worst;
}

double min_abs_preactivation(const Mlp &mlp, std::span<const double> x) {
  double smallest = INFINITY;
  for (std::size_t h = 0; h < mlp.hidden_dim(); ++h) {
    double a = mlp.b1(h);
    for (std::size_t i = 0; i < mlp.input_dim(); ++i)
      a += mlp.w1(h, i) * x[i];
    smallest = std::min(smallest, std::abs(a));
  }
  return smallest;
}

std::string format_mlp(const Mlp &mlp) {
  std::string out = "mlp " + std::to_string(mlp.input_dim()) + ' ' +
                    std::to_string(mlp.hidden_dim()) + '\n';
  for (double v : mlp.parameters())
    out += format_real(v) + '\n';
  return out;
}

Mlp parse_mlp(std::string_view text) {
  const auto lines = split(text, '\n');
  const auto head = split(lines.front(), ' ');
  if (head.size() != 3 || head[0] != "mlp")
    throw Error(ErrorCode::Format, "parameter block must start with 'mlp'");
  Mlp mlp(static_cast<std::size_t>(parse_int(head[1])),
          static_cast<std::size_t>(parse_int(head[2])));
  auto &theta = mlp.parameters();
  std::size_t n = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty())
      continue;
    if (n == theta.size())
      throw Error(ErrorCode::Format, "too many network parameters");
    theta[n] = parse_real(lines[i]);
    if (!std::isfinite(theta[n]))
      throw Error(ErrorCode::Format, "non-finite network parameter");
    ++n;
  }
  if (n != theta.size())
    throw Error(ErrorCode::Format, "expected " + std::to_string(theta.size()) +
                                       " network parameters, found " +
                                       std::to_string(n));
  return mlp;
}

} // namespace namelint
