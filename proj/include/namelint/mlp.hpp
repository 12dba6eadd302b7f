#pragma once

#include "namelint/support.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

struct FitConfig {
  std::size_t epochs = 10;
  std::size_t batch_size = 100;
  double dropout = 0.2;
  double learning_rate = 0.001;
  double rho = 0.9;
  double epsilon = 1e-8;
  std::uint64_t seed = 1;
  bool shuffle = true;
  std::size_t hidden_dim = 200;

  void validate() const;
};

/// Dense row-major design matrix with 0/1 labels.
class Dataset {
public:
  explicit Dataset(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  /// Appends a zeroed row and returns it for filling.
  std::span<double> add(double label);
  void add(std::span<const double> x, double label);

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  double label(std::size_t i) const { return labels_[i]; }

private:
  std::size_t dim_;
  std::vector<double> values_;
  std::vector<double> labels_;
};

/// One hidden ReLU layer, one sigmoid output. All parameters live in a flat
/// vector laid out as [W1 (hidden x input, row-major), b1, W2, b2].
class Mlp {
public:
  Mlp() = default;
  Mlp(std::size_t input_dim, std::size_t hidden_dim);

  /// Glorot-uniform weights (W1 drawn before W2), zero biases.
  static Mlp init(std::size_t input_dim, std::size_t hidden_dim,
                  std::uint64_t seed);

  std::size_t input_dim() const noexcept { return input_; }
  std::size_t hidden_dim() const noexcept { return hidden_; }

  std::vector<double> &parameters() noexcept { return theta_; }
  const std::vector<double> &parameters() const noexcept { return theta_; }

  double w1(std::size_t h, std::size_t i) const {
    return theta_[h * input_ + i];
  }
  double b1(std::size_t h) const { return theta_[hidden_ * input_ + h]; }
  double w2(std::size_t h) const {
    return theta_[hidden_ * input_ + hidden_ + h];
  }
  double b2() const { return theta_.back(); }
  double &b2() { return theta_.back(); }

  std::size_t w1_offset() const noexcept { return 0; }
  std::size_t b1_offset() const noexcept { return hidden_ * input_; }
  std::size_t w2_offset() const noexcept { return hidden_ * input_ + hidden_; }
  std::size_t b2_offset() const noexcept { return theta_.size() - 1; }

  /// Inference: no dropout. Output clamped to [1e-12, 1 - 1e-12].
  double predict(std::span<const double> x) const;

  /// Binary cross-entropy of one example and its gradient, accumulated into
  /// grad scaled by `weight`. Dropout masks (already scaled by 1/keep) are
  /// applied when non-empty.
  double backprop(std::span<const double> x, double label,
                  std::span<double> grad, double weight,
                  std::span<const double> input_mask = {},
                  std::span<const double> hidden_mask = {}) const;

private:
  std::size_t input_ = 0;
  std::size_t hidden_ = 0;
  std::vector<double> theta_;
};

double binary_cross_entropy(double p, double label);

struct FitResult {
  std::vector<double> epoch_loss;
  std::vector<double> batch_loss;
};

/// Minibatch RMSprop on mean binary cross-entropy. Throws NonFiniteLoss if
/// a batch loss or parameter stops being finite.
FitResult fit(Mlp &mlp, const Dataset &data, const FitConfig &config);

/// Largest relative error between the analytic gradient and central
/// differences (step 1e-5) over every parameter, without dropout.
double gradient_check(const Mlp &mlp, std::span<const double> x, double label);

/// Smallest |pre-activation| of the hidden layer; inputs near a ReLU kink
/// make finite differences unreliable.
double min_abs_preactivation(const Mlp &mlp, std::span<const double> x);

/// `mlp <input> <hidden>` followed by one parameter per line, 9 significant
/// digits.
std::string format_mlp(const Mlp &mlp);
Mlp parse_mlp(std::string_view text);

} // namespace namelint
