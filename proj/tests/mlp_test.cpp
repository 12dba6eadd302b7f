#include "namelint/error.hpp"
#include "namelint/mlp.hpp"
#include "namelint/support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

namespace namelint {
namespace {

std::vector<double> random_vector(Rng &rng, std::size_t n, double scale = 1) {
  std::vector<double> v(n);
  for (double &x : v)
    x = rng.uniform(-scale, scale);
  return v;
}

TEST(MlpInit, SeededGlorotWithZeroBiases) {
  const Mlp a = Mlp::init(394, 200, 3);
  EXPECT_EQ(a.parameters(), Mlp::init(394, 200, 3).parameters());
  EXPECT_NE(a.parameters(), Mlp::init(394, 200, 4).parameters());
  EXPECT_EQ(a.parameters().size(), 200u * 394 + 200 + 200 + 1);
  EXPECT_EQ(a.b1_offset(), 200u * 394);
  const double limit1 = std::sqrt(6.0 / (394 + 200));
  const double limit2 = std::sqrt(6.0 / (200 + 1));
  for (std::size_t h = 0; h < 200; ++h) {
    EXPECT_EQ(a.b1(h), 0.0);
    EXPECT_LE(std::abs(a.w2(h)), limit2);
    for (std::size_t i = 0; i < 394; i += 37)
      EXPECT_LE(std::abs(a.w1(h, i)), limit1);
  }
  EXPECT_EQ(a.b2(), 0.0);
}

TEST(MlpForward, ZeroNetworkIsOneHalf) {
  Mlp m(4, 3);
  Rng rng(1);
  for (int i = 0; i < 5; ++i)
    EXPECT_EQ(m.predict(random_vector(rng, 4, 100)), 0.5);
  EXPECT_THROW(m.predict(std::vector<double>(3)), Error);
}

TEST(MlpForward, DeterministicMonotoneInBiasAndBounded) {
  Mlp m = Mlp::init(6, 4, 2);
  Rng rng(2);
  const auto x = random_vector(rng, 6);
  EXPECT_EQ(m.predict(x), m.predict(x));
  double previous = m.predict(x);
  for (int i = 0; i < 10; ++i) {
    m.b2() += 0.5;
    const double p = m.predict(x);
    EXPECT_GT(p, previous);
    previous = p;
  }
  m.b2() = 1e6;
  EXPECT_LT(m.predict(x), 1.0);
  m.b2() = -1e6;
  EXPECT_GT(m.predict(x), 0.0);
}

Dataset blobs(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Dataset data(2);
  for (std::size_t i = 0; i < n; ++i) {
    const double label = static_cast<double>(i % 2);
    const double cx = label > 0 ? 2.0 : -2.0;
    const std::vector<double> x = {cx + rng.uniform(-1, 1),
                                   -cx + rng.uniform(-1, 1)};
    data.add(x, label);
  }
  return data;
}

double accuracy(const Mlp &m, const Dataset &data) {
  std::size_t right = 0;
  for (std::size_t i = 0; i < data.size(); ++i)
    right += (m.predict(data.row(i)) >= 0.5) == (data.label(i) > 0.5);
  return static_cast<double>(right) / static_cast<double>(data.size());
}

TEST(MlpFit, SeparatesBlobs) {
  const Dataset data = blobs(200, 5);
  Mlp m = Mlp::init(2, 16, 5);
  FitConfig config;
  config.batch_size = 10;
  config.learning_rate = 0.01;
  const FitResult r = fit(m, data, config);
  EXPECT_EQ(r.epoch_loss.size(), 10u);
  EXPECT_EQ(r.batch_loss.size(), 200u);
  EXPECT_LT(r.epoch_loss.back(), r.epoch_loss.front());
  EXPECT_GE(accuracy(m, data), 0.99);
}

TEST(MlpFit, ZeroEpochsLeavesParameters) {
  const Dataset data = blobs(20, 1);
  Mlp m = Mlp::init(2, 4, 1);
  const auto before = m.parameters();
  FitConfig config;
  config.epochs = 0;
  EXPECT_TRUE(fit(m, data, config).epoch_loss.empty());
  EXPECT_EQ(m.parameters(), before);
}

TEST(MlpFit, Deterministic) {
  const Dataset data = blobs(60, 2);
  Mlp a = Mlp::init(2, 5, 9), b = Mlp::init(2, 5, 9);
  FitConfig config;
  config.batch_size = 7;
  EXPECT_EQ(fit(a, data, config).batch_loss, fit(b, data, config).batch_loss);
  EXPECT_EQ(a.parameters(), b.parameters());
}

TEST(MlpFit, DuplicatedDatasetMatchesDoubledBatch) {
  const Dataset data = blobs(50, 3);
  Dataset doubled(2);
  for (std::size_t i = 0; i < data.size(); ++i) {
    doubled.add(data.row(i), data.label(i));
    doubled.add(data.row(i), data.label(i));
  }
  FitConfig config;
  config.epochs = 1;
  config.dropout = 0;
  config.shuffle = false;
  config.batch_size = 5;
  Mlp a = Mlp::init(2, 6, 4), b = a;
  const auto single = fit(a, data, config);
  config.batch_size = 10;
  const auto twice = fit(b, doubled, config);
  ASSERT_EQ(single.batch_loss.size(), twice.batch_loss.size());
  for (std::size_t i = 0; i < single.batch_loss.size(); ++i)
    EXPECT_NEAR(single.batch_loss[i], twice.batch_loss[i], 1e-9);
  EXPECT_NEAR(single.epoch_loss[0], twice.epoch_loss[0], 1e-9);
}

TEST(MlpFit, SmallFullBatchStepDescends) {
  const Dataset data = blobs(40, 8);
  Mlp m = Mlp::init(2, 5, 8);
  auto mean_loss = [&](const Mlp &net) {
    double sum = 0;
    for (std::size_t i = 0; i < data.size(); ++i)
      sum += binary_cross_entropy(net.predict(data.row(i)), data.label(i));
    return sum / static_cast<double>(data.size());
  };
  const double before = mean_loss(m);
  FitConfig config;
  config.epochs = 1;
  config.dropout = 0;
  config.batch_size = data.size();
  config.learning_rate = 1e-6;
  fit(m, data, config);
  EXPECT_LE(mean_loss(m), before + 1e-6);
}

TEST(MlpFit, RejectsBadInput) {
  Mlp m = Mlp::init(2, 3, 1);
  EXPECT_THROW(fit(m, Dataset(2), FitConfig{}), Error);
  EXPECT_THROW(fit(m, blobs(10, 1), FitConfig{.dropout = 1.0}), Error);
  Mlp wrong = Mlp::init(3, 3, 1);
  EXPECT_THROW(fit(wrong, blobs(10, 1), FitConfig{}), Error);
}

TEST(MlpFit, NonFiniteInputAborts) {
  Dataset data(2);
  data.add(std::vector<double>{NAN, 1.0}, 1);
  data.add(std::vector<double>{0.0, 1.0}, 0);
  Mlp m = Mlp::init(2, 3, 1);
  try {
    fit(m, data, FitConfig{});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteLoss);
  }
}

TEST(GradientCheck, RandomSmallNets) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mlp m = Mlp::init(7, 5, rng.next());
    std::vector<double> x = random_vector(rng, 7);
    // stay away from relu kinks
    while (min_abs_preactivation(m, x) < 1e-4)
      x = random_vector(rng, 7);
    EXPECT_LT(gradient_check(m, x, static_cast<double>(trial % 2)), 1e-4);
  }
}

TEST(GradientCheck, KinkResampling) {
  Mlp m = Mlp::init(3, 4, 2);
  std::vector<double> x = {0.3, -0.2, 0.7};
  // put hidden unit 0 exactly on its kink
  double pre = 0;
  for (std::size_t i = 0; i < 3; ++i)
    pre += m.w1(0, i) * x[i];
  m.parameters()[m.b1_offset()] = -pre;
  EXPECT_LT(min_abs_preactivation(m, x), 1e-4);
  Rng rng(3);
  int resamples = 0;
  while (min_abs_preactivation(m, x) < 1e-4) {
    x = random_vector(rng, 3);
    ++resamples;
  }
  EXPECT_GE(resamples, 1);
  EXPECT_LT(gradient_check(m, x, 1.0), 1e-4);
}

TEST(GradientCheck, ZeroGradientAtSaturatedOptimum) {
  Mlp m = Mlp::init(3, 2, 5);
  m.b2() = 60;
  const std::vector<double> x = {0.1, 0.2, 0.3};
  std::vector<double> analytic(m.parameters().size(), 0.0);
  m.backprop(x, 1.0, analytic, 1.0);
  for (std::size_t p = 0; p < analytic.size(); ++p) {
    Mlp plus = m, minus = m;
    plus.parameters()[p] += 1e-5;
    minus.parameters()[p] -= 1e-5;
    const double numeric = (binary_cross_entropy(plus.predict(x), 1.0) -
                            binary_cross_entropy(minus.predict(x), 1.0)) /
                           2e-5;
    EXPECT_NEAR(analytic[p], 0.0, 1e-8);
    EXPECT_NEAR(numeric, 0.0, 1e-8);
  }
}

TEST(MlpFile, RoundTrip) {
  Mlp m = Mlp::init(5, 3, 1);
  fit(m, [] {
    Dataset d(5);
    Rng rng(1);
    for (int i = 0; i < 30; ++i)
      d.add(random_vector(rng, 5), i % 2);
    return d;
  }(), FitConfig{.batch_size = 10});
  const std::string text = format_mlp(m);
  const Mlp back = parse_mlp(text);
  EXPECT_EQ(back.input_dim(), 5u);
  EXPECT_EQ(back.hidden_dim(), 3u);
  EXPECT_EQ(format_mlp(back), text);
  for (std::size_t i = 0; i < m.parameters().size(); ++i)
    EXPECT_NEAR(back.parameters()[i], m.parameters()[i],
                1e-8 * std::max(1.0, std::abs(m.parameters()[i])));
  EXPECT_THROW(parse_mlp("mlp 5 3\n1\n"), Error);
}

} // namespace
} // namespace namelint
