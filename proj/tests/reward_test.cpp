#include <stdexcept>

#include <cmath>

#include "cogent/reward.hpp"
#include "cogent/rng.hpp"
#include "doctest.h"

using namespace cogent;
using namespace cogent::reward;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("probability is the exact positive ratio") {
  PartitionStats s;
  for (int i = 0; i < 3; ++i) s.add_positive();
  s.add_negative();
  CHECK(s.probability() == doctest::Approx(0.75).epsilon(kTol));

  PartitionStats one;
  one.add_positive();
  CHECK(one.probability() == doctest::Approx(1.0).epsilon(kTol));

  PartitionStats quarter;
  quarter.add_positive();
  for (int i = 0; i < 3; ++i) quarter.add_negative();
  CHECK(quarter.probability() == doctest::Approx(0.25).epsilon(kTol));
}

TEST_CASE("probability is undefined with no examples") {
  PartitionStats s;
  CHECK_THROWS_AS(s.probability(), std::domain_error);
}

TEST_CASE("probability is monotone in the example record") {
  Rng rng(3);
  PartitionStats s;
  s.add_positive();
  for (int i = 0; i < 5000; ++i) {
    const double before = s.probability();
    if (rng.below(2)) {
      s.add_positive();
      CHECK(s.probability() >= before);
    } else {
      s.add_negative();
      CHECK(s.probability() <= before);
    }
  }
}

TEST_CASE("windowed stats track only the recent examples") {
  PartitionStats s(4);
  for (int i = 0; i < 100; ++i) s.add_negative();
  for (int i = 0; i < 4; ++i) s.add_positive();
  CHECK(s.probability() == doctest::Approx(1.0));
  CHECK(s.total() == 4);
}

TEST_CASE("self-information special values") {
  CHECK(self_information(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(self_information(0.25) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(self_information(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(self_information(0.0), std::domain_error);
  CHECK_THROWS_AS(self_information(1.5), std::domain_error);
  CHECK_THROWS_AS(self_information(-0.1), std::domain_error);
}

TEST_CASE("mean reward values and its maximum at 1/e") {
  CHECK(mean_reward(0.5) == doctest::Approx(0.5).epsilon(kTol));
  CHECK(mean_reward(1.0) == doctest::Approx(0.0).epsilon(kTol));
  const double p_star = 1.0 / std::exp(1.0);
  const double r_star = std::log2(std::exp(1.0)) / std::exp(1.0);
  CHECK(mean_reward(p_star) == doctest::Approx(r_star).epsilon(1e-12));
  CHECK(mean_reward(p_star) > mean_reward(p_star - 1e-4));
  CHECK(mean_reward(p_star) > mean_reward(p_star + 1e-4));
}

TEST_CASE("mean reward is positive inside (0,1) and unimodal around 1/e") {
  const double p_star = 1.0 / std::exp(1.0);
  double prev = mean_reward(0.001);
  for (double p = 0.002; p < p_star; p += 0.001) {
    const double r = mean_reward(p);
    CHECK(r > 0.0);
    CHECK(r > prev);
    prev = r;
  }
  prev = mean_reward(p_star);
  for (double p = p_star + 0.001; p < 1.0; p += 0.001) {
    const double r = mean_reward(p);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("resource award rounds beta times information") {
  CHECK(award_resources(1.0, 100.0) == 100);
  CHECK(award_resources(0.0, 100.0) == 0);
  CHECK(award_resources(2.5, 100.0) == 250);
  CHECK_THROWS_AS(award_resources(-1.0, 100.0), std::domain_error);
}

TEST_CASE("global reward update at the same instant just adds") {
  GlobalReward g(1.0);
  g.update(1.0, 0);
  g.update(0.3, 0);
  CHECK(g.value() == doctest::Approx(1.3).epsilon(kTol));
}

TEST_CASE("global reward halves over one half-life") {
  GlobalReward g(std::log(2.0));
  g.update(2.0, 0);
  g.update(0.0, 1000);
  CHECK(g.value() == doctest::Approx(1.0).epsilon(kTol));
}

TEST_CASE("unit rewards at fixed interval converge to the geometric limit") {
  const double rho = 1.0;
  const double tau = 0.05;  // 50 ms
  GlobalReward g(rho);
  TimeMs t = 0;
  for (int i = 0; i < 1000; ++i) {
    t += 50;
    g.update(1.0, t);
  }
  const double limit = 1.0 / (1.0 - std::exp(-rho * tau));
  CHECK(g.value() == doctest::Approx(limit).epsilon(1e-6));
}

TEST_CASE("scaling every reward scales the accumulator linearly") {
  Rng rng(11);
  GlobalReward a(0.7), b(0.7);
  TimeMs t = 0;
  for (int i = 0; i < 500; ++i) {
    t += static_cast<TimeMs>(1 + rng.below(100));
    const double r = rng.unit();
    a.update(r, t);
    b.update(3.0 * r, t);
    CHECK(b.value() == doctest::Approx(3.0 * a.value()).epsilon(1e-9));
  }
}

TEST_CASE("with no rewards the accumulator decays by exactly exp(-rho dt)") {
  GlobalReward g(2.0);
  g.update(5.0, 1000);
  const double before = g.value();
  CHECK(g.peek(3500) ==
        doctest::Approx(before * std::exp(-2.0 * 2.5)).epsilon(1e-12));
}

TEST_CASE("time regression is rejected") {
  GlobalReward g(1.0);
  g.update(1.0, 100);
  CHECK_THROWS_AS(g.update(1.0, 99), std::logic_error);
}
