#include <stdexcept>

#include <array>
#include <cmath>
#include <vector>

#include "cogent/learning.hpp"
#include "doctest.h"

using namespace cogent;
using namespace cogent::learning;

TEST_CASE("weighted value of a single child ignores the weight") {
  const std::vector<std::pair<double, double>> kids{{0.5, 3.0}};
  CHECK(weighted_value(kids) == doctest::Approx(3.0));
}

TEST_CASE("equal weights give the arithmetic mean") {
  const std::vector<std::pair<double, double>> kids{{0.3, 1.0}, {0.3, 3.0}};
  CHECK(weighted_value(kids) == doctest::Approx(2.0));
}

TEST_CASE("weighted value direct arithmetic") {
  const std::vector<std::pair<double, double>> kids{{0.2, 1.0}, {0.4, 4.0}};
  CHECK(weighted_value(kids) == doctest::Approx(3.0));
}

TEST_CASE("weighted value is undefined when weights vanish") {
  const std::vector<std::pair<double, double>> kids{{0.0, 1.0}, {0.0, 4.0}};
  CHECK_THROWS_AS(weighted_value(kids), std::domain_error);
  CHECK_THROWS_AS(
      weighted_value(std::vector<std::pair<double, double>>{}),
      std::invalid_argument);
}

TEST_CASE("td update with alpha 1 replaces the value") {
  const LearnParams p{1.0, 0.9};
  CHECK(td_update(5.0, 0.5, 2.0, p) == doctest::Approx(0.5 + 0.9 * 2.0));
}

TEST_CASE("td update with zero reward and discount decays the value") {
  const LearnParams p{0.25, 0.0};
  CHECK(td_update(2.0, 0.0, 7.0, p) == doctest::Approx(1.5));
}

TEST_CASE("td update direct arithmetic") {
  const LearnParams p{0.1, 0.9};
  CHECK(td_update(1.0, 0.5, 2.0, p) == doctest::Approx(1.13));
}

TEST_CASE("terminal update with alpha 1 lands on the discounted value") {
  const LearnParams p{1.0, 0.9};
  CHECK(td_update_terminal(5.0, 3.0, p) == doctest::Approx(2.7));
}

TEST_CASE("terminal update decays toward zero for a worthless actuator") {
  const LearnParams p{0.5, 0.9};
  CHECK(td_update_terminal(2.0, 0.0, p) == doctest::Approx(1.0));
}

TEST_CASE("terminal update direct arithmetic") {
  const LearnParams p{0.5, 0.8};
  CHECK(td_update_terminal(2.0, 5.0, p) == doctest::Approx(3.0));
}

TEST_CASE("iterated td update converges geometrically to its fixed point") {
  const LearnParams p{0.1, 0.9};
  const double r = 0.4, v = 2.0;
  const double q_star = r + p.gamma * v;
  double q = 5.0;
  for (int n = 1; n <= 200; ++n) {
    q = td_update(q, r, v, p);
    CHECK(std::abs(q - q_star) <=
          std::pow(1.0 - p.alpha, n) * std::abs(5.0 - q_star) + 1e-12);
  }
  CHECK(q == doctest::Approx(q_star).epsilon(1e-6));
}

TEST_CASE("iterated terminal update converges to gamma A") {
  const LearnParams p{0.1, 0.9};
  double q = 0.0;
  for (int n = 0; n < 200; ++n) q = td_update_terminal(q, 4.0, p);
  CHECK(q == doctest::Approx(0.9 * 4.0).epsilon(1e-6));
}

TEST_CASE("values never go negative across any update sequence") {
  Rng rng(17);
  const LearnParams p{0.9, 0.5};
  double q = 0.1;
  for (int i = 0; i < 10000; ++i) {
    // adversarial negative rewards
    q = td_update(q, -5.0 * rng.unit(), rng.unit(), p);
    CHECK(q >= 0.0);
    q = td_update_terminal(q, rng.unit() - 0.5, p);
    CHECK(q >= 0.0);
  }
}

TEST_CASE("selection follows the proportional rule") {
  Rng rng(23);
  const std::array<double, 2> q{3.0, 1.0};
  int first = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i)
    first += select_action(q, rng) == 0 ? 1 : 0;
  // chi-squared against (0.75, 0.25), 1 dof; 6.635 is the 1% critical value
  const double e0 = 0.75 * n, e1 = 0.25 * n;
  const double o0 = first, o1 = n - first;
  const double chi2 =
      (o0 - e0) * (o0 - e0) / e0 + (o1 - e1) * (o1 - e1) / e1;
  CHECK(chi2 < 6.635);
}

TEST_CASE("scaling all values leaves the selection distribution unchanged") {
  Rng a(31), b(31);
  const std::array<double, 3> q{0.2, 1.0, 0.3};
  const std::array<double, 3> q10{2.0, 10.0, 3.0};
  for (int i = 0; i < 20000; ++i)
    CHECK(select_action(q, a) == select_action(q10, b));
}

TEST_CASE("a single action is always selected") {
  Rng rng(5);
  const std::array<double, 1> q{0.4};
  for (int i = 0; i < 100; ++i) CHECK(select_action(q, rng) == 0);
}

TEST_CASE("all-zero values degenerate to uniform selection") {
  Rng rng(41);
  const std::array<double, 4> q{0.0, 0.0, 0.0, 0.0};
  std::array<int, 4> counts{};
  for (int i = 0; i < 40000; ++i) counts[select_action(q, rng)] += 1;
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}
