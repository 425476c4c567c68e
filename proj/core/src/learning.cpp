// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/learning.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogent::learning {

double weighted_value(std::span<const std::pair<double, double>> children) {
  if (children.empty())
    throw std::invalid_argument("weighted_value: no children");
  double num = 0.0, den = 0.0;
  for (const auto& [p, q] : children) {
    num += p * q;
    den += p;
  }
  if (den <= 0.0)
    throw std::domain_error("weighted_value: weights sum to zero");
  return num / den;
}

double td_update(double q, double r, double v_bar, const LearnParams& params) {
  const double next = q + params.alpha * (r + params.gamma * v_bar - q);
  return std::max(next, 0.0);
}

double td_update_terminal(double q, double actuator_value,
                          const LearnParams& params) {
  const double next = q + params.alpha * (params.gamma * actuator_value - q);
  return std::max(next, 0.0);
}

std::size_t select_action(std::span<const double> q_values, Rng& rng) {
  if (q_values.empty())
    throw std::invalid_argument("select_action: no actions");
  double total = 0.0;
  for (double q : q_values) {
    if (q < 0.0) throw std::domain_error("select_action: negative value");
    total += q;
  }
  if (total <= 0.0) return rng.below(q_values.size());
  double pick = rng.unit() * total;
  for (std::size_t i = 0; i + 1 < q_values.size(); ++i) {
    pick -= q_values[i];
    if (pick < 0.0) return i;
  }
  return q_values.size() - 1;
}

}  // namespace cogent::learning
