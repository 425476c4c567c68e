// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <span>
#include <utility>

#include "cogent/rng.hpp"

namespace cogent::learning {

struct LearnParams {
  double alpha = 0.1;  // learning rate, in (0,1]
  double gamma = 0.9;  // discount factor, in [0,1)
};

// Value a brand-new action starts with, so it is selectable at all under
// proportional selection.
inline constexpr double kInitialQ = 0.1;

// Weighted average of the values of a concept's actions, each weighted by
// the positive-example probability of the concept the action points to:
// V = sum(p_j * Q_j) / sum(p_j). Throws if the weights sum to zero.
double weighted_value(std::span<const std::pair<double, double>> children);

// One TD step toward r + gamma*V, clamped at zero so action values stay
// usable as selection weights.
double td_update(double q, double r, double v_bar, const LearnParams& params);

// TD rule for actions pointing at an actuator: no immediate reward term and
// the downstream value is the actuator's own independent estimate A.
double td_update_terminal(double q, double actuator_value,
                          const LearnParams& params);

// Draws an action index with probability Q_i / sum(Q). All values must be
// non-negative; a zero sum degenerates to uniform selection so new concepts
// never deadlock.
std::size_t select_action(std::span<const double> q_values, Rng& rng);

}  // namespace cogent::learning
