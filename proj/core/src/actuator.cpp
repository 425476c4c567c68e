// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/actuator.hpp"

#include <cmath>
#include <stdexcept>

namespace cogent::actuator {

namespace {
// Removal compares A against the threshold with a small guard so that the
// exact-equality drift case (A landing on the threshold) is not decided by
// accumulated rounding.
constexpr double kThresholdGuard = 1e-9;
}  // namespace

double CostModel::cost(std::span<const IntVec> inputs) const {
  double magnitude = 0.0;
  if (!inputs.empty() && !inputs[0].empty())
    magnitude = std::abs(static_cast<double>(inputs[0][0]));
  const double c = base + per_magnitude * magnitude;
  if (c <= 0.0) throw std::domain_error("CostModel: non-positive cost");
  return c;
}

double activation_probability(double resources, double cost) {
  if (resources < 0.0)
    throw std::domain_error("activation_probability: negative resources");
  if (cost <= 0.0)
    throw std::domain_error("activation_probability: non-positive cost");
  const double p = resources / cost;
  return p > 1.0 ? 1.0 : p;
}

double exploration_probability(std::span<const double> copy_values,
                               double a_const) {
  if (a_const <= 0.0)
    throw std::domain_error("exploration_probability: a_const must be > 0");
  double total = 0.0;
  for (double a : copy_values) total += a;
  return a_const / (a_const + total);
}

double delta_share(int live_activations) {
  if (live_activations < 1)
    throw std::domain_error("delta_share: no live activations");
  return 1.0 / static_cast<double>(live_activations);
}

bool ActuatorCopy::maybe_activate(double cost, double resources, double beta,
                                  double reward_now, TimeMs now, Rng& rng) {
  const double p = activation_probability(resources, cost);
  if (rng.unit() >= p) return false;  // request resources are refunded
  pending_.push_back(PendingActivation{
      .activated_at = now,
      .cost_bits = cost / beta,
      .reward_before = reward_now,
  });
  return true;
}

bool ActuatorCopy::has_due_update(TimeMs now, TimeMs settle_delay) const {
  return !pending_.empty() &&
         now - pending_.front().activated_at >= settle_delay;
}

double ActuatorCopy::apply_value_update(double reward_now, double delta,
                                        double alpha) {
  if (pending_.empty())
    throw std::logic_error("apply_value_update: nothing pending");
  const PendingActivation rec = pending_.front();
  pending_.erase(pending_.begin());
  // The reward change may well be negative; even at zero the cost term
  // pulls the value down.
  value_ += alpha * (delta * (reward_now - rec.reward_before) - rec.cost_bits);
  return value_;
}

bool ActuatorCopy::below_threshold(double threshold) const {
  return value_ <= threshold + kThresholdGuard;
}

int integrator_oracle(std::span<const IntegratorRequest> requests,
                      const CostModel& cost_model) {
  if (requests.empty()) return 0;
  const std::vector<IntVec>& first = requests.front().inputs;
  for (const IntegratorRequest& r : requests) {
    if (r.inputs != first)
      throw std::invalid_argument(
          "integrator_oracle: mixed-input request stream");
  }
  const double cost = cost_model.cost(first);
  int activations = 0;
  double sum = 0.0;
  for (const IntegratorRequest& r : requests) {
    sum += r.resources;
    if (sum > cost) {
      ++activations;
      sum -= cost;
    }
  }
  return activations;
}

}  // namespace cogent::actuator
