// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cogent/rng.hpp"
#include "cogent/types.hpp"

namespace cogent::actuator {

// Actuators have no information-theoretic reward of their own; they are
// evaluated by the impact their activations have on the global average
// reward, net of an energy-style cost. Each actuator template is copied per
// hierarchy context and every copy carries its own value estimate A.

struct ActuatorParams {
  double alpha = 0.1;         // learning rate for the value update
  double threshold = 0.05;    // copies whose A reaches this are removed
  double initial_value = 1.0; // A at copy creation; must exceed threshold
  double a_const = 1.0;       // exploration suppression constant
  TimeMs settle_delay = 300;  // wait between activation and value update
  int max_copies = 50;        // per template; new copies then replace argmin A
};

// Activation cost in resource steps as a function of the input vectors:
// base plus a term proportional to the magnitude of the first element of
// the first input, so cheaper commands (shorter movements) are more likely
// to fire.
struct CostModel {
  double base = 10.0;
  double per_magnitude = 0.2;

  double cost(std::span<const IntVec> inputs) const;
};

// One activation that has not passed its value update yet: cost expressed
// in bits plus the snapshot of the global reward at activation time.
struct PendingActivation {
  TimeMs activated_at = 0;
  double cost_bits = 0.0;
  double reward_before = 0.0;
};

// Probability that a request carrying resources s fires an actuator of cost
// c: s/c, clamped at 1. Summed over a request stream whose resources add up
// to the cost, the probabilities total exactly 1, which reproduces the
// activation frequency of a plain resource integrator without ever having
// to add up resources across contradictory requests.
double activation_probability(double resources, double cost);

// Exploration probability for adding copy n+1 given existing copy values:
// a_const / (a_const + sum(A)). Strictly decreasing in the total value, so
// evaluation of a well-understood actuator suppresses itself.
double exploration_probability(std::span<const double> copy_values,
                               double a_const);

// Share of the global-reward change attributed to one of n live
// activations: 1/n. Undefined (throws) for n < 1.
double delta_share(int live_activations);

// Per-context copy of an actuator template.
class ActuatorCopy {
 public:
  ActuatorCopy(std::string template_id, std::uint64_t copy_id,
               const ActuatorParams& params)
      : template_id_(std::move(template_id)),
        copy_id_(copy_id),
        value_(params.initial_value) {}

  const std::string& template_id() const { return template_id_; }
  std::uint64_t copy_id() const { return copy_id_; }
  double value() const { return value_; }
  const std::vector<PendingActivation>& pending() const { return pending_; }

  // Decides one execution request. On activation records the pending value
  // update; the caller issues the physical command and maintains the global
  // live-activation count. Requests are independent: resources are never
  // accumulated across calls, so contradictory inputs cannot mix.
  bool maybe_activate(double cost, double resources, double beta,
                      double reward_now, TimeMs now, Rng& rng);

  bool has_due_update(TimeMs now, TimeMs settle_delay) const;

  // Applies the value update for the oldest settled activation:
  // A += alpha * (delta * (R_now - R_then) - cost_bits). Returns the new A.
  // The caller decrements the live-activation count and removes the copy
  // once belowThreshold() turns true.
  double apply_value_update(double reward_now, double delta, double alpha);

  bool below_threshold(double threshold) const;

  void restore(double value) { value_ = value; }
  void restore_pending(const PendingActivation& p) { pending_.push_back(p); }

 private:
  std::string template_id_;
  std::uint64_t copy_id_;
  double value_;
  std::vector<PendingActivation> pending_;
};

// The naive resource-integrator activation rule, kept purely as a test
// oracle for the probabilistic scheme: accumulate resources and fire each
// time the running sum exceeds the cost. Only meaningful when every request
// carries identical inputs; mixed streams are rejected.
struct IntegratorRequest {
  double resources = 0.0;
  std::vector<IntVec> inputs;
};

int integrator_oracle(std::span<const IntegratorRequest> requests,
                      const CostModel& cost_model);

}  // namespace cogent::actuator
