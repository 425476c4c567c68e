// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cogent/config.hpp"
#include "cogent/hierarchy.hpp"
#include "cogent/metrics.hpp"
#include "cogent/world.hpp"

namespace cogent::sim {

// Wires sensors -> hierarchy -> actuators -> world and steps everything on
// one simulated clock. Acceptance runs use a single worker, where the whole
// loop is deterministic for a fixed (config, seed).
class Session {
 public:
  explicit Session(const config::RunConfig& cfg);

  // Advances the simulation up to absolute simulated time `until` (ms).
  void run_until(TimeMs until);

  hierarchy::Engine& engine() { return *engine_; }
  SimWorld& world() { return world_; }
  const MetricsLog& metrics() const { return metrics_; }
  const std::vector<hierarchy::ActuationRecord>& actuations() const {
    return actuation_rows_;
  }
  TimeMs now() const { return world_.now(); }

 private:
  config::RunConfig cfg_;
  SimWorld world_;
  std::unique_ptr<hierarchy::Engine> engine_;
  MetricsLog metrics_;
  std::vector<hierarchy::ActuationRecord> actuation_rows_;
};

struct SessionResult {
  MetricsLog metrics;
  std::vector<hierarchy::ActuationRecord> actuations;
};

// Runs a full session for the configured duration and returns its logs.
// A zero-duration session yields empty logs and no error.
SessionResult run_session(const config::RunConfig& cfg);

struct Fig3Result {
  ResponseCurve curve;
  TimeMs peak_delay_ms = 0;  // a-priori estimate of the response delay
  MetricsLog metrics;
};

// The stimulus-response experiment: undisturbed warmup, then repeated
// additive stimulation of a sensor channel without interrupting learning.
// Average-reward samples are binned relative to each stimulus onset and
// summed across repetitions; the argmax bin estimates the sensation delay.
Fig3Result fig3_experiment(const config::RunConfig& cfg);

}  // namespace cogent::sim
