// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <deque>
#include <string>

#include "cogent/types.hpp"

namespace cogent::reward {

struct RewardParams {
  double beta = 100.0;  // resource steps granted per bit of self-information
  double rho = 1.0;     // decay rate of the global average reward, 1/s
};

// Positive/negative example counts of one concept in one input context.
// A window of 0 keeps cumulative counts (the default, deterministic for
// tests); a positive window keeps only the most recent examples so the
// probability can track drift.
class PartitionStats {
 public:
  PartitionStats() = default;
  explicit PartitionStats(std::size_t window) : window_(window) {}

  void add_positive() { add(true); }
  void add_negative() { add(false); }

  std::int64_t positives() const { return n_pos_; }
  std::int64_t negatives() const { return n_neg_; }
  std::int64_t total() const { return n_pos_ + n_neg_; }
  std::size_t window() const { return window_; }

  // Probability of encountering a positive example. Undefined (throws)
  // until at least one example has been recorded.
  double probability() const;

  // Snapshot support. restore_counts applies to cumulative mode only;
  // windowed stats are rebuilt by replaying window_bits().
  void restore_counts(std::int64_t pos, std::int64_t neg);
  std::string window_bits() const;

 private:
  void add(bool positive);

  std::size_t window_ = 0;
  std::int64_t n_pos_ = 0;
  std::int64_t n_neg_ = 0;
  std::deque<bool> recent_;  // used only when window_ > 0
};

// Self-information of a positive example: -log2(p), in bits.
// Domain: 0 < p <= 1.
double self_information(double p);

// Mean reward, the expected information gain per example: -p*log2(p).
// This, not the raw self-information, is what feeds TD-learning as the
// immediate reward. Maximal at p = 1/e. Domain: 0 < p <= 1.
double mean_reward(double p);

// Extra VM resources awarded to a matching thread: round(beta * bits).
std::int64_t award_resources(double info_bits, double beta);

// The global average reward per time step: a single exponentially decayed
// accumulator shared by every process of the engine, updated whenever any
// immediate reward is received. Its maximization is the engine's whole
// objective.
class GlobalReward {
 public:
  explicit GlobalReward(double rho = 1.0, TimeMs t0 = 0)
      : rho_(rho), t0_(t0) {}

  // Adds an immediate reward at time t: R <- r + R * exp(-rho*(t-t0)).
  // Time must not regress; that is a caller bug in single-threaded mode.
  void update(double r, TimeMs t);

  // Value decayed to time t without recording a reward.
  double peek(TimeMs t) const;

  double value() const { return value_; }
  TimeMs last_update() const { return t0_; }
  double rho() const { return rho_; }

  void restore(double value, TimeMs t0) {
    value_ = value;
    t0_ = t0;
  }

 private:
  double rho_;
  double value_ = 0.0;
  TimeMs t0_;
};

}  // namespace cogent::reward
