// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/reward.hpp"

#include <cmath>
#include <stdexcept>

namespace cogent::reward {

void PartitionStats::add(bool positive) {
  (positive ? n_pos_ : n_neg_) += 1;
  if (window_ == 0) return;
  recent_.push_back(positive);
  if (recent_.size() > window_) {
    (recent_.front() ? n_pos_ : n_neg_) -= 1;
    recent_.pop_front();
  }
}

double PartitionStats::probability() const {
  const std::int64_t n = total();
  if (n == 0)
    throw std::domain_error("probability undefined with no examples");
  return static_cast<double>(n_pos_) / static_cast<double>(n);
}

void PartitionStats::restore_counts(std::int64_t pos, std::int64_t neg) {
  if (window_ != 0)
    throw std::logic_error("restore_counts is for cumulative stats");
  n_pos_ = pos;
  n_neg_ = neg;
}

std::string PartitionStats::window_bits() const {
  std::string bits;
  bits.reserve(recent_.size());
  for (bool b : recent_) bits.push_back(b ? '1' : '0');
  return bits;
}

double self_information(double p) {
  if (!(p > 0.0) || p > 1.0)
    throw std::domain_error("self_information: p outside (0,1]");
  return -std::log2(p);
}

double mean_reward(double p) {
  if (!(p > 0.0) || p > 1.0)
    throw std::domain_error("mean_reward: p outside (0,1]");
  return -p * std::log2(p);
}

std::int64_t award_resources(double info_bits, double beta) {
  if (info_bits < 0.0)
    throw std::domain_error("award_resources: negative information");
  return std::llround(beta * info_bits);
}

void GlobalReward::update(double r, TimeMs t) {
  if (t < t0_)
    throw std::logic_error("GlobalReward: time went backwards");
  value_ = r + value_ * std::exp(-rho_ * to_seconds(t - t0_));
  t0_ = t;
}

double GlobalReward::peek(TimeMs t) const {
  if (t <= t0_) return value_;
  return value_ * std::exp(-rho_ * to_seconds(t - t0_));
}

}  // namespace cogent::reward
