// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cogent/rng.hpp"
#include "cogent/types.hpp"

namespace cogent::sim {

struct SensorEvent {
  TimeMs time = 0;
  std::string channel;
  IntVec value;

  bool operator==(const SensorEvent&) const = default;
};

// A sensor channel carrying sparse random background patterns: each
// millisecond, with probability rate, one vector of `width` values drawn
// uniformly from [min_value, max_value].
struct ChannelSpec {
  std::string name;
  int width = 2;
  double background_rate = 0.0;  // events per ms
  Word min_value = 0;
  Word max_value = 9;
};

// What an actuation does to the world. A feedback actuator reflects back
// into a sensor channel after `delay` ms -- the arm crossing the visual
// field; a no-feedback actuator changes nothing the sensors can see.
struct FeedbackRule {
  bool has_feedback = false;
  std::string target_channel;
  TimeMs delay = 300;
  Word echo_magnitude = 100;  // first element of the echo vector
  Word echo_marker = 0;       // second element: distinguishes echo patterns
  int echo_count = 3;         // events delivered per activation
};

struct ActuatorSpec {
  std::string name;
  FeedbackRule feedback;
};

// Discrete-time simulated environment: named sensor channels, named
// actuators with configurable actuation-to-sensation delays, a seeded
// background generator and support for additive software stimulation.
// Identical seeds yield identical event traces.
class SimWorld {
 public:
  explicit SimWorld(std::uint64_t seed) : rng_(Rng(seed).fork(7)) {}

  void add_channel(ChannelSpec spec);
  void add_actuator(ActuatorSpec spec);

  bool has_channel(const std::string& name) const;
  const ChannelSpec* channel(const std::string& name) const;

  TimeMs now() const { return now_; }

  // Advances the clock by dt ms (1 ms at a time) and returns every event
  // whose delivery time has arrived, in delivery order.
  std::vector<SensorEvent> step(TimeMs dt);

  // Issues a physical command. Depending on the actuator's rule this
  // schedules sensor echoes at `at` + delay, or does nothing observable.
  // Unknown actuator ids throw std::invalid_argument.
  void apply_actuation(const std::string& actuator_id,
                       std::span<const IntVec> inputs, TimeMs at);

  // Additive overlay on a sensor channel: injects `value` every period_ms
  // from `from` (inclusive) to `until` (exclusive), on top of whatever the
  // background produces.
  void schedule_injection(const std::string& channel, const IntVec& value,
                          TimeMs from, TimeMs until, TimeMs period_ms);

  // Event counts for conservation audits: every scheduled event is either
  // still pending or was delivered, never lost or duplicated.
  std::int64_t events_delivered() const { return events_delivered_; }
  std::int64_t events_scheduled() const { return events_scheduled_; }
  std::int64_t scheduled_delivered() const { return scheduled_delivered_; }
  std::size_t pending_count() const { return pending_.size(); }

 private:
  void emit_background(std::vector<SensorEvent>& out);
  void emit_due(std::vector<SensorEvent>& out);

  Rng rng_;
  TimeMs now_ = 0;
  std::vector<ChannelSpec> channels_;
  std::vector<ActuatorSpec> actuators_;
  // Scheduled deliveries ordered by (time, insertion); multimap keeps the
  // order deterministic.
  std::multimap<TimeMs, SensorEvent> pending_;
  std::int64_t events_delivered_ = 0;
  std::int64_t events_scheduled_ = 0;
  std::int64_t scheduled_delivered_ = 0;
};

}  // namespace cogent::sim
