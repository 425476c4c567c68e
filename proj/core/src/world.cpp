// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/world.hpp"

#include <stdexcept>

namespace cogent::sim {

void SimWorld::add_channel(ChannelSpec spec) {
  if (spec.width < 1)
    throw std::invalid_argument("channel width must be >= 1");
  if (has_channel(spec.name))
    throw std::invalid_argument("duplicate channel: " + spec.name);
  channels_.push_back(std::move(spec));
}

void SimWorld::add_actuator(ActuatorSpec spec) {
  if (spec.feedback.has_feedback && !has_channel(spec.feedback.target_channel))
    throw std::invalid_argument("feedback targets unknown channel: " +
                                spec.feedback.target_channel);
  actuators_.push_back(std::move(spec));
}

bool SimWorld::has_channel(const std::string& name) const {
  return channel(name) != nullptr;
}

const ChannelSpec* SimWorld::channel(const std::string& name) const {
  for (const ChannelSpec& c : channels_)
    if (c.name == name) return &c;
  return nullptr;
}

void SimWorld::emit_background(std::vector<SensorEvent>& out) {
  for (const ChannelSpec& c : channels_) {
    if (c.background_rate <= 0.0) continue;
    if (rng_.unit() >= c.background_rate) continue;
    SensorEvent ev;
    ev.time = now_;
    ev.channel = c.name;
    ev.value.reserve(static_cast<std::size_t>(c.width));
    const auto span =
        static_cast<std::uint64_t>(c.max_value - c.min_value) + 1;
    for (int i = 0; i < c.width; ++i)
      ev.value.push_back(c.min_value + static_cast<Word>(rng_.below(span)));
    events_delivered_ += 1;
    out.push_back(std::move(ev));
  }
}

void SimWorld::emit_due(std::vector<SensorEvent>& out) {
  while (!pending_.empty() && pending_.begin()->first <= now_) {
    SensorEvent ev = pending_.begin()->second;
    pending_.erase(pending_.begin());
    ev.time = now_;
    events_delivered_ += 1;
    scheduled_delivered_ += 1;
    out.push_back(std::move(ev));
  }
}

std::vector<SensorEvent> SimWorld::step(TimeMs dt) {
  if (dt <= 0) throw std::invalid_argument("step needs dt > 0");
  std::vector<SensorEvent> out;
  for (TimeMs i = 0; i < dt; ++i) {
    now_ += 1;
    emit_background(out);
    emit_due(out);
  }
  return out;
}

void SimWorld::apply_actuation(const std::string& actuator_id,
                               std::span<const IntVec> inputs, TimeMs at) {
  const ActuatorSpec* spec = nullptr;
  for (const ActuatorSpec& a : actuators_)
    if (a.name == actuator_id) spec = &a;
  if (!spec)
    throw std::invalid_argument("unknown actuator: " + actuator_id);
  if (!spec->feedback.has_feedback) return;  // moved outside the visual field

  const FeedbackRule& rule = spec->feedback;
  const ChannelSpec* target = channel(rule.target_channel);
  SensorEvent echo;
  echo.channel = rule.target_channel;
  echo.value.assign(static_cast<std::size_t>(target->width), 0);
  echo.value[0] = rule.echo_magnitude;
  if (target->width > 1) echo.value[1] = rule.echo_marker;
  (void)inputs;  // echo shape is fixed per actuator in this world

  for (int i = 0; i < rule.echo_count; ++i) {
    pending_.emplace(at + rule.delay, echo);
    events_scheduled_ += 1;
  }
}

void SimWorld::schedule_injection(const std::string& channel_name,
                                  const IntVec& value, TimeMs from,
                                  TimeMs until, TimeMs period_ms) {
  if (!has_channel(channel_name))
    throw std::invalid_argument("injection targets unknown channel: " +
                                channel_name);
  if (period_ms <= 0) throw std::invalid_argument("injection period must be > 0");
  for (TimeMs t = from; t < until; t += period_ms) {
    SensorEvent ev;
    ev.channel = channel_name;
    ev.value = value;
    pending_.emplace(t, std::move(ev));
    events_scheduled_ += 1;
  }
}

}  // namespace cogent::sim
