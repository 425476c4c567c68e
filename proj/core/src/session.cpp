// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/session.hpp"

#include <cmath>
#include <stdexcept>

namespace cogent::sim {

namespace {

TimeMs seconds_to_ms(double s) {
  return static_cast<TimeMs>(std::llround(s * 1000.0));
}

}  // namespace

Session::Session(const config::RunConfig& cfg)
    : cfg_(cfg), world_(cfg.session.seed) {
  for (const ChannelSpec& ch : cfg_.channels) world_.add_channel(ch);
  for (const config::ActuatorConfig& a : cfg_.actuators)
    world_.add_actuator(ActuatorSpec{a.name, a.feedback});

  engine_ = std::make_unique<hierarchy::Engine>(cfg_.engine, cfg_.session.seed);
  engine_->set_actuation_sink(
      [this](const std::string& id, std::span<const IntVec> inputs,
             TimeMs now) { world_.apply_actuation(id, inputs, now); });
  engine_->set_actuation_logger([this](const hierarchy::ActuationRecord& r) {
    actuation_rows_.push_back(r);
  });

  // One root concept per channel; bootstrap concepts link up by name.
  for (const ChannelSpec& ch : cfg_.channels)
    engine_->add_sensor(ch.name, ch.name, ch.width);
  for (const config::ActuatorConfig& a : cfg_.actuators)
    engine_->add_template(hierarchy::ActuatorTemplate{
        a.name, a.arity, a.min_input_sizes, a.cost});

  const auto resolve = [this](const std::string& name) {
    const auto id = engine_->find_by_name(name);
    if (!id)
      throw std::invalid_argument("bootstrap references unknown concept: " +
                                  name);
    return *id;
  };
  for (const config::BootstrapConcept& c : cfg_.concepts) {
    std::vector<hierarchy::ConceptId> parents;
    parents.reserve(c.inputs.size());
    for (const std::string& in : c.inputs) parents.push_back(resolve(in));
    engine_->integrate_regular(c.name, c.codelet, parents, 0);
  }
  for (const config::BootstrapCopy& c : cfg_.copies) {
    std::vector<hierarchy::ConceptId> parents;
    parents.reserve(c.inputs.size());
    for (const std::string& in : c.inputs) parents.push_back(resolve(in));
    engine_->integrate_actuator_copy(c.template_id, parents, 0);
  }
}

void Session::run_until(TimeMs until) {
  while (world_.now() < until) {
    const std::vector<SensorEvent> events = world_.step(1);
    const TimeMs now = world_.now();
    for (const SensorEvent& ev : events)
      engine_->on_sensor_event(ev.channel, ev.value, now);
    engine_->drain(now, cfg_.session.tickets_per_tick);
    engine_->settle_actuators(now);
    engine_->run_generation(now);
    engine_->run_exploration(now);
    if (now % cfg_.session.prune_interval == 0) engine_->prune(now);
    if (now % cfg_.session.metrics_resolution == 0)
      metrics_.samples.emplace_back(now, engine_->global_reward().peek(now));
  }
}

SessionResult run_session(const config::RunConfig& cfg) {
  Session session(cfg);
  session.run_until(seconds_to_ms(cfg.session.duration_s));
  return SessionResult{session.metrics(), session.actuations()};
}

Fig3Result fig3_experiment(const config::RunConfig& cfg) {
  const config::StimulusSchedule& sched = cfg.stimulus;
  const TimeMs resolution = cfg.session.metrics_resolution;
  if (sched.bin_ms % resolution != 0)
    throw std::invalid_argument(
        "stimulus bin width must be a multiple of the metrics resolution");
  const TimeMs warmup = seconds_to_ms(sched.warmup_s);
  const TimeMs rep_len = sched.stimulus_ms + sched.break_ms;
  if (warmup % resolution != 0 || rep_len % resolution != 0)
    throw std::invalid_argument(
        "stimulus onsets must align with the metrics resolution");
  if (sched.value.empty())
    throw std::invalid_argument("stimulus value must be non-empty");

  Session session(cfg);
  if (!session.world().has_channel(sched.channel))
    throw std::invalid_argument("stimulus targets unknown channel: " +
                                sched.channel);

  // Schedule every repetition up front; injections overlay the background.
  for (int rep = 0; rep < sched.repetitions; ++rep) {
    const TimeMs onset = warmup + rep * rep_len;
    session.world().schedule_injection(sched.channel, sched.value, onset,
                                       onset + sched.stimulus_ms,
                                       sched.period_ms);
  }
  const TimeMs total = warmup + sched.repetitions * rep_len;
  session.run_until(total);

  // Bin the sampled reward level relative to each onset and sum over
  // repetitions. Samples arrive every `resolution` ms, so index lookups
  // are exact.
  const MetricsLog& log = session.metrics();
  const auto sample_at = [&](TimeMs t) {
    const std::size_t index = static_cast<std::size_t>(t / resolution);
    // samples[0] is at t = 0 only if 0 % resolution == 0; run_until samples
    // at every multiple of the resolution starting at `resolution`.
    if (index == 0 || index > log.samples.size()) return 0.0;
    return log.samples[index - 1].second;
  };

  Fig3Result result;
  result.curve.bin_ms = sched.bin_ms;
  result.curve.sums.assign(static_cast<std::size_t>(rep_len / sched.bin_ms),
                           0.0);
  for (int rep = 0; rep < sched.repetitions; ++rep) {
    const TimeMs onset = warmup + rep * rep_len;
    for (std::size_t b = 0; b < result.curve.sums.size(); ++b)
      result.curve.sums[b] +=
          sample_at(onset + static_cast<TimeMs>(b) * sched.bin_ms);
  }
  result.peak_delay_ms = result.curve.peak_delay();
  result.metrics = log;
  return result;
}

}  // namespace cogent::sim
