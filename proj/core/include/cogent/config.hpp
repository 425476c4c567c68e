// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string>
#include <vector>

#include "cogent/actuator.hpp"
#include "cogent/hierarchy.hpp"
#include "cogent/types.hpp"
#include "cogent/vm.hpp"
#include "cogent/world.hpp"

namespace cogent::config {

// Raw config text: flat sections of key = value lines, order preserved.
// Lines starting with '#' are comments. Values run to end of line, so
// codelet assembly with ';' separators embeds cleanly.
struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* get(const std::string& key) const;
};

std::vector<Section> parse_sections(const std::string& text);

struct SessionParams {
  double duration_s = 60.0;
  std::uint64_t seed = 1;
  TimeMs metrics_resolution = 10;  // ms between (t, R) samples
  int tickets_per_tick = 64;
  TimeMs prune_interval = 1000;
};

// An actuator as configured: its world-side feedback behaviour plus the
// engine-side template (cost model, arity, minimum input sizes).
struct ActuatorConfig {
  std::string name;
  sim::FeedbackRule feedback;
  actuator::CostModel cost;
  int arity = 1;
  std::vector<int> min_input_sizes;
};

// Hand-written concepts injected at session start, so experiments need not
// wait for random search to stumble on detectors.
struct BootstrapConcept {
  std::string name;
  vm::Codelet codelet;
  std::vector<std::string> inputs;  // names of parent concepts/sensors
};

struct BootstrapCopy {
  std::string template_id;
  std::vector<std::string> inputs;
};

// Protocol of the stimulus-response experiment: undisturbed warmup, then a
// strong injected signal repeated with fixed breaks while learning keeps
// running; the response curve is binned relative to each onset and summed
// over repetitions.
struct StimulusSchedule {
  double warmup_s = 50.0;
  TimeMs stimulus_ms = 100;
  TimeMs break_ms = 2000;
  int repetitions = 30;
  TimeMs bin_ms = 10;
  TimeMs period_ms = 100;  // spacing of injected events within the stimulus
  std::string channel = "vision";
  IntVec value;
};

struct RunConfig {
  SessionParams session;
  hierarchy::EngineParams engine;
  std::vector<sim::ChannelSpec> channels;
  std::vector<ActuatorConfig> actuators;
  std::vector<BootstrapConcept> concepts;
  std::vector<BootstrapCopy> copies;
  StimulusSchedule stimulus;

  // Parses and validates; throws std::invalid_argument with the offending
  // section/key on any problem. No simulation starts on a bad config.
  static RunConfig parse(const std::string& text);
  static RunConfig load_file(const std::string& path);

  void validate() const;
};

}  // namespace cogent::config
