// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cogent/codelet_text.hpp"

namespace cogent::config {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
    --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config [" + where + "]: " + what);
}

double to_double(const std::string& where, const std::string& key,
                 const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (...) {
    bad(where, "bad number for " + key + ": '" + v + "'");
  }
}

std::int64_t to_int(const std::string& where, const std::string& key,
                    const std::string& v) {
  std::int64_t value = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || p != v.data() + v.size())
    bad(where, "bad integer for " + key + ": '" + v + "'");
  return value;
}

bool to_bool(const std::string& where, const std::string& key,
             const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  bad(where, "bad bool for " + key + ": '" + v + "'");
}

IntVec to_intvec(const std::string& where, const std::string& key,
                 const std::string& v) {
  IntVec out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    std::size_t comma = v.find(',', pos);
    if (comma == std::string::npos) comma = v.size();
    const std::string tok = trim(v.substr(pos, comma - pos));
    if (!tok.empty())
      out.push_back(static_cast<Word>(to_int(where, key, tok)));
    pos = comma + 1;
  }
  return out;
}

std::vector<int> to_ints(const std::string& where, const std::string& key,
                         const std::string& v) {
  std::vector<int> out;
  for (Word w : to_intvec(where, key, v)) out.push_back(w);
  return out;
}

std::vector<std::string> to_names(const std::string& v) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    std::size_t comma = v.find(',', pos);
    if (comma == std::string::npos) comma = v.size();
    const std::string tok = trim(v.substr(pos, comma - pos));
    if (!tok.empty()) out.push_back(tok);
    pos = comma + 1;
  }
  return out;
}

// Applies every entry of a section through `apply`; unknown keys are
// config errors so typos never fail silently.
template <typename F>
void for_entries(const Section& s, F apply) {
  for (const auto& [key, value] : s.entries) {
    if (!apply(key, value)) bad(s.name, "unknown key: " + key);
  }
}

}  // namespace

const std::string* Section::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::vector<Section> parse_sections(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": unterminated section header");
      Section s;
      s.name = trim(line.substr(1, line.size() - 2));
      if (s.name.empty())
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": empty section name");
      out.push_back(std::move(s));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    if (out.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": entry before any section");
    out.back().entries.emplace_back(trim(line.substr(0, eq)),
                                    trim(line.substr(eq + 1)));
  }
  return out;
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  for (const Section& s : parse_sections(text)) {
    if (s.name == "session") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "duration_s") cfg.session.duration_s = to_double(s.name, k, v);
        else if (k == "seed") cfg.session.seed = static_cast<std::uint64_t>(to_int(s.name, k, v));
        else if (k == "metrics_resolution_ms") cfg.session.metrics_resolution = to_int(s.name, k, v);
        else if (k == "tickets_per_tick") cfg.session.tickets_per_tick = static_cast<int>(to_int(s.name, k, v));
        else if (k == "prune_interval_ms") cfg.session.prune_interval = to_int(s.name, k, v);
        else if (k == "workers") cfg.engine.workers = static_cast<int>(to_int(s.name, k, v));
        else return false;
        return true;
      });
    } else if (s.name == "reward") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "beta") cfg.engine.rew.beta = to_double(s.name, k, v);
        else if (k == "rho") cfg.engine.rew.rho = to_double(s.name, k, v);
        else if (k == "stats_window") cfg.engine.stats_window = static_cast<std::size_t>(to_int(s.name, k, v));
        else return false;
        return true;
      });
    } else if (s.name == "learning") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "alpha") cfg.engine.learn.alpha = to_double(s.name, k, v);
        else if (k == "gamma") cfg.engine.learn.gamma = to_double(s.name, k, v);
        else return false;
        return true;
      });
    } else if (s.name == "actuator") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "alpha") cfg.engine.act.alpha = to_double(s.name, k, v);
        else if (k == "threshold") cfg.engine.act.threshold = to_double(s.name, k, v);
        else if (k == "initial_value") cfg.engine.act.initial_value = to_double(s.name, k, v);
        else if (k == "a_const") cfg.engine.act.a_const = to_double(s.name, k, v);
        else if (k == "settle_delay_ms") cfg.engine.act.settle_delay = to_int(s.name, k, v);
        else if (k == "max_copies") cfg.engine.act.max_copies = static_cast<int>(to_int(s.name, k, v));
        else if (k == "explore_interval_ms") cfg.engine.explore_interval = to_int(s.name, k, v);
        else return false;
        return true;
      });
    } else if (s.name == "scheduler") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "queue_capacity") cfg.engine.queue_capacity = static_cast<std::size_t>(to_int(s.name, k, v));
        else if (k == "ticket_ttl_ms") cfg.engine.ticket_ttl = to_int(s.name, k, v);
        else if (k == "base_resources") cfg.engine.base_resources = to_int(s.name, k, v);
        else if (k == "max_priority") cfg.engine.max_priority = static_cast<int>(to_int(s.name, k, v));
        else if (k == "join_window_ms") cfg.engine.join_window = to_int(s.name, k, v);
        else return false;
        return true;
      });
    } else if (s.name == "prune") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "grace_period_ms") cfg.engine.grace_period = to_int(s.name, k, v);
        else if (k == "value_threshold") cfg.engine.value_threshold = to_double(s.name, k, v);
        else if (k == "usage_threshold") cfg.engine.usage_threshold = to_double(s.name, k, v);
        else return false;
        return true;
      });
    } else if (s.name == "generation") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "rate") cfg.engine.generation_rate = to_double(s.name, k, v);
        else if (k == "seed") cfg.engine.gen.seed = static_cast<std::uint64_t>(to_int(s.name, k, v));
        else if (k == "min_length") cfg.engine.gen.min_length = static_cast<int>(to_int(s.name, k, v));
        else if (k == "max_length") cfg.engine.gen.max_length = static_cast<int>(to_int(s.name, k, v));
        else if (k == "min_arity") cfg.engine.gen.min_arity = static_cast<int>(to_int(s.name, k, v));
        else if (k == "max_arity") cfg.engine.gen.max_arity = static_cast<int>(to_int(s.name, k, v));
        else return false;
        return true;
      });
    } else if (s.name.starts_with("channel.")) {
      sim::ChannelSpec ch;
      ch.name = s.name.substr(8);
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "width") ch.width = static_cast<int>(to_int(s.name, k, v));
        else if (k == "background_rate") ch.background_rate = to_double(s.name, k, v);
        else if (k == "min_value") ch.min_value = static_cast<Word>(to_int(s.name, k, v));
        else if (k == "max_value") ch.max_value = static_cast<Word>(to_int(s.name, k, v));
        else return false;
        return true;
      });
      cfg.channels.push_back(std::move(ch));
    } else if (s.name.starts_with("actuator.")) {
      ActuatorConfig a;
      a.name = s.name.substr(9);
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "feedback") a.feedback.has_feedback = to_bool(s.name, k, v);
        else if (k == "target") a.feedback.target_channel = v;
        else if (k == "delay_ms") a.feedback.delay = to_int(s.name, k, v);
        else if (k == "echo_magnitude") a.feedback.echo_magnitude = static_cast<Word>(to_int(s.name, k, v));
        else if (k == "echo_marker") a.feedback.echo_marker = static_cast<Word>(to_int(s.name, k, v));
        else if (k == "echo_count") a.feedback.echo_count = static_cast<int>(to_int(s.name, k, v));
        else if (k == "cost_base") a.cost.base = to_double(s.name, k, v);
        else if (k == "cost_per_magnitude") a.cost.per_magnitude = to_double(s.name, k, v);
        else if (k == "arity") a.arity = static_cast<int>(to_int(s.name, k, v));
        else if (k == "min_input_sizes") a.min_input_sizes = to_ints(s.name, k, v);
        else return false;
        return true;
      });
      cfg.actuators.push_back(std::move(a));
    } else if (s.name.starts_with("concept.")) {
      BootstrapConcept c;
      c.name = s.name.substr(8);
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "codelet") c.codelet = vm::parse_codelet(v);
        else if (k == "inputs") c.inputs = to_names(v);
        else return false;
        return true;
      });
      cfg.concepts.push_back(std::move(c));
    } else if (s.name.starts_with("copy.")) {
      BootstrapCopy c;
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "template") c.template_id = v;
        else if (k == "inputs") c.inputs = to_names(v);
        else return false;
        return true;
      });
      cfg.copies.push_back(std::move(c));
    } else if (s.name == "stimulus") {
      for_entries(s, [&](const std::string& k, const std::string& v) {
        if (k == "warmup_s") cfg.stimulus.warmup_s = to_double(s.name, k, v);
        else if (k == "stimulus_ms") cfg.stimulus.stimulus_ms = to_int(s.name, k, v);
        else if (k == "break_ms") cfg.stimulus.break_ms = to_int(s.name, k, v);
        else if (k == "repetitions") cfg.stimulus.repetitions = static_cast<int>(to_int(s.name, k, v));
        else if (k == "bin_ms") cfg.stimulus.bin_ms = to_int(s.name, k, v);
        else if (k == "period_ms") cfg.stimulus.period_ms = to_int(s.name, k, v);
        else if (k == "channel") cfg.stimulus.channel = v;
        else if (k == "value") cfg.stimulus.value = to_intvec(s.name, k, v);
        else return false;
        return true;
      });
    } else {
      bad(s.name, "unknown section");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void RunConfig::validate() const {
  const auto check = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("config: " + what);
  };
  check(session.duration_s >= 0.0, "session.duration_s must be >= 0");
  check(session.metrics_resolution > 0, "metrics_resolution_ms must be > 0");
  check(session.tickets_per_tick > 0, "tickets_per_tick must be > 0");
  check(session.prune_interval > 0, "prune_interval_ms must be > 0");
  check(engine.workers >= 1, "workers must be >= 1");
  check(engine.rew.beta > 0.0, "reward.beta must be > 0");
  check(engine.rew.rho > 0.0, "reward.rho must be > 0");
  check(engine.learn.alpha > 0.0 && engine.learn.alpha <= 1.0,
        "learning.alpha must be in (0,1]");
  check(engine.learn.gamma >= 0.0 && engine.learn.gamma < 1.0,
        "learning.gamma must be in [0,1)");
  check(engine.act.alpha > 0.0 && engine.act.alpha <= 1.0,
        "actuator.alpha must be in (0,1]");
  check(engine.act.threshold > 0.0, "actuator.threshold must be > 0");
  check(engine.act.initial_value > engine.act.threshold,
        "actuator.initial_value must exceed the removal threshold");
  check(engine.act.a_const > 0.0, "actuator.a_const must be > 0");
  check(engine.act.settle_delay > 0, "actuator.settle_delay_ms must be > 0");
  check(engine.act.max_copies >= 1, "actuator.max_copies must be >= 1");
  check(engine.queue_capacity > 0, "scheduler.queue_capacity must be > 0");
  check(engine.ticket_ttl > 0, "scheduler.ticket_ttl_ms must be > 0");
  check(engine.base_resources > 0, "scheduler.base_resources must be > 0");
  check(engine.max_priority >= 1, "scheduler.max_priority must be >= 1");
  check(engine.join_window >= 0, "scheduler.join_window_ms must be >= 0");
  check(engine.grace_period >= 0, "prune.grace_period_ms must be >= 0");
  check(engine.generation_rate >= 0.0, "generation.rate must be >= 0");
  check(engine.gen.min_length >= 1 &&
            engine.gen.max_length >= engine.gen.min_length,
        "generation length bounds invalid");
  check(engine.gen.min_arity >= 1 &&
            engine.gen.max_arity >= engine.gen.min_arity,
        "generation arity bounds invalid");
  check(engine.explore_interval > 0, "explore_interval_ms must be > 0");

  for (const sim::ChannelSpec& ch : channels) {
    check(ch.width >= 1, "channel " + ch.name + ": width must be >= 1");
    check(ch.background_rate >= 0.0 && ch.background_rate <= 1.0,
          "channel " + ch.name + ": background_rate must be in [0,1]");
    check(ch.max_value >= ch.min_value,
          "channel " + ch.name + ": max_value < min_value");
    check(!ch.name.empty() && ch.name.find(' ') == std::string::npos,
          "channel names must be non-empty and space-free");
  }
  for (const ActuatorConfig& a : actuators) {
    check(a.arity >= 1, "actuator " + a.name + ": arity must be >= 1");
    check(a.cost.base > 0.0, "actuator " + a.name + ": cost_base must be > 0");
    check(a.cost.per_magnitude >= 0.0,
          "actuator " + a.name + ": cost_per_magnitude must be >= 0");
    if (a.feedback.has_feedback) {
      check(!a.feedback.target_channel.empty(),
            "actuator " + a.name + ": feedback needs a target channel");
      check(a.feedback.delay > 0,
            "actuator " + a.name + ": delay_ms must be > 0");
      check(a.feedback.echo_count >= 1,
            "actuator " + a.name + ": echo_count must be >= 1");
    }
  }
  check(stimulus.warmup_s > 0.0, "stimulus.warmup_s must be > 0");
  check(stimulus.stimulus_ms > 0, "stimulus.stimulus_ms must be > 0");
  check(stimulus.break_ms > 0, "stimulus.break_ms must be > 0");
  check(stimulus.repetitions >= 1, "stimulus.repetitions must be >= 1");
  check(stimulus.bin_ms > 0, "stimulus.bin_ms must be > 0");
  check(stimulus.period_ms > 0, "stimulus.period_ms must be > 0");
}

}  // namespace cogent::config
