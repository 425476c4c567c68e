// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cogent/codelet_text.hpp"

namespace cogent::hierarchy {

// Snapshot save/load needs raw access to the engine internals; everything
// else goes through the public interface.
struct SnapshotAccess {
  static const std::vector<Concept>& concepts(const Engine& e) {
    return e.concepts_;
  }
  static std::vector<Concept>& concepts(Engine& e) { return e.concepts_; }
  static std::vector<ActuatorTemplate>& templates(Engine& e) {
    return e.templates_;
  }
  static const std::vector<ActuatorTemplate>& templates(const Engine& e) {
    return e.templates_;
  }
  static std::uint64_t& next_copy_id(Engine& e) { return e.next_copy_id_; }
  static std::uint64_t next_copy_id(const Engine& e) {
    return e.next_copy_id_;
  }
  static int& live_activations(Engine& e) { return e.live_activations_; }
  static reward::GlobalReward& global(Engine& e) { return e.global_; }
  static EngineParams& params(Engine& e) { return e.params_; }
  static std::vector<std::pair<std::string, std::int64_t>>& copy_counts(
      Engine& e) {
    return e.copy_counts_;
  }
};

}  // namespace cogent::hierarchy

namespace cogent::snapshot {

using hierarchy::Concept;
using hierarchy::ConceptKind;
using hierarchy::Engine;
using hierarchy::SnapshotAccess;

namespace {

constexpr const char* kHeader = "cogent-hierarchy v1";

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Splits on single spaces. With max_split >= 0 the remainder of the line
// beyond max_split fields stays as one field (codelet assembly has spaces).
std::vector<std::string> fields_of(const std::string& line,
                                   int max_split = -1) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (max_split >= 0 && static_cast<int>(out.size()) == max_split) {
      out.push_back(line.substr(pos));
      return out;
    }
    std::size_t sp = line.find(' ', pos);
    if (sp == std::string::npos) sp = line.size();
    out.push_back(line.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

[[noreturn]] void bad_line(const std::string& line) {
  throw std::invalid_argument("snapshot: bad line: " + line);
}

double parse_num(const std::string& tok, const std::string& line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) bad_line(line);
    return v;
  } catch (const std::logic_error&) {
    bad_line(line);
  }
}

std::int64_t parse_i64(const std::string& tok, const std::string& line) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) bad_line(line);
    return v;
  } catch (const std::logic_error&) {
    bad_line(line);
  }
}

std::vector<int> parse_int_list(const std::string& tok,
                                const std::string& line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    std::size_t comma = tok.find(',', pos);
    if (comma == std::string::npos) comma = tok.size();
    if (comma > pos)
      out.push_back(
          static_cast<int>(parse_i64(tok.substr(pos, comma - pos), line)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string save(const Engine& engine, TimeMs now) {
  const auto& concepts = SnapshotAccess::concepts(engine);
  std::string out = kHeader;
  out += "\ntime " + std::to_string(now);
  out += "\nreward " + num(engine.global_reward().value()) + " " +
         std::to_string(engine.global_reward().last_update());
  out += "\ncopyseq " + std::to_string(SnapshotAccess::next_copy_id(engine));
  out += "\nwindow " + std::to_string(engine.params().stats_window);

  for (const hierarchy::ActuatorTemplate& t :
       SnapshotAccess::templates(engine)) {
    out += "\ntemplate " + t.id + " " + std::to_string(t.arity) + " ";
    for (std::size_t i = 0; i < t.min_input_sizes.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t.min_input_sizes[i]);
    }
    out += " " + num(t.cost.base) + " " + num(t.cost.per_magnitude);
  }

  for (const Concept& c : concepts) {
    if (!c.alive) {
      out += "\ndead " + std::to_string(c.id);
      continue;
    }
    switch (c.kind) {
      case ConceptKind::kSensor:
        out += "\nconcept " + std::to_string(c.id) + " S " + c.name + " " +
               c.channel + " " + std::to_string(c.sensor_width) + " " +
               std::to_string(c.created_at) + " " +
               std::to_string(c.executions) + " " +
               std::to_string(c.stats.positives()) + " " +
               std::to_string(c.stats.negatives());
        break;
      case ConceptKind::kRegular:
        out += "\nconcept " + std::to_string(c.id) + " R " + c.name + " " +
               std::to_string(c.created_at) + " " +
               std::to_string(c.executions) + " " +
               std::to_string(c.stats.positives()) + " " +
               std::to_string(c.stats.negatives()) + " " +
               vm::print_codelet(c.codelet, ';');
        break;
      case ConceptKind::kActuator:
        out += "\nconcept " + std::to_string(c.id) + " A " + c.name + " " +
               c.copy->template_id() + " " +
               std::to_string(c.copy->copy_id()) + " " + num(c.copy->value()) +
               " " + std::to_string(c.created_at) + " " +
               std::to_string(c.executions);
        break;
    }
    if (c.stats.window() > 0 && c.stats.total() > 0)
      out += "\nrecent " + std::to_string(c.id) + " " + c.stats.window_bits();
    if (c.copy) {
      for (const actuator::PendingActivation& p : c.copy->pending())
        out += "\npending " + std::to_string(c.id) + " " +
               std::to_string(p.activated_at) + " " + num(p.cost_bits) + " " +
               num(p.reward_before);
    }
  }

  for (const Concept& c : concepts) {
    if (!c.alive) continue;
    for (const hierarchy::Action& a : c.actions)
      out += "\nlink " + std::to_string(c.id) + " " + std::to_string(a.child) +
             " " + std::to_string(a.slot) + " " + num(a.q);
  }
  out += "\nend\n";
  return out;
}

TimeMs saved_time(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::invalid_argument("snapshot: bad header");
  while (std::getline(in, line)) {
    const auto f = fields_of(line);
    if (f.size() == 2 && f[0] == "time") return parse_i64(f[1], line);
  }
  throw std::invalid_argument("snapshot: no time record");
}

std::unique_ptr<Engine> load(const std::string& text,
                             hierarchy::EngineParams params,
                             std::uint64_t seed) {
  auto engine = std::make_unique<Engine>(params, seed);
  auto& concepts = SnapshotAccess::concepts(*engine);
  auto& templates = SnapshotAccess::templates(*engine);

  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::invalid_argument("snapshot: bad header");

  bool saw_end = false;
  const auto slot_of = [&](std::int64_t raw) -> Concept& {
    const auto id = static_cast<std::uint32_t>(raw);
    if (id >= concepts.size()) concepts.resize(id + 1);
    concepts[id].id = id;
    return concepts[id];
  };
  const auto alive_of = [&](std::int64_t raw,
                            const std::string& where) -> Concept& {
    const auto id = static_cast<std::uint32_t>(raw);
    if (id >= concepts.size() || !concepts[id].alive) bad_line(where);
    return concepts[id];
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "end") {
      saw_end = true;
      break;
    }
    const auto head = fields_of(line);
    const std::string& tag = head[0];

    if (tag == "time") {
      if (head.size() != 2) bad_line(line);
      // informational only; the caller decides where its clock resumes
    } else if (tag == "reward") {
      if (head.size() != 3) bad_line(line);
      SnapshotAccess::global(*engine).restore(parse_num(head[1], line),
                                              parse_i64(head[2], line));
    } else if (tag == "copyseq") {
      if (head.size() != 2) bad_line(line);
      SnapshotAccess::next_copy_id(*engine) =
          static_cast<std::uint64_t>(parse_i64(head[1], line));
    } else if (tag == "window") {
      // The statistics mode travels with the snapshot so a standalone load
      // reconstructs it faithfully, whatever the caller's params say.
      if (head.size() != 2) bad_line(line);
      SnapshotAccess::params(*engine).stats_window =
          static_cast<std::size_t>(parse_i64(head[1], line));
    } else if (tag == "template") {
      if (head.size() != 6) bad_line(line);
      hierarchy::ActuatorTemplate t;
      t.id = head[1];
      t.arity = static_cast<int>(parse_i64(head[2], line));
      t.min_input_sizes = parse_int_list(head[3], line);
      t.cost.base = parse_num(head[4], line);
      t.cost.per_magnitude = parse_num(head[5], line);
      templates.push_back(std::move(t));
      SnapshotAccess::copy_counts(*engine).emplace_back(templates.back().id,
                                                        0);
    } else if (tag == "dead") {
      if (head.size() != 2) bad_line(line);
      slot_of(parse_i64(head[1], line)).alive = false;
    } else if (tag == "concept") {
      if (head.size() < 4) bad_line(line);
      Concept& c = slot_of(parse_i64(head[1], line));
      c.alive = true;
      c.stats = reward::PartitionStats(engine->params().stats_window);
      if (head[2] == "S") {
        if (head.size() != 10) bad_line(line);
        c.kind = ConceptKind::kSensor;
        c.name = head[3];
        c.channel = head[4];
        c.sensor_width = static_cast<int>(parse_i64(head[5], line));
        c.created_at = parse_i64(head[6], line);
        c.executions = parse_i64(head[7], line);
        if (engine->params().stats_window == 0)
          c.stats.restore_counts(parse_i64(head[8], line),
                                 parse_i64(head[9], line));
      } else if (head[2] == "R") {
        const auto f = fields_of(line, 8);
        if (f.size() != 9) bad_line(line);
        c.kind = ConceptKind::kRegular;
        c.name = f[3];
        c.created_at = parse_i64(f[4], line);
        c.executions = parse_i64(f[5], line);
        if (engine->params().stats_window == 0)
          c.stats.restore_counts(parse_i64(f[6], line),
                                 parse_i64(f[7], line));
        c.codelet = vm::parse_codelet(f[8]);
        c.inputs.resize(static_cast<std::size_t>(c.codelet.arity));
      } else if (head[2] == "A") {
        if (head.size() != 9) bad_line(line);
        c.kind = ConceptKind::kActuator;
        c.name = head[3];
        const hierarchy::ActuatorTemplate* tpl = nullptr;
        for (const hierarchy::ActuatorTemplate& t : templates)
          if (t.id == head[4]) tpl = &t;
        if (!tpl) bad_line(line);
        c.copy = std::make_unique<actuator::ActuatorCopy>(
            head[4], static_cast<std::uint64_t>(parse_i64(head[5], line)),
            params.act);
        c.copy->restore(parse_num(head[6], line));
        c.created_at = parse_i64(head[7], line);
        c.executions = parse_i64(head[8], line);
        c.inputs.resize(static_cast<std::size_t>(tpl->arity));
        for (auto& [tid, n] : SnapshotAccess::copy_counts(*engine))
          if (tid == head[4]) ++n;
      } else {
        bad_line(line);
      }
    } else if (tag == "recent") {
      if (head.size() != 3) bad_line(line);
      Concept& c = alive_of(parse_i64(head[1], line), line);
      if (engine->params().stats_window > 0) {
        for (char bit : head[2]) {
          if (bit == '1') c.stats.add_positive();
          else if (bit == '0') c.stats.add_negative();
          else bad_line(line);
        }
      }
    } else if (tag == "pending") {
      if (head.size() != 5) bad_line(line);
      Concept& c = alive_of(parse_i64(head[1], line), line);
      if (!c.copy) bad_line(line);
      c.copy->restore_pending(actuator::PendingActivation{
          .activated_at = parse_i64(head[2], line),
          .cost_bits = parse_num(head[3], line),
          .reward_before = parse_num(head[4], line),
      });
      SnapshotAccess::live_activations(*engine) += 1;
    } else if (tag == "link") {
      if (head.size() != 5) bad_line(line);
      Concept& parent = alive_of(parse_i64(head[1], line), line);
      Concept& child = alive_of(parse_i64(head[2], line), line);
      const int slot = static_cast<int>(parse_i64(head[3], line));
      if (slot < 0 || slot >= child.arity()) bad_line(line);
      parent.actions.push_back(hierarchy::Action{
          child.id, slot, parse_num(head[4], line)});
      child.inputs[static_cast<std::size_t>(slot)].parent = parent.id;
    } else {
      bad_line(line);
    }
  }
  if (!saw_end) throw std::invalid_argument("snapshot: truncated (no end)");
  return engine;
}

void save_file(const Engine& engine, TimeMs now, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << save(engine, now);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::unique_ptr<Engine> load_file(const std::string& path,
                                  hierarchy::EngineParams params,
                                  std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open snapshot: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str(), std::move(params), seed);
}

}  // namespace cogent::snapshot
