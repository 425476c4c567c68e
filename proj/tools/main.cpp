// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
//
// Command-line front end: run learning sessions, reproduce the
// stimulus-response experiment, fuzz the interpreter, inspect snapshots.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cogent/codelet_text.hpp"
#include "cogent/config.hpp"
#include "cogent/metrics.hpp"
#include "cogent/session.hpp"
#include "cogent/snapshot.hpp"
#include "cogent/vm.hpp"

namespace {

namespace fs = std::filesystem;
using cogent::Rng;
using cogent::TimeMs;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<double> duration_s;
  std::optional<int> workers;
};

cogent::config::RunConfig load_config(const CommonOpts& opts) {
  auto cfg = cogent::config::RunConfig::load_file(opts.config_path);
  if (opts.seed) cfg.session.seed = *opts.seed;
  if (opts.duration_s) cfg.session.duration_s = *opts.duration_s;
  if (opts.workers) cfg.engine.workers = *opts.workers;
  cfg.validate();
  return cfg;
}

int cmd_run(const CommonOpts& opts) {
  const auto cfg = load_config(opts);
  fs::create_directories(opts.out_dir);

  cogent::sim::Session session(cfg);
  const auto duration =
      static_cast<TimeMs>(std::llround(cfg.session.duration_s * 1000.0));
  session.run_until(duration);

  cogent::sim::emit_metrics(session.metrics(),
                            (fs::path(opts.out_dir) / "metrics.csv").string());
  cogent::sim::emit_actuations(
      session.actuations(),
      (fs::path(opts.out_dir) / "actuations.csv").string());
  cogent::snapshot::save_file(
      session.engine(), session.now(),
      (fs::path(opts.out_dir) / "snapshot.txt").string());

  std::cout << "session: " << cfg.session.duration_s << " s simulated, "
            << session.metrics().samples.size() << " samples, R_end="
            << session.engine().global_reward().peek(session.now())
            << ", concepts=" << session.engine().concept_count() << "\n";
  std::cout << "wrote " << opts.out_dir
            << "/{metrics.csv,actuations.csv,snapshot.txt}\n";
  return 0;
}

int cmd_fig3(const CommonOpts& opts) {
  const auto cfg = load_config(opts);
  fs::create_directories(opts.out_dir);

  const auto result = cogent::sim::fig3_experiment(cfg);
  cogent::sim::emit_curve(result.curve,
                          (fs::path(opts.out_dir) / "response_curve.csv").string());
  cogent::sim::emit_metrics(result.metrics,
                            (fs::path(opts.out_dir) / "metrics.csv").string());

  std::cout << "response peak at " << result.peak_delay_ms
            << " ms after stimulus onset (" << result.curve.sums.size()
            << " bins of " << result.curve.bin_ms << " ms)\n";
  std::cout << "wrote " << opts.out_dir << "/{response_curve.csv,metrics.csv}\n";
  return 0;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (i * 8)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t state_hash(const cogent::vm::Codelet& c,
                         const std::vector<cogent::IntVec>& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, static_cast<std::uint64_t>(c.arity));
  for (const auto& ins : c.code) {
    h = fnv1a(h, static_cast<std::uint64_t>(ins.op));
    h = fnv1a(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(ins.a)));
    h = fnv1a(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(ins.b)));
  }
  for (const auto& v : inputs) {
    h = fnv1a(h, v.size());
    for (cogent::Word w : v)
      h = fnv1a(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(w)));
  }
  return h;
}

int cmd_fuzz(std::uint64_t seed, long count, int budget) {
  using namespace cogent::vm;
  Rng rng(seed);
  GenParams gen;
  gen.max_arity = 3;

  long matches = 0, no_matches = 0, errors = 0, exhausted = 0;
  for (long i = 0; i < count; ++i) {
    const Codelet c = generate_random(gen, rng);
    std::vector<cogent::IntVec> inputs(static_cast<std::size_t>(c.arity));
    for (auto& v : inputs) {
      const auto len = rng.below(6);
      for (std::uint64_t j = 0; j < len; ++j)
        v.push_back(static_cast<cogent::Word>(rng.below(2001)) - 1000);
    }

    const std::uint64_t before = state_hash(c, inputs);
    const ExecOutcome out = execute(c, inputs, budget);
    const ExecOutcome again = execute(c, inputs, budget);
    const std::uint64_t after = state_hash(c, inputs);

    if (out.steps_used > budget) {
      std::cerr << "FUZZ VIOLATION: budget overrun at case " << i << "\n";
      return 1;
    }
    if (before != after) {
      std::cerr << "FUZZ VIOLATION: state mutated at case " << i << "\n";
      return 1;
    }
    if (out.status != again.status || out.output != again.output ||
        out.steps_used != again.steps_used) {
      std::cerr << "FUZZ VIOLATION: nondeterministic at case " << i << "\n";
      return 1;
    }
    switch (out.status) {
      case RunStatus::kMatch: ++matches; break;
      case RunStatus::kNoMatch: ++no_matches; break;
      case RunStatus::kRuntimeError: ++errors; break;
      case RunStatus::kBudgetExhausted: ++exhausted; break;
    }
  }
  std::cout << "fuzzed " << count << " codelets (budget " << budget
            << "): match=" << matches << " nomatch=" << no_matches
            << " error=" << errors << " exhausted=" << exhausted
            << " -- no violations\n";
  return 0;
}

int cmd_snapshot(const std::string& in_path, const std::string& resave) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot open " << in_path << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  auto engine = cogent::snapshot::load(text, cogent::hierarchy::EngineParams{},
                                       /*seed=*/0);
  engine->audit();

  int sensors = 0, regulars = 0, actuators = 0;
  for (const auto& c : engine->storage()) {
    if (!c.alive) continue;
    switch (c.kind) {
      case cogent::hierarchy::ConceptKind::kSensor: ++sensors; break;
      case cogent::hierarchy::ConceptKind::kRegular: ++regulars; break;
      case cogent::hierarchy::ConceptKind::kActuator: ++actuators; break;
    }
  }
  std::cout << in_path << ": t=" << cogent::snapshot::saved_time(text)
            << " ms, " << sensors << " sensors, " << regulars
            << " regular concepts, " << actuators
            << " actuator copies, R=" << engine->global_reward().value()
            << " -- audit ok\n";

  const std::string round_trip =
      cogent::snapshot::save(*engine, cogent::snapshot::saved_time(text));
  if (round_trip != text)
    std::cout << "note: file differs from canonical form (stats window "
                 "mismatch or foreign writer)\n";
  if (!resave.empty()) {
    std::ofstream out(resave, std::ios::binary);
    out << round_trip;
    std::cout << "resaved canonical snapshot to " << resave << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cogent: a self-programming codelet engine on a simulated "
               "sensor/actuator world"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* run = app.add_subcommand("run", "run a learning session from a config");
  run->add_option("--config", opts.config_path, "config file")->required();
  run->add_option("--out", opts.out_dir, "output directory");
  run->add_option("--seed", opts.seed, "override [session] seed");
  run->add_option("--duration", opts.duration_s, "override duration (seconds)");
  run->add_option("--workers", opts.workers, "override worker count");

  auto* fig3 = app.add_subcommand(
      "fig3", "stimulus-response experiment: estimate the sensation delay");
  fig3->add_option("--config", opts.config_path, "config file")->required();
  fig3->add_option("--out", opts.out_dir, "output directory");
  fig3->add_option("--seed", opts.seed, "override [session] seed");
  fig3->add_option("--workers", opts.workers, "override worker count");

  std::uint64_t fuzz_seed = 1;
  long fuzz_count = 100000;
  int fuzz_budget = 256;
  auto* fuzz = app.add_subcommand("fuzz-vm", "fuzz the codelet interpreter");
  fuzz->add_option("--seed", fuzz_seed, "rng seed");
  fuzz->add_option("--count", fuzz_count, "number of cases");
  fuzz->add_option("--budget", fuzz_budget, "step budget per execution");

  std::string snap_in, snap_resave;
  auto* snap =
      app.add_subcommand("snapshot", "load, audit and round-trip a snapshot");
  snap->add_option("--in", snap_in, "snapshot file")->required();
  snap->add_option("--resave", snap_resave, "write canonical form here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(opts);
    if (fig3->parsed()) return cmd_fig3(opts);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_seed, fuzz_count, fuzz_budget);
    if (snap->parsed()) return cmd_snapshot(snap_in, snap_resave);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
