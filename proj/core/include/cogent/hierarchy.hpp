// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cogent/actuator.hpp"
#include "cogent/learning.hpp"
#include "cogent/reward.hpp"
#include "cogent/rng.hpp"
#include "cogent/types.hpp"
#include "cogent/vm.hpp"
#include "cogent/worker_pool.hpp"

namespace cogent::hierarchy {

using ConceptId = std::uint32_t;

// Sentinel for "no concept"; real ids start at 0.
inline constexpr ConceptId kNoConcept = 0xffffffffu;

enum class ConceptKind : std::uint8_t { kSensor, kRegular, kActuator };

// Outgoing link: an action the owning concept can take, forwarding its
// output into one input slot of a descendant. Carries the TD value that
// drives both action selection and ticket priority.
struct Action {
  ConceptId child = 0;
  int slot = 0;
  double q = learning::kInitialQ;
};

// Incoming link plus the latest value delivered through it. A concept
// executes when every slot holds data that arrived within the coincidence
// window -- patterns have to coexist in real time.
struct InputSlot {
  ConceptId parent = kNoConcept;
  bool has_value = false;
  IntVec value;
  TimeMs delivered_at = 0;
};

struct Concept {
  ConceptId id = 0;
  ConceptKind kind = ConceptKind::kRegular;
  std::string name;

  vm::Codelet codelet;                            // regular concepts
  std::string channel;                            // sensor concepts
  int sensor_width = 0;                           // sensor concepts
  std::unique_ptr<actuator::ActuatorCopy> copy;   // actuator concepts

  std::vector<InputSlot> inputs;
  std::vector<Action> actions;
  reward::PartitionStats stats;

  std::int64_t executions = 0;
  TimeMs created_at = 0;
  bool alive = true;

  int arity() const { return static_cast<int>(inputs.size()); }
};

// An actuator as the engine first sees it: input count and minimum input
// sizes known, meaning unknown. Copies of this template are what get linked
// into the hierarchy.
struct ActuatorTemplate {
  std::string id;
  int arity = 1;
  std::vector<int> min_input_sizes;
  actuator::CostModel cost;
};

struct ThreadTicket {
  ConceptId concept_id = 0;
  std::vector<IntVec> inputs;
  int priority = 1;
  TimeMs expires_at = 0;
  std::int64_t resources = 0;
  // Provenance of the delivery that spawned this ticket, for the deferred
  // TD update of the parent's action once this concept matches.
  ConceptId parent = 0;
  int via_slot = 0;
  bool has_parent = false;
  std::uint64_t seq = 0;  // assigned by the queue; FIFO tie-break
};

// Bounded priority queue of runnable codelet threads. Pop order is
// non-increasing priority with FIFO between equals; pushing beyond capacity
// silently evicts the lowest-priority ticket -- most threads never get
// serviced, by design of the artificial economics.
class SchedulerQueue {
 public:
  explicit SchedulerQueue(std::size_t capacity) : capacity_(capacity) {}

  void push(ThreadTicket ticket);
  std::optional<ThreadTicket> pop();

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::size_t capacity() const { return capacity_; }

 private:
  struct Order {
    bool operator()(const ThreadTicket& a, const ThreadTicket& b) const {
      if (a.priority != b.priority) return a.priority > b.priority;
      return a.seq < b.seq;
    }
  };

  std::size_t capacity_;
  std::uint64_t next_seq_ = 0;
  std::set<ThreadTicket, Order> items_;
};

enum class IntegrateErrorKind {
  kArityMismatch,
  kCycleDetected,
  kMinSizeViolated,
  kSlotTaken,
  kUnknownTemplate,
  kBadParent,
  kCopyLimit,
};

class IntegrateError : public std::runtime_error {
 public:
  IntegrateError(IntegrateErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  IntegrateErrorKind kind() const { return kind_; }

 private:
  IntegrateErrorKind kind_;
};

struct EngineParams {
  learning::LearnParams learn;
  reward::RewardParams rew;
  actuator::ActuatorParams act;
  vm::GenParams gen;

  std::size_t queue_capacity = 10000;
  TimeMs ticket_ttl = 500;          // unconditional thread deadline
  std::int64_t base_resources = 200;
  int max_priority = 1000;
  std::size_t stats_window = 0;     // 0 = cumulative counts
  TimeMs join_window = 200;         // multi-input coincidence window

  TimeMs grace_period = 10000;      // no pruning before this age
  double value_threshold = 0.01;    // max-Q floor; 0 disables
  double usage_threshold = 0.1;     // executions per second; 0 disables

  double generation_rate = 0.0;     // random codelet candidates per second
  TimeMs explore_interval = 1000;   // actuator exploration cadence
  int workers = 1;                  // parallel VM execution contexts
};

// One row per actuator execution request, for the offline actuation log.
struct ActuationRecord {
  TimeMs time = 0;
  std::string template_id;
  std::uint64_t copy_id = 0;
  std::vector<IntVec> inputs;
  double cost = 0.0;
  std::int64_t resources = 0;
  bool activated = false;
  double value = 0.0;
};

struct ExecutionReport {
  int executed = 0;        // tickets actually run
  int expired = 0;         // tickets dropped at their deadline
  int matches = 0;
  int failures = 0;        // no-match, runtime error or budget exhausted
  int spawned = 0;         // descendant tickets enqueued
  int requests = 0;        // actuator execution requests
  int activations = 0;
  double reward_added = 0.0;
  std::int64_t steps_consumed = 0;

  // Details of the last executed ticket, for tests.
  ConceptId concept_id = 0;
  vm::RunStatus status = vm::RunStatus::kNoMatch;

  void merge(const ExecutionReport& other);
};

// The concept hierarchy plus everything that makes it run: the scheduler,
// the shared global reward, TD-learning bookkeeping, actuator evaluation,
// random codelet generation and fitness pruning. The world is reached only
// through the actuation callback, and sensor data enters through
// on_sensor_event, so the engine itself is fully deterministic for a fixed
// seed in single-worker mode.
class Engine {
 public:
  using ActuationSink = std::function<void(
      const std::string& actuator_id, std::span<const IntVec> inputs, TimeMs now)>;
  using ActuationLogger = std::function<void(const ActuationRecord&)>;

  Engine(EngineParams params, std::uint64_t seed);

  void set_actuation_sink(ActuationSink sink) { sink_ = std::move(sink); }
  void set_actuation_logger(ActuationLogger log) { logger_ = std::move(log); }

  // --- graph construction -------------------------------------------------

  ConceptId add_sensor(const std::string& name, const std::string& channel,
                       int width, TimeMs now = 0);
  void add_template(ActuatorTemplate tpl);

  // Integrates a regular concept fed by one parent per input slot.
  ConceptId integrate_regular(const std::string& name, vm::Codelet codelet,
                              std::span<const ConceptId> parents, TimeMs now);

  // Copies the template and integrates the fresh copy; each copy is
  // evaluated independently in its own context.
  ConceptId integrate_actuator_copy(const std::string& template_id,
                                    std::span<const ConceptId> parents,
                                    TimeMs now);

  // Low-level link: parent's output into child's input slot. Checks, in
  // order: existence, leaf/root constraints, cycles, slot occupancy and
  // minimum input sizes. integrate_* goes through here.
  void link(ConceptId parent, ConceptId child, int slot);

  // --- running ------------------------------------------------------------

  // Feeds one sensor reading into every root on the channel.
  void on_sensor_event(const std::string& channel, const IntVec& value,
                       TimeMs now);

  // Pops and runs the highest-priority unexpired ticket, if any.
  ExecutionReport step_engine(TimeMs now);

  // Runs up to max_tickets tickets; with workers > 1 codelet executions
  // proceed in parallel while all state mutation stays serialized in pop
  // order.
  ExecutionReport drain(TimeMs now, int max_tickets);

  // Applies due actuator value updates. All updates firing at one call
  // share the same live-activation count N for their 1/N shares.
  std::vector<ConceptId> settle_actuators(TimeMs now);

  // Random codelet generation at the configured rate, heuristically
  // filtered, integrated at random compatible spots.
  void run_generation(TimeMs now);

  // Per-template exploration: probabilistically adds actuator copies,
  // suppressed as existing copies prove their value.
  void run_exploration(TimeMs now);

  // Discards low-value and rarely used regular concepts past their grace
  // period, cascading through dependents. Returns removed ids.
  std::vector<ConceptId> prune(TimeMs now);

  // Whole-graph consistency audit; throws std::logic_error on violation.
  void audit() const;

  // --- introspection ------------------------------------------------------

  const EngineParams& params() const { return params_; }
  reward::GlobalReward& global_reward() { return global_; }
  const reward::GlobalReward& global_reward() const { return global_; }

  const Concept* find(ConceptId id) const;
  Concept* find_mutable(ConceptId id);
  std::optional<ConceptId> find_by_name(const std::string& name) const;
  std::size_t concept_count() const;  // alive concepts
  std::size_t ticket_count() const { return queue_.size(); }
  const std::vector<Concept>& storage() const { return concepts_; }
  const std::vector<ActuatorTemplate>& templates() const { return templates_; }

  int live_activations() const { return live_activations_; }
  std::int64_t total_granted() const { return total_granted_; }
  std::int64_t total_consumed() const { return total_consumed_; }
  std::int64_t generated_count() const { return generated_; }
  std::int64_t generation_accepted() const { return generation_accepted_; }
  std::int64_t copies_created(const std::string& template_id) const;

  // Directly enqueues a ticket (tests and session bootstrap).
  void enqueue(ThreadTicket ticket);

 private:
  friend struct SnapshotAccess;

  Concept& concept_ref(ConceptId id);
  const Concept& concept_ref(ConceptId id) const;
  bool reaches(ConceptId from, ConceptId target) const;
  double weight_of(const Concept& target) const;
  double weighted_child_value(const Concept& c) const;
  int spawn_priority(double q) const;
  bool deliver(Concept& parent, const Action& action, const IntVec& output,
               TimeMs now, std::int64_t resources);
  void apply_ticket(const ThreadTicket& ticket,
                    const std::optional<vm::ExecOutcome>& pre,
                    TimeMs now, ExecutionReport& report);
  void handle_match(Concept& c, const ThreadTicket& ticket,
                    const vm::ExecOutcome& outcome, TimeMs now,
                    ExecutionReport& report);
  void handle_actuator_request(Concept& c, const ThreadTicket& ticket,
                               TimeMs now, ExecutionReport& report);
  void update_parent_after_match(const ThreadTicket& ticket, double r_child,
                                 const Concept& child);
  void cascade_remove(ConceptId id, std::vector<ConceptId>& removed);
  ActuatorTemplate* find_template(const std::string& id);
  std::vector<ConceptId> linkable_concepts() const;
  ConceptId pick_spot(std::span<const ConceptId> spots, Rng& rng) const;

  EngineParams params_;
  Rng rng_;       // action selection + activation draws
  Rng gen_rng_;   // codelet generation + integration spots
  reward::GlobalReward global_;

  std::vector<Concept> concepts_;  // index == id; removed stay as tombstones
  std::vector<ActuatorTemplate> templates_;
  SchedulerQueue queue_;
  std::unique_ptr<WorkerPool> pool_;

  ActuationSink sink_;
  ActuationLogger logger_;

  int live_activations_ = 0;
  std::uint64_t next_copy_id_ = 1;
  std::int64_t total_granted_ = 0;
  std::int64_t total_consumed_ = 0;
  std::int64_t generated_ = 0;
  std::int64_t generation_accepted_ = 0;
  double generation_credit_ = 0.0;
  TimeMs last_generation_at_ = 0;
  TimeMs last_exploration_at_ = 0;
  std::vector<std::pair<std::string, std::int64_t>> copy_counts_;
};

}  // namespace cogent::hierarchy
