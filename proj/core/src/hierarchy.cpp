// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cogent::hierarchy {

void ExecutionReport::merge(const ExecutionReport& other) {
  executed += other.executed;
  expired += other.expired;
  matches += other.matches;
  failures += other.failures;
  spawned += other.spawned;
  requests += other.requests;
  activations += other.activations;
  reward_added += other.reward_added;
  steps_consumed += other.steps_consumed;
  if (other.executed > 0) {
    concept_id = other.concept_id;
    status = other.status;
  }
}

void SchedulerQueue::push(ThreadTicket ticket) {
  ticket.seq = next_seq_++;
  items_.insert(std::move(ticket));
  if (items_.size() > capacity_) items_.erase(std::prev(items_.end()));
}

std::optional<ThreadTicket> SchedulerQueue::pop() {
  if (items_.empty()) return std::nullopt;
  auto it = items_.begin();
  ThreadTicket t = *it;
  items_.erase(it);
  return t;
}

Engine::Engine(EngineParams params, std::uint64_t seed)
    : params_(std::move(params)),
      rng_(Rng(seed).fork(1)),
      // The generator stream derives from the session seed unless the
      // generation params pin their own.
      gen_rng_(params_.gen.seed ? Rng(params_.gen.seed) : Rng(seed).fork(2)),
      global_(params_.rew.rho),
      queue_(params_.queue_capacity) {
  if (params_.workers > 1)
    pool_ = std::make_unique<WorkerPool>(params_.workers);
}

Concept& Engine::concept_ref(ConceptId id) {
  if (id >= concepts_.size() || !concepts_[id].alive)
    throw std::out_of_range("no such concept: " + std::to_string(id));
  return concepts_[id];
}

const Concept& Engine::concept_ref(ConceptId id) const {
  if (id >= concepts_.size() || !concepts_[id].alive)
    throw std::out_of_range("no such concept: " + std::to_string(id));
  return concepts_[id];
}

const Concept* Engine::find(ConceptId id) const {
  if (id >= concepts_.size() || !concepts_[id].alive) return nullptr;
  return &concepts_[id];
}

Concept* Engine::find_mutable(ConceptId id) {
  if (id >= concepts_.size() || !concepts_[id].alive) return nullptr;
  return &concepts_[id];
}

std::optional<ConceptId> Engine::find_by_name(const std::string& name) const {
  for (const Concept& c : concepts_)
    if (c.alive && c.name == name) return c.id;
  return std::nullopt;
}

std::size_t Engine::concept_count() const {
  std::size_t n = 0;
  for (const Concept& c : concepts_) n += c.alive ? 1 : 0;
  return n;
}

std::int64_t Engine::copies_created(const std::string& template_id) const {
  for (const auto& [id, n] : copy_counts_)
    if (id == template_id) return n;
  return 0;
}

ConceptId Engine::add_sensor(const std::string& name,
                             const std::string& channel, int width,
                             TimeMs now) {
  Concept c;
  c.id = static_cast<ConceptId>(concepts_.size());
  c.kind = ConceptKind::kSensor;
  c.name = name;
  c.channel = channel;
  c.sensor_width = width;
  c.stats = reward::PartitionStats(params_.stats_window);
  c.created_at = now;
  concepts_.push_back(std::move(c));
  return concepts_.back().id;
}

void Engine::add_template(ActuatorTemplate tpl) {
  if (tpl.arity < 1)
    throw std::invalid_argument("actuator template arity must be >= 1");
  tpl.min_input_sizes.resize(static_cast<std::size_t>(tpl.arity), 0);
  templates_.push_back(std::move(tpl));
  copy_counts_.emplace_back(templates_.back().id, 0);
}

ActuatorTemplate* Engine::find_template(const std::string& id) {
  for (ActuatorTemplate& t : templates_)
    if (t.id == id) return &t;
  return nullptr;
}

bool Engine::reaches(ConceptId from, ConceptId target) const {
  if (from == target) return true;
  std::vector<ConceptId> work{from};
  std::vector<bool> seen(concepts_.size(), false);
  while (!work.empty()) {
    const ConceptId at = work.back();
    work.pop_back();
    if (at >= seen.size() || seen[at]) continue;
    seen[at] = true;
    if (at == target) return true;
    const Concept& c = concepts_[at];
    if (!c.alive) continue;
    for (const Action& a : c.actions) work.push_back(a.child);
  }
  return false;
}

void Engine::link(ConceptId parent, ConceptId child, int slot) {
  Concept& p = concept_ref(parent);
  Concept& ch = concept_ref(child);
  if (p.kind == ConceptKind::kActuator)
    throw IntegrateError(IntegrateErrorKind::kBadParent,
                         "actuator concepts are terminal leaves");
  if (ch.kind == ConceptKind::kSensor)
    throw IntegrateError(IntegrateErrorKind::kBadParent,
                         "sensor concepts are roots and take no links");
  if (slot < 0 || slot >= ch.arity())
    throw IntegrateError(IntegrateErrorKind::kArityMismatch,
                         "slot out of range for child arity");
  // Links are unidirectional; a path child -> parent would close a loop.
  if (reaches(child, parent))
    throw IntegrateError(IntegrateErrorKind::kCycleDetected,
                         "link would create a cycle");
  if (ch.inputs[static_cast<std::size_t>(slot)].parent != kNoConcept)
    throw IntegrateError(IntegrateErrorKind::kSlotTaken,
                         "input slot already linked");
  // Static minimum-size check, possible only when the parent's output width
  // is known (sensors). Everything else is re-checked per request.
  if (ch.kind == ConceptKind::kActuator && p.kind == ConceptKind::kSensor) {
    const ActuatorTemplate* tpl = nullptr;
    for (const ActuatorTemplate& t : templates_)
      if (t.id == ch.copy->template_id()) tpl = &t;
    if (tpl && p.sensor_width <
                   tpl->min_input_sizes[static_cast<std::size_t>(slot)])
      throw IntegrateError(IntegrateErrorKind::kMinSizeViolated,
                           "sensor output narrower than actuator minimum");
  }
  ch.inputs[static_cast<std::size_t>(slot)].parent = parent;
  p.actions.push_back(Action{child, slot, learning::kInitialQ});
}

ConceptId Engine::integrate_regular(const std::string& name,
                                    vm::Codelet codelet,
                                    std::span<const ConceptId> parents,
                                    TimeMs now) {
  if (static_cast<int>(parents.size()) != codelet.arity)
    throw IntegrateError(IntegrateErrorKind::kArityMismatch,
                         "parent count must equal codelet arity");
  Concept c;
  c.id = static_cast<ConceptId>(concepts_.size());
  c.kind = ConceptKind::kRegular;
  c.name = name.empty() ? "gen-" + std::to_string(c.id) : name;
  c.codelet = std::move(codelet);
  c.inputs.resize(parents.size());
  c.stats = reward::PartitionStats(params_.stats_window);
  c.created_at = now;
  concepts_.push_back(std::move(c));
  const ConceptId id = concepts_.back().id;
  try {
    for (std::size_t i = 0; i < parents.size(); ++i)
      link(parents[i], id, static_cast<int>(i));
  } catch (...) {
    // Roll the half-linked node back so a failed integrate leaves no trace.
    std::vector<ConceptId> removed;
    cascade_remove(id, removed);
    throw;
  }
  return id;
}

ConceptId Engine::integrate_actuator_copy(const std::string& template_id,
                                          std::span<const ConceptId> parents,
                                          TimeMs now) {
  ActuatorTemplate* tpl = find_template(template_id);
  if (!tpl)
    throw IntegrateError(IntegrateErrorKind::kUnknownTemplate,
                         "unknown actuator template: " + template_id);
  if (static_cast<int>(parents.size()) != tpl->arity)
    throw IntegrateError(IntegrateErrorKind::kArityMismatch,
                         "parent count must equal template arity");
  int alive_copies = 0;
  for (const Concept& c : concepts_)
    if (c.alive && c.copy && c.copy->template_id() == template_id)
      ++alive_copies;
  if (alive_copies >= params_.act.max_copies)
    throw IntegrateError(IntegrateErrorKind::kCopyLimit,
                         "copy limit reached for template: " + template_id);
  Concept c;
  c.id = static_cast<ConceptId>(concepts_.size());
  c.kind = ConceptKind::kActuator;
  c.copy = std::make_unique<actuator::ActuatorCopy>(template_id, next_copy_id_++,
                                                    params_.act);
  c.name = template_id + "#" + std::to_string(c.copy->copy_id());
  c.inputs.resize(parents.size());
  c.stats = reward::PartitionStats(params_.stats_window);
  c.created_at = now;
  concepts_.push_back(std::move(c));
  const ConceptId id = concepts_.back().id;
  try {
    for (std::size_t i = 0; i < parents.size(); ++i)
      link(parents[i], id, static_cast<int>(i));
  } catch (...) {
    std::vector<ConceptId> removed;
    cascade_remove(id, removed);
    throw;
  }
  for (auto& [tid, n] : copy_counts_)
    if (tid == template_id) ++n;
  return id;
}

int Engine::spawn_priority(double q) const {
  const long p = std::lround(q);
  if (p < 1) return 1;
  if (p > params_.max_priority) return params_.max_priority;
  return static_cast<int>(p);
}

bool Engine::deliver(Concept& parent, const Action& action,
                     const IntVec& output, TimeMs now,
                     std::int64_t resources) {
  Concept* child = find_mutable(action.child);
  if (!child) return false;
  InputSlot& slot = child->inputs[static_cast<std::size_t>(action.slot)];
  slot.value = output;
  slot.has_value = true;
  slot.delivered_at = now;

  TimeMs oldest = now;
  for (const InputSlot& s : child->inputs) {
    if (!s.has_value) return false;
    oldest = std::min(oldest, s.delivered_at);
  }
  if (now - oldest > params_.join_window) return false;

  ThreadTicket t;
  t.concept_id = child->id;
  t.inputs.reserve(child->inputs.size());
  for (InputSlot& s : child->inputs) {
    t.inputs.push_back(s.value);
    s.has_value = false;  // a coincidence fires exactly once
  }
  t.priority = spawn_priority(action.q);
  t.expires_at = now + params_.ticket_ttl;
  t.resources = resources;
  t.parent = parent.id;
  t.via_slot = action.slot;
  t.has_parent = true;
  queue_.push(std::move(t));
  return true;
}

void Engine::enqueue(ThreadTicket ticket) {
  if (ticket.resources <= 0)
    throw std::invalid_argument("ticket needs positive resources");
  queue_.push(std::move(ticket));
}

void Engine::on_sensor_event(const std::string& channel, const IntVec& value,
                             TimeMs now) {
  for (Concept& c : concepts_) {
    if (!c.alive || c.kind != ConceptKind::kSensor || c.channel != channel)
      continue;
    c.stats.add_positive();  // a sensor reading is a certain event: no reward
    c.executions += 1;
    if (c.actions.empty()) continue;
    std::vector<double> qs;
    qs.reserve(c.actions.size());
    for (const Action& a : c.actions) qs.push_back(a.q);
    const std::size_t pick = learning::select_action(qs, rng_);
    deliver(c, c.actions[pick], value, now, params_.base_resources);
  }
}

double Engine::weight_of(const Concept& target) const {
  // Weight of an action for the weighted descendant value: the pointed-to
  // concept's positive-example probability. Concepts with no examples yet
  // and actuator copies (which do not partition anything) weigh 1.
  if (target.kind == ConceptKind::kActuator) return 1.0;
  if (target.stats.total() == 0) return 1.0;
  return target.stats.probability();
}

double Engine::weighted_child_value(const Concept& c) const {
  if (c.actions.empty()) return 0.0;
  std::vector<std::pair<double, double>> children;
  children.reserve(c.actions.size());
  for (const Action& a : c.actions) {
    const Concept* target = find(a.child);
    if (!target) continue;
    children.emplace_back(weight_of(*target), a.q);
  }
  if (children.empty()) return 0.0;
  double weight_sum = 0.0;
  for (const auto& [p, q] : children) weight_sum += p;
  if (weight_sum <= 0.0) return 0.0;  // all-zero weights: no usable estimate
  return learning::weighted_value(children);
}

void Engine::update_parent_after_match(const ThreadTicket& ticket,
                                       double r_child, const Concept& child) {
  if (!ticket.has_parent) return;
  Concept* parent = find_mutable(ticket.parent);
  if (!parent) return;
  for (Action& a : parent->actions) {
    if (a.child == ticket.concept_id && a.slot == ticket.via_slot) {
      a.q = learning::td_update(a.q, r_child, weighted_child_value(child),
                                params_.learn);
      return;
    }
  }
}

void Engine::handle_match(Concept& c, const ThreadTicket& ticket,
                          const vm::ExecOutcome& outcome, TimeMs now,
                          ExecutionReport& report) {
  c.stats.add_positive();  // the current event counts in its own probability
  const double p = c.stats.probability();
  const double info = reward::self_information(p);
  const double r = reward::mean_reward(p);
  global_.update(r, now);
  report.reward_added += r;
  report.matches += 1;

  update_parent_after_match(ticket, r, c);

  if (c.actions.empty()) return;
  const std::int64_t bonus = reward::award_resources(info, params_.rew.beta);
  std::vector<double> qs;
  qs.reserve(c.actions.size());
  for (const Action& a : c.actions) qs.push_back(a.q);
  const std::size_t pick = learning::select_action(qs, rng_);
  if (deliver(c, c.actions[pick], outcome.output, now,
              params_.base_resources + bonus))
    report.spawned += 1;
}

void Engine::handle_actuator_request(Concept& c, const ThreadTicket& ticket,
                                     TimeMs now, ExecutionReport& report) {
  report.requests += 1;
  const ActuatorTemplate* tpl = find_template(c.copy->template_id());
  if (!tpl) return;
  for (std::size_t i = 0; i < ticket.inputs.size(); ++i) {
    if (static_cast<int>(ticket.inputs[i].size()) < tpl->min_input_sizes[i])
      return;  // undersized request: dropped, resources refunded
  }
  const double cost = tpl->cost.cost(ticket.inputs);
  const bool activated = c.copy->maybe_activate(
      cost, static_cast<double>(ticket.resources), params_.rew.beta,
      global_.peek(now), now, rng_);
  if (activated) {
    live_activations_ += 1;
    report.activations += 1;
    if (sink_) sink_(tpl->id, ticket.inputs, now);
  }
  if (logger_) {
    logger_(ActuationRecord{
        .time = now,
        .template_id = tpl->id,
        .copy_id = c.copy->copy_id(),
        .inputs = ticket.inputs,
        .cost = cost,
        .resources = ticket.resources,
        .activated = activated,
        .value = c.copy->value(),
    });
  }
  // Terminal TD rule: the parent's action value tracks the copy's own
  // independent estimate, with no immediate-reward term.
  if (ticket.has_parent) {
    Concept* parent = find_mutable(ticket.parent);
    if (!parent) return;
    for (Action& a : parent->actions) {
      if (a.child == ticket.concept_id && a.slot == ticket.via_slot) {
        a.q = learning::td_update_terminal(a.q, c.copy->value(), params_.learn);
        return;
      }
    }
  }
}

void Engine::apply_ticket(const ThreadTicket& ticket,
                          const std::optional<vm::ExecOutcome>& pre,
                          TimeMs now, ExecutionReport& report) {
  Concept* c = find_mutable(ticket.concept_id);
  if (!c) return;  // pruned while queued
  report.executed += 1;
  report.concept_id = c->id;
  c->executions += 1;

  if (c->kind == ConceptKind::kActuator) {
    handle_actuator_request(*c, ticket, now, report);
    report.status = vm::RunStatus::kMatch;
    return;
  }

  total_granted_ += ticket.resources;
  const vm::ExecOutcome outcome =
      pre ? *pre
          : vm::execute(c->codelet, ticket.inputs,
                        static_cast<int>(ticket.resources));
  total_consumed_ += outcome.steps_used;
  report.steps_consumed += outcome.steps_used;
  report.status = outcome.status;

  if (outcome.matched()) {
    handle_match(*c, ticket, outcome, now, report);
  } else {
    // Failure to match cancels the thread and skips the TD update.
    c->stats.add_negative();
    report.failures += 1;
  }
}

ExecutionReport Engine::step_engine(TimeMs now) {
  ExecutionReport report;
  while (auto ticket = queue_.pop()) {
    if (ticket->expires_at <= now) {
      report.expired += 1;  // past the unconditional deadline: never run
      continue;
    }
    apply_ticket(*ticket, std::nullopt, now, report);
    break;
  }
  return report;
}

ExecutionReport Engine::drain(TimeMs now, int max_tickets) {
  ExecutionReport report;
  if (params_.workers <= 1 || !pool_) {
    for (int i = 0; i < max_tickets && !queue_.empty(); ++i) {
      ExecutionReport one = step_engine(now);
      report.merge(one);
      if (one.executed == 0 && one.expired == 0) break;
    }
    return report;
  }

  // Parallel mode: pop a batch, run the pure interpreter part on the pool,
  // then apply all effects serially in pop order.
  int remaining = max_tickets;
  while (remaining > 0 && !queue_.empty()) {
    std::vector<ThreadTicket> batch;
    while (static_cast<int>(batch.size()) <
               std::min(remaining, params_.workers) &&
           !queue_.empty()) {
      auto ticket = queue_.pop();
      if (ticket->expires_at <= now) {
        report.expired += 1;
        continue;
      }
      batch.push_back(std::move(*ticket));
    }
    if (batch.empty()) break;

    std::vector<std::optional<vm::ExecOutcome>> outcomes(batch.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Concept* c = find(batch[i].concept_id);
      if (!c || c->kind != ConceptKind::kRegular) continue;
      tasks.push_back([this, &batch, &outcomes, i, c] {
        outcomes[i] = vm::execute(c->codelet, batch[i].inputs,
                                  static_cast<int>(batch[i].resources));
      });
    }
    pool_->run_batch(tasks);

    for (std::size_t i = 0; i < batch.size(); ++i)
      apply_ticket(batch[i], outcomes[i], now, report);
    remaining -= static_cast<int>(batch.size());
  }
  return report;
}

std::vector<ConceptId> Engine::settle_actuators(TimeMs now) {
  std::vector<ConceptId> removed;
  if (live_activations_ <= 0) return removed;
  // Every update firing now shares the same moment, hence the same N.
  const double delta = actuator::delta_share(live_activations_);
  const double reward_now = global_.peek(now);
  for (Concept& c : concepts_) {
    if (!c.alive || c.kind != ConceptKind::kActuator) continue;
    while (c.copy->has_due_update(now, params_.act.settle_delay)) {
      c.copy->apply_value_update(reward_now, delta, params_.act.alpha);
      live_activations_ -= 1;
    }
    if (c.copy->below_threshold(params_.act.threshold))
      cascade_remove(c.id, removed);
  }
  return removed;
}

void Engine::cascade_remove(ConceptId id, std::vector<ConceptId>& removed) {
  std::vector<ConceptId> work{id};
  while (!work.empty()) {
    const ConceptId at = work.back();
    work.pop_back();
    if (at >= concepts_.size() || !concepts_[at].alive) continue;
    Concept& c = concepts_[at];
    c.alive = false;
    removed.push_back(at);

    // Detach from parents: their actions toward this concept disappear.
    for (const InputSlot& slot : c.inputs) {
      Concept* parent =
          slot.parent < concepts_.size() ? &concepts_[slot.parent] : nullptr;
      if (!parent || !parent->alive) continue;
      std::erase_if(parent->actions,
                    [at](const Action& a) { return a.child == at; });
    }
    // A dependent that loses an input can never execute again; its whole
    // subtree goes with it. Copies of the same actuator linked elsewhere
    // have their own parents and survive untouched.
    for (const Action& a : c.actions) work.push_back(a.child);

    if (c.copy)
      live_activations_ -= static_cast<int>(c.copy->pending().size());
    c.actions.clear();
    c.inputs.clear();
  }
}

std::vector<ConceptId> Engine::prune(TimeMs now) {
  std::vector<ConceptId> removed;
  const std::size_t count = concepts_.size();
  for (std::size_t i = 0; i < count; ++i) {
    Concept& c = concepts_[i];
    if (!c.alive || c.kind != ConceptKind::kRegular) continue;
    const TimeMs age = now - c.created_at;
    if (age < params_.grace_period) continue;

    // Value of a concept is the best of its action values. A concept with
    // no actions yet is judged by whether it ever produced a positive
    // example: earning leaves stay until someone builds on them.
    double max_q = 0.0;
    for (const Action& a : c.actions) max_q = std::max(max_q, a.q);
    const bool low_value =
        params_.value_threshold > 0.0 &&
        (c.actions.empty() ? c.stats.positives() == 0
                           : max_q < params_.value_threshold);

    const double rate =
        static_cast<double>(c.executions) / std::max(to_seconds(age), 1e-9);
    const bool rarely_used =
        params_.usage_threshold > 0.0 && rate < params_.usage_threshold;

    if (low_value || rarely_used) cascade_remove(c.id, removed);
  }
  return removed;
}

std::vector<ConceptId> Engine::linkable_concepts() const {
  std::vector<ConceptId> out;
  for (const Concept& c : concepts_)
    if (c.alive && c.kind != ConceptKind::kActuator) out.push_back(c.id);
  return out;
}

// Integration spots are drawn proportionally to demonstrated output flow
// (1 + positive examples), so new candidates attach where data actually
// moves instead of on junk that never matches.
ConceptId Engine::pick_spot(std::span<const ConceptId> spots, Rng& rng) const {
  double total = 0.0;
  for (const ConceptId id : spots)
    total += 1.0 + static_cast<double>(concepts_[id].stats.positives());
  double pick = rng.unit() * total;
  for (const ConceptId id : spots) {
    pick -= 1.0 + static_cast<double>(concepts_[id].stats.positives());
    if (pick < 0.0) return id;
  }
  return spots.back();
}

void Engine::run_generation(TimeMs now) {
  if (params_.generation_rate <= 0.0) return;
  generation_credit_ +=
      params_.generation_rate * to_seconds(now - last_generation_at_);
  last_generation_at_ = now;
  while (generation_credit_ >= 1.0) {
    generation_credit_ -= 1.0;
    const vm::Codelet candidate = vm::generate_random(params_.gen, gen_rng_);
    generated_ += 1;
    if (vm::validate(candidate)) continue;  // heuristics threw it out
    const std::vector<ConceptId> spots = linkable_concepts();
    if (spots.empty()) continue;
    std::vector<ConceptId> parents;
    parents.reserve(static_cast<std::size_t>(candidate.arity));
    for (int i = 0; i < candidate.arity; ++i)
      parents.push_back(pick_spot(spots, gen_rng_));
    try {
      integrate_regular("", candidate, parents, now);
      generation_accepted_ += 1;
    } catch (const IntegrateError&) {
      // incompatible spot; candidate is simply dropped
    }
  }
}

void Engine::run_exploration(TimeMs now) {
  if (now - last_exploration_at_ < params_.explore_interval) return;
  last_exploration_at_ = now;
  for (const ActuatorTemplate& tpl : templates_) {
    std::vector<double> values;
    std::vector<ConceptId> copies;
    for (const Concept& c : concepts_) {
      if (c.alive && c.kind == ConceptKind::kActuator &&
          c.copy->template_id() == tpl.id) {
        values.push_back(c.copy->value());
        copies.push_back(c.id);
      }
    }
    const double p =
        actuator::exploration_probability(values, params_.act.a_const);
    if (rng_.unit() >= p) continue;

    const std::vector<ConceptId> spots = linkable_concepts();
    if (spots.empty()) continue;
    std::vector<ConceptId> parents;
    parents.reserve(static_cast<std::size_t>(tpl.arity));
    for (int i = 0; i < tpl.arity; ++i)
      parents.push_back(pick_spot(spots, rng_));

    if (static_cast<int>(copies.size()) >= params_.act.max_copies) {
      // At the copy limit the newcomer replaces the worst-valued copy.
      std::size_t worst = 0;
      for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[worst]) worst = i;
      std::vector<ConceptId> removed;
      cascade_remove(copies[worst], removed);
    }
    try {
      integrate_actuator_copy(tpl.id, parents, now);
    } catch (const IntegrateError&) {
      // unlucky spot (size/arity mismatch); try again next interval
    }
  }
}

void Engine::audit() const {
  std::size_t pending_total = 0;
  for (const Concept& c : concepts_) {
    if (!c.alive) continue;
    if (c.kind == ConceptKind::kSensor && !c.inputs.empty())
      throw std::logic_error("sensor with incoming links");
    if (c.kind == ConceptKind::kActuator && !c.actions.empty())
      throw std::logic_error("actuator with outgoing links");
    for (const Action& a : c.actions) {
      const Concept* child = find(a.child);
      if (!child) throw std::logic_error("dangling action target");
      if (a.slot < 0 || a.slot >= child->arity())
        throw std::logic_error("action slot out of range");
      if (child->inputs[static_cast<std::size_t>(a.slot)].parent != c.id)
        throw std::logic_error("action/slot disagree about the link");
      if (a.q < 0.0) throw std::logic_error("negative action value");
    }
    for (const InputSlot& s : c.inputs) {
      const Concept* parent = find(s.parent);
      if (!parent) throw std::logic_error("dangling input parent");
      bool backed = false;
      for (const Action& a : parent->actions)
        backed |= a.child == c.id;
      if (!backed) throw std::logic_error("input without matching action");
    }
    if (c.copy) pending_total += c.copy->pending().size();
    // Cycle check: no concept may reach itself through its actions.
    for (const Action& a : c.actions)
      if (reaches(a.child, c.id))
        throw std::logic_error("cycle in concept graph");
  }
  if (static_cast<int>(pending_total) != live_activations_)
    throw std::logic_error("live-activation count out of sync");
  if (total_consumed_ > total_granted_)
    throw std::logic_error("consumed more steps than granted");
}

}  // namespace cogent::hierarchy
