#include <algorithm>
#include <vector>

#include "cogent/codelet_text.hpp"
#include "cogent/hierarchy.hpp"
#include "doctest.h"

using namespace cogent;
using namespace cogent::hierarchy;

namespace {

EngineParams quiet_params() {
  EngineParams p;
  p.usage_threshold = 0.0;  // tests drive time by hand
  p.value_threshold = 0.0;
  return p;
}

vm::Codelet identity() {
  return vm::parse_codelet("ARITY 1;LOAD 0 0;EMIT;MATCH");
}

vm::Codelet identity2() {
  return vm::parse_codelet("ARITY 2;LOAD 0 0;EMIT;LOAD 1 0;EMIT;MATCH");
}

vm::Codelet never() {
  return vm::parse_codelet("ARITY 1;LOAD 0 0;EMIT;FAIL;MATCH");
}

ThreadTicket ticket_for(ConceptId id, IntVec input, int priority,
                        TimeMs expires, std::int64_t resources = 200) {
  ThreadTicket t;
  t.concept_id = id;
  t.inputs = {std::move(input)};
  t.priority = priority;
  t.expires_at = expires;
  t.resources = resources;
  return t;
}

}  // namespace

TEST_CASE("scheduler pops by priority with FIFO tie-break") {
  SchedulerQueue q(100);
  ThreadTicket a, b, c, d;
  a.priority = 3;
  b.priority = 1;
  c.priority = 2;
  d.priority = 2;
  a.resources = b.resources = c.resources = d.resources = 1;
  a.concept_id = 0;
  b.concept_id = 1;
  c.concept_id = 2;
  d.concept_id = 3;
  q.push(a);
  q.push(b);
  q.push(c);
  q.push(d);
  CHECK(q.pop()->concept_id == 0);  // priority 3
  CHECK(q.pop()->concept_id == 2);  // first of the 2s
  CHECK(q.pop()->concept_id == 3);  // second of the 2s
  CHECK(q.pop()->concept_id == 1);
  CHECK(!q.pop());
}

TEST_CASE("queue at capacity silently evicts the lowest priority") {
  SchedulerQueue q(3);
  for (int pr : {5, 4, 3}) {
    ThreadTicket t;
    t.priority = pr;
    q.push(t);
  }
  ThreadTicket low;
  low.priority = 1;
  low.concept_id = 99;
  q.push(low);
  CHECK(q.size() == 3);
  std::vector<int> prios;
  while (auto t = q.pop()) prios.push_back(t->priority);
  CHECK(prios == std::vector<int>{5, 4, 3});
}

TEST_CASE("pop order is non-increasing for any push interleaving") {
  Rng rng(8);
  SchedulerQueue q(500);
  for (int round = 0; round < 50; ++round) {
    for (int i = 0; i < 40; ++i) {
      ThreadTicket t;
      t.priority = 1 + static_cast<int>(rng.below(20));
      q.push(t);
    }
    int prev = std::numeric_limits<int>::max();
    for (int i = 0; i < 25; ++i) {
      auto t = q.pop();
      REQUIRE(t);
      CHECK(t->priority <= prev);
      prev = t->priority;
    }
  }
}

TEST_CASE("integrating a two-input concept under two sensors") {
  Engine e(quiet_params(), 1);
  const auto s1 = e.add_sensor("left", "left", 1);
  const auto s2 = e.add_sensor("right", "right", 1);
  const std::vector<ConceptId> parents{s1, s2};
  const auto id = e.integrate_regular("pair", identity2(), parents, 0);
  CHECK(e.find(id));
  CHECK(e.find(id)->arity() == 2);
  CHECK(e.find(s1)->actions.size() == 1);
  CHECK(e.find(s2)->actions.size() == 1);
  e.audit();
}

TEST_CASE("parent count must match the codelet arity") {
  Engine e(quiet_params(), 1);
  const auto s1 = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> parents{s1};
  CHECK_THROWS_AS(e.integrate_regular("pair", identity2(), parents, 0),
                  IntegrateError);
}

TEST_CASE("linking back into an ancestor is a cycle") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> p1{s};
  const auto a = e.integrate_regular("a", identity(), p1, 0);
  const std::vector<ConceptId> p2{a};
  const auto b = e.integrate_regular("b", identity(), p2, 0);
  try {
    e.link(b, a, 0);
    FAIL("expected CycleDetected");
  } catch (const IntegrateError& err) {
    CHECK(err.kind() == IntegrateErrorKind::kCycleDetected);
  }
  e.audit();
}

TEST_CASE("actuator templates are copied per context") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 2);
  const std::vector<ConceptId> pv{s};
  const auto c1 = e.integrate_regular("ctx1", identity(), pv, 0);
  const auto c2 = e.integrate_regular("ctx2", identity(), pv, 0);
  e.add_template(ActuatorTemplate{"arm", 1, {1}, actuator::CostModel{}});
  const std::vector<ConceptId> p1{c1}, p2{c2};
  const auto t1 = e.integrate_actuator_copy("arm", p1, 0);
  const auto t2 = e.integrate_actuator_copy("arm", p2, 0);
  CHECK(t1 != t2);
  CHECK(e.find(t1)->copy->copy_id() != e.find(t2)->copy->copy_id());
  CHECK(e.copies_created("arm") == 2);
  e.audit();
}

TEST_CASE("sensor narrower than the actuator minimum size is rejected") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 2);
  e.add_template(ActuatorTemplate{"arm", 1, {3}, actuator::CostModel{}});
  const std::vector<ConceptId> pv{s};
  try {
    e.integrate_actuator_copy("arm", pv, 0);
    FAIL("expected MinSizeViolated");
  } catch (const IntegrateError& err) {
    CHECK(err.kind() == IntegrateErrorKind::kMinSizeViolated);
  }
  // the failed integrate must leave no trace
  e.audit();
  CHECK(e.concept_count() == 1);
}

TEST_CASE("actuators are leaves and sensors are roots") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto r = e.integrate_regular("r", identity(), pv, 0);
  e.add_template(ActuatorTemplate{"arm", 1, {0}, actuator::CostModel{}});
  const std::vector<ConceptId> pr{r};
  const auto t = e.integrate_actuator_copy("arm", pr, 0);

  CHECK_THROWS_AS(e.link(t, r, 0), IntegrateError);  // actuator as parent
  CHECK_THROWS_AS(e.link(r, s, 0), IntegrateError);  // sensor as child
}

TEST_CASE("a matching ticket spawns one descendant carrying the output") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  const std::vector<ConceptId> pa{a};
  e.integrate_regular("b", identity(), pa, 0);

  e.enqueue(ticket_for(a, {42}, 5, 1000));
  const ExecutionReport rep = e.step_engine(10);
  CHECK(rep.executed == 1);
  CHECK(rep.matches == 1);
  CHECK(rep.spawned == 1);
  CHECK(e.ticket_count() == 1);

  const ExecutionReport rep2 = e.step_engine(11);
  CHECK(rep2.executed == 1);
  CHECK(rep2.concept_id == *e.find_by_name("b"));
  e.audit();
}

TEST_CASE("expired tickets are dropped without touching statistics") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  e.enqueue(ticket_for(a, {1}, 5, /*expires=*/100));
  const ExecutionReport rep = e.step_engine(100);
  CHECK(rep.executed == 0);
  CHECK(rep.expired == 1);
  CHECK(e.find(a)->stats.total() == 0);
}

TEST_CASE("a failed match records a negative example and spawns nothing") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", never(), pv, 0);
  const std::vector<ConceptId> pa{a};
  e.integrate_regular("b", identity(), pa, 0);

  e.enqueue(ticket_for(a, {1}, 5, 1000));
  const ExecutionReport rep = e.step_engine(10);
  CHECK(rep.executed == 1);
  CHECK(rep.failures == 1);
  CHECK(rep.spawned == 0);
  CHECK(e.find(a)->stats.negatives() == 1);
  CHECK(e.ticket_count() == 0);
}

TEST_CASE("match updates the global reward and the parent's action value") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);

  // Deliver through the sensor so the ticket carries provenance.
  e.on_sensor_event("v", {7}, 5);
  REQUIRE(e.ticket_count() == 1);
  const double q_before = e.find(s)->actions[0].q;
  const ExecutionReport rep = e.step_engine(6);
  REQUIRE(rep.matches == 1);
  // First example: p = 1, information 0, reward 0; Q moves toward r + gamma*V.
  CHECK(e.find(a)->stats.positives() == 1);
  CHECK(e.global_reward().value() == doctest::Approx(0.0));
  CHECK(e.find(s)->actions[0].q != q_before);
}

TEST_CASE("multi-input concepts fire only when slots coincide in time") {
  EngineParams params = quiet_params();
  params.join_window = 50;
  Engine e(params, 1);
  const auto l = e.add_sensor("left", "left", 1);
  const auto r = e.add_sensor("right", "right", 1);
  const std::vector<ConceptId> ps{l, r};
  e.integrate_regular("pair", identity2(), ps, 0);

  e.on_sensor_event("left", {1}, 0);
  CHECK(e.ticket_count() == 0);  // one slot still empty
  e.on_sensor_event("right", {2}, 200);
  CHECK(e.ticket_count() == 0);  // left data too stale by then
  e.on_sensor_event("left", {3}, 210);
  CHECK(e.ticket_count() == 1);  // coincidence within the window

  auto rep = e.step_engine(211);
  CHECK(rep.matches == 1);
}

TEST_CASE("actuator request activates, commands the world and updates the terminal action") {
  EngineParams params = quiet_params();
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  e.add_template(
      ActuatorTemplate{"arm", 1, {1}, actuator::CostModel{10.0, 0.0}});
  const std::vector<ConceptId> pa{a};
  const auto t = e.integrate_actuator_copy("arm", pa, 0);
  REQUIRE(e.find(t));

  int commands = 0;
  e.set_actuation_sink([&](const std::string& id, std::span<const IntVec> in,
                           TimeMs) {
    CHECK(id == "arm");
    REQUIRE(in.size() == 1);
    CHECK(in[0] == IntVec{42});
    ++commands;
  });

  e.enqueue(ticket_for(a, {42}, 5, 1000));
  e.step_engine(10);  // a matches, spawns request for the copy
  REQUIRE(e.ticket_count() == 1);
  const double q_before = e.find(a)->actions[0].q;
  const ExecutionReport rep = e.step_engine(11);
  CHECK(rep.requests == 1);
  CHECK(rep.activations == 1);  // resources far above cost
  CHECK(commands == 1);
  CHECK(e.live_activations() == 1);
  // q moves toward gamma * A = 0.9 * 1.0
  const double q_after = e.find(a)->actions[0].q;
  CHECK(q_after > q_before);
  e.audit();
}

TEST_CASE("undersized actuator requests are dropped at request time") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  e.add_template(
      ActuatorTemplate{"arm", 1, {2}, actuator::CostModel{10.0, 0.0}});
  const std::vector<ConceptId> pa{a};
  e.integrate_actuator_copy("arm", pa, 0);

  int commands = 0;
  e.set_actuation_sink(
      [&](const std::string&, std::span<const IntVec>, TimeMs) { ++commands; });
  e.enqueue(ticket_for(a, {42}, 5, 1000));  // identity emits 1 element < 2
  e.step_engine(10);
  e.step_engine(11);
  CHECK(commands == 0);
  CHECK(e.live_activations() == 0);
}

TEST_CASE("settled value updates share the reward delta and prune dead copies") {
  EngineParams params = quiet_params();
  params.act.settle_delay = 100;
  params.act.initial_value = 0.2;
  params.act.threshold = 0.05;
  params.act.alpha = 0.5;
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  e.add_template(
      ActuatorTemplate{"leg", 1, {1}, actuator::CostModel{50.0, 0.0}});
  const std::vector<ConceptId> pa{a};
  const auto t = e.integrate_actuator_copy("leg", pa, 0);

  e.enqueue(ticket_for(a, {9}, 5, 1000));
  e.step_engine(10);
  e.step_engine(11);  // activation at t=11, X = 0.5 bits
  REQUIRE(e.live_activations() == 1);

  CHECK(e.settle_actuators(50).empty());  // not settled yet
  const auto removed = e.settle_actuators(111);
  // dR = 0 so A drops by alpha*X = 0.25 -> 0.2 - 0.25 < threshold: removed
  REQUIRE(removed.size() == 1);
  CHECK(removed[0] == t);
  CHECK(e.live_activations() == 0);
  CHECK(!e.find(t));
  CHECK(e.find(a)->actions.empty());  // no dangling action
  e.audit();
}

TEST_CASE("pruning removes the subtree but not independently linked copies") {
  EngineParams params = quiet_params();
  params.grace_period = 0;
  params.usage_threshold = 0.5;  // everything idle gets pruned
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto ctx1 = e.integrate_regular("ctx1", identity(), pv, 0);
  const auto ctx2 = e.integrate_regular("ctx2", identity(), pv, 0);
  e.add_template(ActuatorTemplate{"arm", 1, {0}, actuator::CostModel{}});
  const std::vector<ConceptId> p1{ctx1}, p2{ctx2};
  const auto t1 = e.integrate_actuator_copy("arm", p1, 0);
  const auto t2 = e.integrate_actuator_copy("arm", p2, 0);

  // ctx2 works hard, ctx1 never runs
  for (int i = 0; i < 100; ++i) {
    e.enqueue(ticket_for(ctx2, {1}, 5, 100000));
    e.step_engine(100 + i);
  }
  const auto removed = e.prune(10000);
  CHECK(std::find(removed.begin(), removed.end(), ctx1) != removed.end());
  CHECK(std::find(removed.begin(), removed.end(), t1) != removed.end());
  CHECK(!e.find(t1));     // cascaded with its context
  CHECK(e.find(t2));      // the other copy survives
  CHECK(e.find(t2)->copy->value() == doctest::Approx(1.0));
  e.audit();
}

TEST_CASE("fresh concepts are never pruned inside the grace period") {
  EngineParams params = quiet_params();
  params.grace_period = 10000;
  params.usage_threshold = 1.0;
  params.value_threshold = 1.0;
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  e.integrate_regular("fresh", identity(), pv, 5000);
  CHECK(e.prune(9000).empty());
  CHECK(e.prune(15001).size() == 1);
}

TEST_CASE("low-value concepts are pruned after grace") {
  EngineParams params = quiet_params();
  params.grace_period = 100;
  params.value_threshold = 0.5;  // initial q = 0.1 < 0.5
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  const std::vector<ConceptId> pa{a};
  e.integrate_regular("b", identity(), pa, 0);
  const auto removed = e.prune(200);
  CHECK(removed.size() == 2);  // a and its dependent subtree
  e.audit();
}

TEST_CASE("step accounting never exceeds the granted budgets") {
  Engine e(quiet_params(), 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  const auto loop =
      e.integrate_regular("loop", vm::parse_codelet("ARITY 1;LOAD 0 0;EMIT;JMP -2;MATCH"), pv, 0);
  for (int i = 0; i < 50; ++i) {
    e.enqueue(ticket_for(a, {1}, 3, 1000, 150));
    e.enqueue(ticket_for(loop, {1}, 4, 1000, 75));
  }
  while (e.ticket_count() > 0) e.step_engine(10);
  CHECK(e.total_consumed() <= e.total_granted());
  CHECK(e.total_granted() == 50 * 225);
}

TEST_CASE("generation integrates only validated codelets and keeps the graph sound") {
  EngineParams params = quiet_params();
  params.generation_rate = 500.0;
  Engine e(params, 42);
  e.add_sensor("v", "v", 2);
  e.run_generation(2000);  // one second's worth of candidates
  CHECK(e.generated_count() >= 900);
  CHECK(e.generation_accepted() > 0);
  CHECK(e.generation_accepted() < e.generated_count());
  e.audit();
}

TEST_CASE("parallel drain matches the accounting invariants") {
  EngineParams params = quiet_params();
  params.workers = 4;
  Engine e(params, 3);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  const auto b = e.integrate_regular("b", never(), pv, 0);
  for (int i = 0; i < 200; ++i) {
    e.enqueue(ticket_for(a, {static_cast<Word>(i)}, 1 + (i % 7), 100000));
    e.enqueue(ticket_for(b, {static_cast<Word>(i)}, 1 + (i % 5), 100000));
  }
  const ExecutionReport rep = e.drain(10, 100000);
  CHECK(rep.executed == 400);
  CHECK(rep.matches == 200);
  CHECK(rep.failures == 200);
  CHECK(e.find(a)->stats.positives() == 200);
  CHECK(e.find(b)->stats.negatives() == 200);
  CHECK(e.total_consumed() <= e.total_granted());
  e.audit();
}

TEST_CASE("simultaneous value updates share one reward delta") {
  EngineParams params = quiet_params();
  params.act.settle_delay = 300;
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto ctx1 = e.integrate_regular("ctx1", identity(), pv, 0);
  const auto ctx2 = e.integrate_regular("ctx2", identity(), pv, 0);
  e.add_template(
      ActuatorTemplate{"arm", 1, {1}, actuator::CostModel{10.0, 0.0}});
  const std::vector<ConceptId> p1{ctx1}, p2{ctx2};
  const auto t1 = e.integrate_actuator_copy("arm", p1, 0);
  const auto t2 = e.integrate_actuator_copy("arm", p2, 0);

  // Both copies activate in the same tick (cost far below resources).
  e.enqueue(ticket_for(ctx1, {0}, 5, 1000));
  e.enqueue(ticket_for(ctx2, {0}, 5, 1000));
  e.drain(0, 10);
  REQUIRE(e.live_activations() == 2);

  // Raise the global reward, then settle both in one pass: each update
  // must use delta = 1/2, so the shares of the change sum to one.
  e.global_reward().update(2.0, 1000);
  e.settle_actuators(1000);
  CHECK(e.live_activations() == 0);
  // A' = 1 + alpha * (0.5 * 2.0 - 10/100) = 1.09 for each copy
  CHECK(e.find(t1)->copy->value() == doctest::Approx(1.09).epsilon(1e-12));
  CHECK(e.find(t2)->copy->value() == doctest::Approx(1.09).epsilon(1e-12));
}

TEST_CASE("graph stays sound through generation, churn and pruning") {
  EngineParams params;
  params.generation_rate = 200.0;
  params.grace_period = 500;
  params.usage_threshold = 2.0;  // aggressive churn
  params.value_threshold = 0.01;
  params.explore_interval = 400;
  Engine e(params, 6);
  e.add_sensor("v", "v", 3);
  e.add_template(
      ActuatorTemplate{"arm", 1, {0}, actuator::CostModel{15.0, 0.1}});
  int commands = 0;
  e.set_actuation_sink(
      [&](const std::string&, std::span<const IntVec>, TimeMs) { ++commands; });

  Rng rng(99);
  for (TimeMs t = 1; t <= 20000; ++t) {
    if (t % 17 == 0) {
      IntVec v;
      for (int i = 0; i < 3; ++i)
        v.push_back(static_cast<Word>(rng.below(201)) - 100);
      e.on_sensor_event("v", v, t);
    }
    e.drain(t, 8);
    e.settle_actuators(t);
    e.run_generation(t);
    e.run_exploration(t);
    if (t % 250 == 0) {
      e.prune(t);
      e.audit();  // no dangling links after any prune
    }
  }
  e.audit();
  CHECK(e.generated_count() > 3500);
  CHECK(e.total_consumed() <= e.total_granted());
}

TEST_CASE("the per-template copy limit is enforced at integrate time") {
  EngineParams params = quiet_params();
  params.act.max_copies = 2;
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular("a", identity(), pv, 0);
  const auto b = e.integrate_regular("b", identity(), pv, 0);
  const auto c = e.integrate_regular("c", identity(), pv, 0);
  e.add_template(ActuatorTemplate{"arm", 1, {0}, actuator::CostModel{}});
  const std::vector<ConceptId> p1{a}, p2{b}, p3{c};
  e.integrate_actuator_copy("arm", p1, 0);
  e.integrate_actuator_copy("arm", p2, 0);
  try {
    e.integrate_actuator_copy("arm", p3, 0);
    FAIL("expected CopyLimit");
  } catch (const IntegrateError& err) {
    CHECK(err.kind() == IntegrateErrorKind::kCopyLimit);
  }
  e.audit();
}
