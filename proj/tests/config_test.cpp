#include <stdexcept>

#include "cogent/config.hpp"
#include "doctest.h"

using namespace cogent;
using namespace cogent::config;

namespace {

const char* kMinimal = R"(
# a minimal world
[session]
duration_s = 1
seed = 7

[channel.vision]
width = 2
background_rate = 0.02

[actuator.arm]
feedback = true
target = vision
delay_ms = 300
cost_base = 10
cost_per_magnitude = 0.2
min_input_sizes = 1

[concept.bright]
codelet = ARITY 1;LOAD 0 0;PUSH 50;CMP;JLT 3;LOAD 0 0;EMIT;MATCH;FAIL
inputs = vision

[copy.arm_under_bright]
template = arm
inputs = bright

[stimulus]
warmup_s = 1
repetitions = 3
value = 100,55
)";

}  // namespace

TEST_CASE("a complete config parses into typed values") {
  const RunConfig cfg = RunConfig::parse(kMinimal);
  CHECK(cfg.session.seed == 7);
  CHECK(cfg.session.duration_s == doctest::Approx(1.0));
  REQUIRE(cfg.channels.size() == 1);
  CHECK(cfg.channels[0].name == "vision");
  CHECK(cfg.channels[0].width == 2);
  REQUIRE(cfg.actuators.size() == 1);
  CHECK(cfg.actuators[0].feedback.delay == 300);
  CHECK(cfg.actuators[0].min_input_sizes == std::vector<int>{1});
  REQUIRE(cfg.concepts.size() == 1);
  CHECK(cfg.concepts[0].codelet.code.size() == 8);
  CHECK(cfg.concepts[0].inputs == std::vector<std::string>{"vision"});
  REQUIRE(cfg.copies.size() == 1);
  CHECK(cfg.copies[0].template_id == "arm");
  CHECK(cfg.stimulus.value == IntVec{100, 55});
}

TEST_CASE("defaults hold where the config is silent") {
  const RunConfig cfg = RunConfig::parse(kMinimal);
  CHECK(cfg.engine.learn.alpha == doctest::Approx(0.1));
  CHECK(cfg.engine.learn.gamma == doctest::Approx(0.9));
  CHECK(cfg.engine.rew.beta == doctest::Approx(100.0));
  CHECK(cfg.engine.rew.rho == doctest::Approx(1.0));
  CHECK(cfg.engine.act.settle_delay == 300);
  CHECK(cfg.engine.act.max_copies == 50);
  CHECK(cfg.engine.queue_capacity == 10000);
  CHECK(cfg.engine.ticket_ttl == 500);
  CHECK(cfg.engine.base_resources == 200);
  CHECK(cfg.engine.grace_period == 10000);
  CHECK(cfg.engine.usage_threshold == doctest::Approx(0.1));
}

TEST_CASE("unknown keys and sections are hard errors") {
  CHECK_THROWS_AS(RunConfig::parse("[session]\nduraton_s = 5\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("[sessoin]\nduration_s = 5\n"),
                  std::invalid_argument);
}

TEST_CASE("malformed lines are rejected with line context") {
  CHECK_THROWS_AS(RunConfig::parse("[session\nseed = 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("seed = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("[session]\nseed 1\n"),
                  std::invalid_argument);
}

TEST_CASE("range violations abort before any simulation") {
  CHECK_THROWS_AS(RunConfig::parse("[learning]\nalpha = 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("[learning]\ngamma = 1.0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("[reward]\nrho = -1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("[channel.v]\nwidth = 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      RunConfig::parse("[actuator.a]\nfeedback = true\ncost_base = 1\n"),
      std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("[stimulus]\nrepetitions = 0\n"),
                  std::invalid_argument);
}

TEST_CASE("codelet values may contain semicolons and spaces") {
  const auto cfg = RunConfig::parse(
      "[concept.c]\ncodelet = ARITY 2;LOAD 1 0;EMIT;MATCH\ninputs = a,b\n");
  REQUIRE(cfg.concepts.size() == 1);
  CHECK(cfg.concepts[0].codelet.arity == 2);
  CHECK(cfg.concepts[0].inputs == std::vector<std::string>{"a", "b"});
}
