#include <cmath>
#include <string>

#include <doctest.h>

#include "biphoton/io.hpp"

using namespace biphoton;

namespace {
bool message_mentions(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("state literals: named, amplitudes, modes") {
    const BiphotonState named = parse_state_json(R"({"named": "HV"})");
    CHECK(named.c2 == Complex{1.0, 0.0});

    const BiphotonState amps =
        parse_state_json(R"({"c": [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]})");
    CHECK(amps.c2 == Complex{1.0, 0.0});

    const BiphotonState modes = parse_state_json(
        R"({"modes": [{"named": "R"}, {"named": "L"}]})");
    CHECK(std::abs(modes.c1 - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(modes.c2) < 1e-14);
  }

  TEST_CASE("amplitude states are renormalized after a tolerant check") {
    // off by ~1e-9: accepted, then exactly unit norm
    const BiphotonState nearly =
        parse_state_json(R"({"c": [[0.6, 0.0], [0.800000001, 0.0], [0.0, 0.0]]})");
    CHECK(std::abs(nearly.norm() - 1.0) < 1e-15);

    // off by far more than 1e-6: rejected
    CHECK_THROWS_AS(parse_state_json(R"({"c": [[1.0, 0.0], [1.0, 0.0], [0.0, 0.0]]})"),
                    ValidationError);
  }

  TEST_CASE("mode literals: named, angles, jones") {
    CHECK(same_mode(parse_mode_json(R"({"named": "D"})"), PolarizationMode::diagonal()));
    CHECK(same_mode(parse_mode_json(R"({"theta": 1.5707963267948966, "phi": 0.0})"),
                    PolarizationMode::diagonal(), 1e-9));
    CHECK(same_mode(parse_mode_json(R"({"jones": [[1.0, 0.0], [0.0, 1.0]]})"),
                    PolarizationMode::right_circular()));
    CHECK_THROWS_AS(parse_mode_json(R"({"radius": 1.0})"), ConfigError);
  }

  TEST_CASE("unknown keys are named in the diagnostic") {
    try {
      parse_state_json(R"({"named": "HV", "extra": 1})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(message_mentions(e, "'extra'"));
    }

    try {
      parse_experiment(R"({"state": {"named": "HV"},
                           "tuning": {"arm1": {"named": "H"}, "arm2": {"named": "V"}},
                           "typo_section": {}})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(message_mentions(e, "'typo_section'"));
    }
  }

  TEST_CASE("experiment files require state and tuning") {
    CHECK_THROWS_AS(parse_experiment(R"({"state": {"named": "HV"}})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment("not json at all"), ConfigError);
    CHECK_THROWS_AS(load_experiment("/nonexistent/path.json"), ConfigError);
  }

  TEST_CASE("full experiment file with all four sections") {
    const ExperimentFile file = parse_experiment(R"({
      "state": {"named": "DDb"},
      "tuning": {"arm1": {"named": "D"}, "arm2": {"named": "Db"}},
      "source": {"arms": [
        {"amplitude": 0.7071067811865476, "phase": 0.0, "basis": "20"},
        {"amplitude": 0.0, "phase": 0.0, "basis": "11"},
        {"amplitude": 0.7071067811865476, "phase": 3.141592653589793, "basis": "02"}
      ]},
      "montecarlo": {"integration_time": 10.0, "observable": "exact", "seed": 3}
    })");

    CHECK(std::abs(file.state.c1 - std::sqrt(0.5)) < 1e-14);
    CHECK(same_mode(file.tuning.arm1_mode, PolarizationMode::diagonal()));
    REQUIRE(file.source.has_value());
    const BiphotonState emitted = emit(*file.source);
    CHECK(std::abs(overlap(emitted, file.state) - Complex{1.0, 0.0}) < 1e-12);
    REQUIRE(file.montecarlo.has_value());
    CHECK(file.montecarlo->integration_time == 10.0);
    CHECK(file.montecarlo->observable == Observable::Exact);
    CHECK(file.montecarlo->seed == 3);
    // untouched keys keep their calibrated defaults
    CHECK(file.montecarlo->pair_rate == 370.0);
  }

  TEST_CASE("montecarlo section rejects bad values") {
    const std::string prefix = R"({"state": {"named": "HV"},
      "tuning": {"arm1": {"named": "H"}, "arm2": {"named": "V"}},
      "montecarlo": )";
    CHECK_THROWS_AS(parse_experiment(prefix + R"({"seed": -4}})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment(prefix + R"({"efficiency1": 2.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_experiment(prefix + R"({"observable": "fancy"}})"), UnknownName);
  }

  TEST_CASE("source section validates basis labels") {
    const std::string text = R"({
      "state": {"named": "HV"},
      "tuning": {"arm1": {"named": "H"}, "arm2": {"named": "V"}},
      "source": {"arms": [
        {"amplitude": 1.0, "phase": 0.0, "basis": "22"},
        {"amplitude": 0.0, "phase": 0.0, "basis": "11"},
        {"amplitude": 0.0, "phase": 0.0, "basis": "02"}
      ]}
    })";
    CHECK_THROWS_AS(parse_experiment(text), ConfigError);
  }

  TEST_CASE("bare config documents load with defaults") {
    const ExperimentConfig config = parse_config_json(R"({"seed": 42})");
    CHECK(config.seed == 42);
    CHECK(config.pair_rate == 370.0);
    CHECK(config.coincidence_window == 3e-7);
    CHECK(config.observable == Observable::Overlap2);
    CHECK_THROWS_AS(parse_config_json(R"({"pair_rate": "fast"})"), ConfigError);
  }

  TEST_CASE("to_json round-trips states and configs") {
    const BiphotonState dd = standard_state(NamedState::DDb);
    const BiphotonState back = parse_state_json(to_json(dd));
    CHECK(std::abs(back.c1 - dd.c1) < 1e-12);
    CHECK(std::abs(back.c3 - dd.c3) < 1e-12);

    ExperimentConfig config;
    config.observable = Observable::Exact;
    config.seed = 77;
    const ExperimentConfig round = parse_config_json(to_json(config));
    CHECK(round.observable == Observable::Exact);
    CHECK(round.seed == 77);
    CHECK(round.pair_rate == config.pair_rate);

    const PolarizationMode mode = PolarizationMode::left_circular();
    CHECK(same_mode(parse_mode_json(to_json(mode)), mode));
  }
}
