#include <cmath>
#include <random>

#include <doctest.h>

#include "biphoton/source.hpp"

using namespace biphoton;

namespace {
double state_distance(const BiphotonState& a, const BiphotonState& b) {
  return std::sqrt(std::norm(a.c1 - b.c1) + std::norm(a.c2 - b.c2) + std::norm(a.c3 - b.c3));
}
}  // namespace

TEST_SUITE("source") {
  TEST_CASE("two equal pumps with a quadrature phase") {
    SourceConfig config;
    config.arms[0] = {1.0, 0.0, ArmBasis::TwoZero};
    config.arms[1] = {1.0, std::acos(-1.0) / 2.0, ArmBasis::OneOne};
    config.arms[2] = {0.0, 0.0, ArmBasis::ZeroTwo};

    const BiphotonState psi = emit(config);
    const double inv_sqrt2 = std::sqrt(0.5);
    CHECK(std::abs(psi.c1 - Complex{inv_sqrt2, 0.0}) < 1e-14);
    CHECK(std::abs(psi.c2 - Complex{0.0, inv_sqrt2}) < 1e-14);
    CHECK(std::abs(psi.c3) == 0.0);
    CHECK(psi.is_normalized());
  }

  TEST_CASE("arm order does not matter, only the basis labels do") {
    SourceConfig config;
    config.arms[0] = {0.3, 1.0, ArmBasis::ZeroTwo};
    config.arms[1] = {0.9, 0.2, ArmBasis::TwoZero};
    config.arms[2] = {0.5, 2.0, ArmBasis::OneOne};

    SourceConfig swapped;
    swapped.arms[0] = config.arms[2];
    swapped.arms[1] = config.arms[0];
    swapped.arms[2] = config.arms[1];

    CHECK(state_distance(emit(config), emit(swapped)) < 1e-15);
  }

  TEST_CASE("settings_for then emit reproduces the state with its phase") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
      const BiphotonState target = random_state(rng);
      const BiphotonState round = emit(settings_for(target));
      CHECK(state_distance(round, target) < 1e-12);
    }
  }

  TEST_CASE("settings_for reads off moduli and phases") {
    const BiphotonState target = standard_state(NamedState::RL);
    const SourceConfig config = settings_for(target);
    CHECK(config.arms[0].pump_amplitude == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(config.arms[1].pump_amplitude == doctest::Approx(0.0));
    CHECK(config.arms[2].pump_amplitude == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  }

  TEST_CASE("validation rejects broken configurations") {
    SourceConfig duplicate;
    duplicate.arms[0] = {1.0, 0.0, ArmBasis::TwoZero};
    duplicate.arms[1] = {1.0, 0.0, ArmBasis::TwoZero};
    duplicate.arms[2] = {1.0, 0.0, ArmBasis::ZeroTwo};
    CHECK_THROWS_AS(duplicate.validate(), ConfigError);

    SourceConfig negative;
    negative.arms[0] = {-1.0, 0.0, ArmBasis::TwoZero};
    negative.arms[1] = {1.0, 0.0, ArmBasis::OneOne};
    negative.arms[2] = {1.0, 0.0, ArmBasis::ZeroTwo};
    CHECK_THROWS_AS(negative.validate(), ConfigError);

    SourceConfig dark;
    dark.arms[0] = {0.0, 0.0, ArmBasis::TwoZero};
    dark.arms[1] = {0.0, 0.0, ArmBasis::OneOne};
    dark.arms[2] = {0.0, 0.0, ArmBasis::ZeroTwo};
    CHECK_THROWS_AS(emit(dark), AllArmsDark);
  }
}
