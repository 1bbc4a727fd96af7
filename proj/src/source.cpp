#include "biphoton/source.hpp"

#include <cmath>

namespace biphoton {

void SourceConfig::validate() const {
  std::array<int, 3> seen{0, 0, 0};
  for (const ArmSetting& arm : arms) {
    if (arm.pump_amplitude < 0.0) throw ConfigError("pump amplitude must be non-negative");
    if (!std::isfinite(arm.pump_amplitude) || !std::isfinite(arm.phase)) {
      throw ConfigError("arm settings must be finite");
    }
    seen[static_cast<size_t>(arm.basis_state)] += 1;
  }
  for (int count : seen) {
    if (count != 1) throw ConfigError("each basis component must appear in exactly one arm");
  }
}

BiphotonState emit(const SourceConfig& config) {
  config.validate();
  std::array<Complex, 3> amplitudes{};
  double total = 0.0;
  for (const ArmSetting& arm : config.arms) {
    const Complex value =
        arm.pump_amplitude * Complex{std::cos(arm.phase), std::sin(arm.phase)};
    amplitudes[static_cast<size_t>(arm.basis_state)] = value;
    total += std::norm(value);
  }
  if (total <= 0.0) throw AllArmsDark("every pump amplitude is zero");
  const double norm = std::sqrt(total);
  return {amplitudes[0] / norm, amplitudes[1] / norm, amplitudes[2] / norm};
}

SourceConfig settings_for(const BiphotonState& target) {
  const std::array<Complex, 3> c{target.c1, target.c2, target.c3};
  SourceConfig config;
  for (size_t i = 0; i < 3; ++i) {
    config.arms[i].basis_state = static_cast<ArmBasis>(i);
    config.arms[i].pump_amplitude = std::abs(c[i]);
    config.arms[i].phase = config.arms[i].pump_amplitude > 0.0 ? std::arg(c[i]) : 0.0;
  }
  return config;
}

}  // namespace biphoton
