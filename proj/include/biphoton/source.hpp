#pragma once
#include <array>

#include "biphoton/qutrit.hpp"

namespace biphoton {

/// Which qutrit basis component an interferometer arm produces.
enum class ArmBasis { TwoZero, OneOne, ZeroTwo };

/// One arm of the three-arm source: pump field amplitude (arbitrary units),
/// mirror-set phase, and the basis component the arm's crystal emits.
struct ArmSetting {
  double pump_amplitude = 0.0;
  double phase = 0.0;
  ArmBasis basis_state = ArmBasis::TwoZero;
};

/// Three arms, one per basis component.
struct SourceConfig {
  std::array<ArmSetting, 3> arms;

  /// Throws ConfigError if a basis component is missing or duplicated, or if
  /// any pump amplitude is negative.
  void validate() const;
};

/// Low-gain emission: c_i proportional to pump_amplitude * e^{i phase} of the
/// arm producing component i, normalized. Throws AllArmsDark when every pump
/// is off.
BiphotonState emit(const SourceConfig& config);

/// Arm settings reproducing the target state: amplitudes |c_i|, phases
/// arg(c_i). emit(settings_for(t)) == t including global phase.
SourceConfig settings_for(const BiphotonState& target);

}  // namespace biphoton
