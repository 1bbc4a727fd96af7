#pragma once
#include "biphoton/qutrit.hpp"

namespace biphoton {

/// Mode indices of the 4-mode space behind the nonpolarizing splitter.
inline constexpr int kArm1H = 0;
inline constexpr int kArm1V = 1;
inline constexpr int kArm2H = 2;
inline constexpr int kArm2V = 3;

/// The polarization filters in the two output arms. The two modes need not
/// be mutually orthogonal.
struct DetectorTuning {
  PolarizationMode arm1_mode;
  PolarizationMode arm2_mode;

  /// The biphoton the device is tuned to detect.
  BiphotonState tuned_state() const { return from_modes(arm1_mode, arm2_mode); }
};

/// Coincidence observable in its two reported forms.
struct CoincidenceResult {
  Complex amplitude;             ///< detection amplitude of (1 in arm-1 filter, 1 in arm-2 filter)
  double exact_probability;      ///< |amplitude|^2, per incident pair
  double overlap_squared;        ///< |<tuned | input>|^2
  double same_arm_probability;   ///< both photons into one arm (lost to coincidences)
};

/// The fixed 4x4 balanced-splitter map: a_H -> (a_1H + i a_2H)/sqrt2 and the
/// same for V. Phase convention is i on the reflected arm and is not
/// configurable; other conventions differ only by unobservable phases.
ModeMap splitter_map();

/// Input biphoton placed in arm 1 of the 4-mode space, before the splitter.
FockState embed_input(const BiphotonState& input);

/// State behind the splitter; normalized, photon number 2.
FockState split(const BiphotonState& input);

/// Exact per-pair coincidence probability for the given tuning, together
/// with the overlap-squared form. The two are tied by
///   exact = overlap_squared * (1 + |<a|b>|^2) / 4.
CoincidenceResult coincidence_probability(const BiphotonState& input,
                                          const DetectorTuning& tuning);

/// Coincidence probability computed from any two-mode factorization (c, d)
/// of the input instead of through the Fock expansion:
///   |<a|c><b|d> + <a|d><b|c>|^2 / (4 (1 + |<c|d>|^2)).
/// Agrees with the Fock route for every valid factorization.
double coincidence_probability_paired(const DetectorTuning& tuning,
                                      const PolarizationMode& c, const PolarizationMode& d);

/// True iff the exact coincidence probability vanishes below tol^2;
/// equivalent to is_orthogonal(tuned_state, input).
bool orthogonality_test(const BiphotonState& input, const DetectorTuning& tuning,
                        double tol = 1e-10);

/// Expected photon number in the analyzer's mode of the given arm (1 or 2)
/// behind the splitter; equals (2 + S . n)/4 for input Stokes vector S and
/// analyzer direction n.
double singles_intensity(const BiphotonState& input, int arm, const PolarizationMode& analyzer);

struct VisibilityScan {
  double max;
  double min;
  double visibility;  ///< (max - min) / (max + min); equals the degree of polarization
};

/// Extremize the singles intensity over analyzer settings. The extremes lie
/// along the +-Stokes directions; intensities there are evaluated exactly.
VisibilityScan visibility_scan(const BiphotonState& input, int arm);

}  // namespace biphoton
