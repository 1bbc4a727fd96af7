#include "biphoton/braun_twiss.hpp"

#include <cmath>

namespace biphoton {

namespace {

const double kInvSqrt2 = std::sqrt(0.5);

/// amplitude-weighted sum of two states from the same space
FockState combine(const FockState& lhs, Complex wl, const FockState& rhs, Complex wr) {
  FockState out(lhs.mode_count(), lhs.cutoff());
  for (const auto& [occ, amp] : lhs.amplitudes()) out.add_term(occ, wl * amp);
  for (const auto& [occ, amp] : rhs.amplitudes()) out.add_term(occ, wr * amp);
  return out;
}

/// a^dag(mode) acting on `state`, with the mode's H/V components living on
/// Fock modes (h_index, v_index).
FockState create_in_arm(const FockState& state, const PolarizationMode& mode, int h_index,
                        int v_index) {
  const auto [h, v] = mode.jones();
  return combine(create(state, h_index), h, create(state, v_index), v);
}

void check_arm(int arm) {
  if (arm != 1 && arm != 2) throw ConfigError("arm must be 1 or 2");
}

PolarizationMode mode_from_direction(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  const double theta = std::acos(z / r);
  const double phi = std::atan2(y, x);
  return PolarizationMode(theta, phi);
}

}  // namespace

ModeMap splitter_map() {
  const Complex t{kInvSqrt2, 0.0};
  const Complex r{0.0, kInvSqrt2};
  const Complex o{0.0, 0.0};
  return ModeMap(4, {t, o, r, o,   //
                     o, t, o, r,   //
                     r, o, t, o,   //
                     o, r, o, t});
}

FockState embed_input(const BiphotonState& input) {
  FockState psi(4, 2);
  psi.add_term({2, 0, 0, 0}, input.c1);
  psi.add_term({1, 1, 0, 0}, input.c2);
  psi.add_term({0, 2, 0, 0}, input.c3);
  return psi;
}

FockState split(const BiphotonState& input) {
  return apply_mode_map(embed_input(input), splitter_map());
}

CoincidenceResult coincidence_probability(const BiphotonState& input,
                                          const DetectorTuning& tuning) {
  const FockState behind = split(input);

  // <1 in arm-1 filter mode, 1 in arm-2 filter mode | behind>
  const FockState detection =
      create_in_arm(create_in_arm(vacuum(4, 2), tuning.arm1_mode, kArm1H, kArm1V),
                    tuning.arm2_mode, kArm2H, kArm2V);
  const Complex amplitude = inner(detection, behind);

  const double same_arm = outcome_probability(behind, [](const OccupationVector& occ) {
    return occ[kArm1H] + occ[kArm1V] == 2 || occ[kArm2H] + occ[kArm2V] == 2;
  });

  const Complex tuned_overlap = overlap(tuning.tuned_state(), input);
  return CoincidenceResult{amplitude, std::norm(amplitude), std::norm(tuned_overlap), same_arm};
}

double coincidence_probability_paired(const DetectorTuning& tuning, const PolarizationMode& c,
                                      const PolarizationMode& d) {
  const Complex ac = mode_overlap(tuning.arm1_mode, c);
  const Complex bd = mode_overlap(tuning.arm2_mode, d);
  const Complex ad = mode_overlap(tuning.arm1_mode, d);
  const Complex bc = mode_overlap(tuning.arm2_mode, c);
  const double pair_norm_sq = 1.0 + std::norm(mode_overlap(c, d));
  return std::norm(ac * bd + ad * bc) / (4.0 * pair_norm_sq);
}

bool orthogonality_test(const BiphotonState& input, const DetectorTuning& tuning, double tol) {
  return coincidence_probability(input, tuning).exact_probability < tol * tol;
}

double singles_intensity(const BiphotonState& input, int arm, const PolarizationMode& analyzer) {
  check_arm(arm);
  const FockState behind = split(input);
  const int h_index = arm == 1 ? kArm1H : kArm2H;
  const int v_index = arm == 1 ? kArm1V : kArm2V;
  const auto [h, v] = analyzer.jones();
  // <m^dag m> = || m |psi> ||^2 for the filtered mode's annihilator m
  const FockState lowered =
      combine(annihilate(behind, h_index), std::conj(h), annihilate(behind, v_index),
              std::conj(v));
  return lowered.squared_norm();
}

VisibilityScan visibility_scan(const BiphotonState& input, int arm) {
  check_arm(arm);
  const auto stokes = mean_stokes(input);
  const double len = std::sqrt(stokes[0] * stokes[0] + stokes[1] * stokes[1] +
                               stokes[2] * stokes[2]);
  if (len < 1e-14) {
    // Unpolarized: the scan is flat.
    const double flat = singles_intensity(input, arm, PolarizationMode::horizontal());
    return {flat, flat, 0.0};
  }
  const PolarizationMode along = mode_from_direction(stokes[0], stokes[1], stokes[2]);
  const PolarizationMode against = mode_from_direction(-stokes[0], -stokes[1], -stokes[2]);
  const double max = singles_intensity(input, arm, along);
  const double min = singles_intensity(input, arm, against);
  return {max, min, (max - min) / (max + min)};
}

}  // namespace biphoton
