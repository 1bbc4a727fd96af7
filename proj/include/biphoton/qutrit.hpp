#pragma once
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include "biphoton/fock.hpp"

namespace biphoton {

/// One photon's polarization as a point on the Poincare sphere, stored as a
/// unit Jones vector (H component, V component) with global phase removed.
///
/// Conventions: H=(1,0), V=(0,1), D=(1,1)/sqrt2, Db=(1,-1)/sqrt2,
/// R=(1,i)/sqrt2, L=(1,-i)/sqrt2.
class PolarizationMode {
 public:
  /// theta in [0, pi] (polar), phi in [0, 2pi) (azimuth); values outside are
  /// folded back onto the sphere. Components whose magnitude falls below
  /// 1e-15 are snapped to zero, so the poles come out exact.
  PolarizationMode(double theta, double phi);

  /// Throws ZeroState if the vector norm is below 1e-12.
  static PolarizationMode from_jones(Complex h, Complex v);

  static PolarizationMode horizontal();
  static PolarizationMode vertical();
  static PolarizationMode diagonal();
  static PolarizationMode antidiagonal();
  static PolarizationMode right_circular();
  static PolarizationMode left_circular();

  /// Accepted names: H, V, D, Db, R, L. Throws UnknownName.
  static PolarizationMode named(const std::string& name);

  std::array<Complex, 2> jones() const { return {h_, v_}; }
  double theta() const;
  double phi() const;

  /// Unit vector (sin t cos p, sin t sin p, cos t); z axis is the H pole.
  std::array<double, 3> poincare() const;

 private:
  PolarizationMode(Complex h, Complex v, int) : h_(h), v_(v) {}
  Complex h_, v_;
};

/// <u|v> of the Jones vectors.
Complex mode_overlap(const PolarizationMode& u, const PolarizationMode& v);

/// Same physical mode: | |<u|v>| - 1 | < tol (global phase ignored).
bool same_mode(const PolarizationMode& u, const PolarizationMode& v, double tol = 1e-12);

/// The qutrit: complex amplitudes over |2,0>, |1,1>, |0,2> in the HV basis.
/// Operations below expect unit norm; global phase is physical here and is
/// never silently stripped.
struct BiphotonState {
  Complex c1, c2, c3;

  double squared_norm() const;
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  /// Throws ZeroState if norm < 1e-12.
  BiphotonState normalized() const;
};

/// Unordered pair of Poincare points plus the global phase that reconciles
/// from_modes(first, second) with the state it was extracted from. Canonical
/// order: ascending theta, ties broken by phi.
struct PoincarePair {
  PolarizationMode first;
  PolarizationMode second;
  double global_phase = 0.0;

  PoincarePair(PolarizationMode a, PolarizationMode b, double phase);
};

/// Two-photon state with one photon in each of the modes u, v:
///   c1 = sqrt2 uH vH / D,  c2 = (uH vV + uV vH) / D,  c3 = sqrt2 uV vV / D,
/// D = sqrt(1 + |<u|v>|^2). Symmetric in (u, v); output is normalized.
BiphotonState from_modes(const PolarizationMode& u, const PolarizationMode& v);

/// Factor a qutrit back into its pair of Poincare points by solving
///   (c1/sqrt2) z^2 - c2 z + c3/sqrt2 = 0,   z = e^{i phi} tan(theta/2).
/// |c1| < 1e-12 sends one root to infinity (theta = pi); if |c2| is also
/// below 1e-12 both points sit at the V pole. Throws ZeroState on zero input.
PoincarePair to_modes(const BiphotonState& state);

/// Componentwise Hermitian overlap <s1|s2>.
Complex overlap(const BiphotonState& s1, const BiphotonState& s2);

bool is_orthogonal(const BiphotonState& s1, const BiphotonState& s2, double tol = 1e-10);

/// P = 2 cos(a/2) / (1 + cos^2(a/2)) with cos(a/2) = |<u|v>| over the
/// state's Poincare pair: 0 for antipodal points, 1 for coincident ones.
double degree_of_polarization(const BiphotonState& state);

/// (  <aH+ aV + aV+ aH>, <-i aH+ aV + i aV+ aH>, <nH - nV>  ) on the
/// two-photon state, computed through the Fock engine; |S| <= 2.
std::array<double, 3> mean_stokes(const BiphotonState& state);

enum class NamedState { HV, RL, DDb, HH, VV };

std::string to_string(NamedState name);

/// String vocabulary mirrors the mode letters: "HV", "RL", "DDb", "HH", "VV"
/// plus order-swapped aliases and "DD" as shorthand for the +-45 degree pair
/// ("DDb"). Throws UnknownName.
NamedState named_state_from_string(const std::string& name);

BiphotonState standard_state(NamedState name);
BiphotonState standard_state(const std::string& name);

/// Haar-uniform on the unit sphere of the amplitude space; deterministic per
/// seed.
BiphotonState random_state(std::uint64_t seed);
BiphotonState random_state(std::mt19937_64& rng);

/// Uniform over the Poincare sphere.
PolarizationMode random_mode(std::mt19937_64& rng);

/// Embed into the 2-mode Fock space (mode 0 = H, mode 1 = V, cutoff 2).
FockState to_fock(const BiphotonState& state);

/// Diagnostic evaluation of the closed-form angle expressions for the pair
/// (an alternative to the quadratic-root inversion). The branch pairing is
/// ambiguous for some phase configurations, so results are reported for
/// comparison and never fed back into to_modes.
struct ClosedFormAngles {
  std::array<double, 2> phi;
  std::array<double, 2> theta;
  bool phi_valid = false;    // arccos argument within [-1, 1]
  bool theta_valid = false;  // radicand nonnegative and arccos in range
};
ClosedFormAngles closed_form_angles(const BiphotonState& state);

}  // namespace biphoton
