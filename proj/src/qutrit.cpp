#include "biphoton/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace biphoton {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = std::sqrt(0.5);
constexpr double kDegenerateAmplitude = 1e-12;
constexpr double kComponentSnap = 1e-15;

double wrap_two_pi(double angle) {
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

Complex snap(Complex value) {
  double re = std::abs(value.real()) < kComponentSnap ? 0.0 : value.real();
  double im = std::abs(value.imag()) < kComponentSnap ? 0.0 : value.imag();
  return {re, im};
}

/// Mode for a Majorana root z = e^{i phi} tan(theta/2).
PolarizationMode mode_from_root(Complex z) {
  return PolarizationMode::from_jones(Complex{1.0, 0.0}, z);
}

}  // namespace

PolarizationMode::PolarizationMode(double theta, double phi) : h_{0.0, 0.0}, v_{0.0, 0.0} {
  // Fold (theta, phi) back onto the sphere.
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > kPi) {
    t = kTwoPi - t;
    phi += kPi;
  }
  const double p = wrap_two_pi(phi);
  const double half = 0.5 * t;
  Complex h{std::cos(half), 0.0};
  Complex v = std::sin(half) * Complex{std::cos(p), std::sin(p)};
  h = snap(h);
  v = snap(v);
  const PolarizationMode canonical = from_jones(h, v);
  h_ = canonical.h_;
  v_ = canonical.v_;
}

PolarizationMode PolarizationMode::from_jones(Complex h, Complex v) {
  const double norm = std::sqrt(std::norm(h) + std::norm(v));
  if (norm < 1e-12) throw ZeroState("Jones vector has (numerically) zero norm");
  h /= norm;
  v /= norm;
  // Strip the global phase by making the dominant component real positive.
  const Complex pivot = std::abs(h) >= std::abs(v) ? h : v;
  const Complex rotation = std::conj(pivot) / std::abs(pivot);
  return PolarizationMode(h * rotation, v * rotation, 0);
}

PolarizationMode PolarizationMode::horizontal() {
  return PolarizationMode(Complex{1.0, 0.0}, Complex{0.0, 0.0}, 0);
}
PolarizationMode PolarizationMode::vertical() {
  return PolarizationMode(Complex{0.0, 0.0}, Complex{1.0, 0.0}, 0);
}
PolarizationMode PolarizationMode::diagonal() {
  return PolarizationMode(Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}, 0);
}
PolarizationMode PolarizationMode::antidiagonal() {
  return PolarizationMode(Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}, 0);
}
PolarizationMode PolarizationMode::right_circular() {
  return PolarizationMode(Complex{kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2}, 0);
}
PolarizationMode PolarizationMode::left_circular() {
  return PolarizationMode(Complex{kInvSqrt2, 0.0}, Complex{0.0, -kInvSqrt2}, 0);
}

PolarizationMode PolarizationMode::named(const std::string& name) {
  if (name == "H") return horizontal();
  if (name == "V") return vertical();
  if (name == "D") return diagonal();
  if (name == "Db") return antidiagonal();
  if (name == "R") return right_circular();
  if (name == "L") return left_circular();
  throw UnknownName("unknown polarization mode '" + name + "' (expected H, V, D, Db, R, L)");
}

double PolarizationMode::theta() const { return 2.0 * std::atan2(std::abs(v_), std::abs(h_)); }

double PolarizationMode::phi() const {
  if (std::abs(v_) == 0.0 || std::abs(h_) == 0.0) return 0.0;  // azimuth undefined at poles
  return wrap_two_pi(std::arg(v_) - std::arg(h_));
}

std::array<double, 3> PolarizationMode::poincare() const {
  const Complex cross = std::conj(h_) * v_;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(h_) - std::norm(v_)};
}

Complex mode_overlap(const PolarizationMode& u, const PolarizationMode& v) {
  const auto [uh, uv] = u.jones();
  const auto [vh, vv] = v.jones();
  return std::conj(uh) * vh + std::conj(uv) * vv;
}

bool same_mode(const PolarizationMode& u, const PolarizationMode& v, double tol) {
  return std::abs(std::abs(mode_overlap(u, v)) - 1.0) < tol;
}

double BiphotonState::squared_norm() const {
  return std::norm(c1) + std::norm(c2) + std::norm(c3);
}

double BiphotonState::norm() const { return std::sqrt(squared_norm()); }

bool BiphotonState::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

BiphotonState BiphotonState::normalized() const {
  const double n = norm();
  if (n < 1e-12) throw ZeroState("cannot normalize a zero biphoton state");
  return {c1 / n, c2 / n, c3 / n};
}

PoincarePair::PoincarePair(PolarizationMode a, PolarizationMode b, double phase)
    : first(a), second(b), global_phase(phase) {
  const double ta = a.theta(), tb = b.theta();
  if (tb < ta || (tb == ta && b.phi() < a.phi())) {
    first = b;
    second = a;
  }
}

BiphotonState from_modes(const PolarizationMode& u, const PolarizationMode& v) {
  const auto [uh, uv] = u.jones();
  const auto [vh, vv] = v.jones();
  const double denom = std::sqrt(1.0 + std::norm(mode_overlap(u, v)));
  return {kSqrt2 * uh * vh / denom, (uh * vv + uv * vh) / denom, kSqrt2 * uv * vv / denom};
}

PoincarePair to_modes(const BiphotonState& state) {
  if (state.norm() < 1e-12) throw ZeroState("cannot factor a zero biphoton state");

  PolarizationMode m1 = PolarizationMode::horizontal();
  PolarizationMode m2 = PolarizationMode::horizontal();
  if (std::abs(state.c1) < kDegenerateAmplitude) {
    m1 = PolarizationMode::vertical();  // leading root at infinity
    if (std::abs(state.c2) < kDegenerateAmplitude) {
      m2 = PolarizationMode::vertical();
    } else {
      m2 = mode_from_root(state.c3 / (kSqrt2 * state.c2));
    }
  } else {
    const Complex a = state.c1 / kSqrt2;
    const Complex b = -state.c2;
    const Complex c = state.c3 / kSqrt2;
    Complex sq = std::sqrt(b * b - 4.0 * a * c);
    // Pick the sqrt branch that avoids cancellation in b + sq.
    if (std::abs(b - sq) > std::abs(b + sq)) sq = -sq;
    const Complex q = -0.5 * (b + sq);
    const Complex z1 = q / a;
    const Complex z2 = std::abs(q) > 0.0 ? c / q : Complex{0.0, 0.0};
    m1 = mode_from_root(z1);
    m2 = mode_from_root(z2);
  }

  PoincarePair pair(m1, m2, 0.0);
  const BiphotonState rebuilt = from_modes(pair.first, pair.second);
  pair.global_phase = std::arg(overlap(rebuilt, state));
  return pair;
}

Complex overlap(const BiphotonState& s1, const BiphotonState& s2) {
  return std::conj(s1.c1) * s2.c1 + std::conj(s1.c2) * s2.c2 + std::conj(s1.c3) * s2.c3;
}

bool is_orthogonal(const BiphotonState& s1, const BiphotonState& s2, double tol) {
  return std::abs(overlap(s1, s2)) < tol;
}

double degree_of_polarization(const BiphotonState& state) {
  const PoincarePair pair = to_modes(state);
  const double cos_half = std::abs(mode_overlap(pair.first, pair.second));
  return 2.0 * cos_half / (1.0 + cos_half * cos_half);
}

std::array<double, 3> mean_stokes(const BiphotonState& state) {
  const FockState psi = to_fock(state);
  const Complex cross = inner(psi, create(annihilate(psi, 1), 0));  // <aH+ aV>
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          number_expectation(psi, 0) - number_expectation(psi, 1)};
}

std::string to_string(NamedState name) {
  switch (name) {
    case NamedState::HV:
      return "HV";
    case NamedState::RL:
      return "RL";
    case NamedState::DDb:
      return "DDb";
    case NamedState::HH:
      return "HH";
    case NamedState::VV:
      return "VV";
  }
  throw UnknownName("unhandled named state");
}

BiphotonState standard_state(NamedState name) {
  using PM = PolarizationMode;
  switch (name) {
    case NamedState::HV:
      return from_modes(PM::horizontal(), PM::vertical());
    case NamedState::RL:
      return from_modes(PM::right_circular(), PM::left_circular());
    case NamedState::DDb:
      return from_modes(PM::diagonal(), PM::antidiagonal());
    case NamedState::HH:
      return from_modes(PM::horizontal(), PM::horizontal());
    case NamedState::VV:
      return from_modes(PM::vertical(), PM::vertical());
  }
  throw UnknownName("unhandled named state");
}

NamedState named_state_from_string(const std::string& name) {
  static const std::unordered_map<std::string, NamedState> lookup = {
      {"HV", NamedState::HV},   {"VH", NamedState::HV},  {"RL", NamedState::RL},
      {"LR", NamedState::RL},   {"DDb", NamedState::DDb}, {"DbD", NamedState::DDb},
      {"DD", NamedState::DDb},  {"HH", NamedState::HH},  {"VV", NamedState::VV},
  };
  const auto it = lookup.find(name);
  if (it == lookup.end()) {
    throw UnknownName("unknown named state '" + name +
                      "' (expected HV, RL, DDb, HH, VV or an alias)");
  }
  return it->second;
}

BiphotonState standard_state(const std::string& name) {
  return standard_state(named_state_from_string(name));
}

BiphotonState random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_state(rng);
}

BiphotonState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    const BiphotonState raw{{gauss(rng), gauss(rng)},
                            {gauss(rng), gauss(rng)},
                            {gauss(rng), gauss(rng)}};
    if (raw.norm() >= 1e-6) return raw.normalized();
  }
}

PolarizationMode random_mode(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    const Complex h{gauss(rng), gauss(rng)};
    const Complex v{gauss(rng), gauss(rng)};
    if (std::sqrt(std::norm(h) + std::norm(v)) >= 1e-6) {
      return PolarizationMode::from_jones(h, v);
    }
  }
}

FockState to_fock(const BiphotonState& state) {
  FockState psi(2, 2);
  psi.add_term({2, 0}, state.c1);
  psi.add_term({1, 1}, state.c2);
  psi.add_term({0, 2}, state.c3);
  return psi;
}

ClosedFormAngles closed_form_angles(const BiphotonState& state) {
  ClosedFormAngles out{};
  const double m1 = std::abs(state.c1);
  const double m2 = std::abs(state.c2);
  const double m3 = std::abs(state.c3);
  const double phi2 = std::arg(state.c2);
  const double phi3 = std::arg(state.c3);
  if (m1 * m3 < 1e-12) return out;  // expressions blow up; nothing to report

  const double ratio = m2 * m2 / (m1 * m3);
  const double radicand = 1.0 + 0.25 * ratio * ratio - ratio * std::cos(2.0 * phi2 - phi3);
  if (radicand >= 0.0) {
    const double arg_acos = 0.5 * ratio - std::sqrt(radicand);
    if (std::abs(arg_acos) <= 1.0) {
      const double half = 0.5 * std::acos(arg_acos);
      out.phi = {wrap_two_pi(0.5 * phi3 + half), wrap_two_pi(0.5 * phi3 - half)};
      out.phi_valid = true;
    }
  }
  if (!out.phi_valid) return out;

  bool theta_ok = true;
  for (int branch = 0; branch < 2; ++branch) {
    const double phi = out.phi[static_cast<size_t>(branch)];
    const double cos_term = std::cos(2.0 * phi - phi3);
    const double inner_sq = m2 * m2 - m1 * m3 * cos_term;
    const double rad = inner_sq * inner_sq - m1 * m1 * m3 * m3;
    const double denom = 1.0 + m2 * m2 - 2.0 * m1 * m3 * cos_term;
    if (rad < 0.0 || std::abs(denom) < 1e-15) {
      theta_ok = false;
      break;
    }
    const double sign = branch == 0 ? 1.0 : -1.0;
    const double arg_acos = (m1 * m1 - m3 * m3 + sign * 2.0 * std::sqrt(rad)) / denom;
    if (std::abs(arg_acos) > 1.0) {
      theta_ok = false;
      break;
    }
    out.theta[static_cast<size_t>(branch)] = std::acos(arg_acos);
  }
  out.theta_valid = theta_ok;
  return out;
}

}  // namespace biphoton
