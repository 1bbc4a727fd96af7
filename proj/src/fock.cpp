#include "biphoton/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace biphoton {

namespace {

int occupation_total(const OccupationVector& occ) {
  return std::accumulate(occ.begin(), occ.end(), 0);
}

void check_same_space(const FockState& lhs, const FockState& rhs) {
  if (lhs.mode_count() != rhs.mode_count() || lhs.cutoff() != rhs.cutoff()) {
    std::ostringstream msg;
    msg << "Fock states live in different spaces: (" << lhs.mode_count() << " modes, cutoff "
        << lhs.cutoff() << ") vs (" << rhs.mode_count() << " modes, cutoff " << rhs.cutoff()
        << ")";
    throw DimensionMismatch(msg.str());
  }
}

void check_mode_index(const FockState& state, int mode) {
  if (mode < 0 || mode >= state.mode_count()) {
    std::ostringstream msg;
    msg << "mode index " << mode << " out of range for " << state.mode_count() << " modes";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

FockState::FockState(int mode_count, int cutoff) : mode_count_(mode_count), cutoff_(cutoff) {
  if (mode_count < 1) throw DimensionMismatch("mode_count must be >= 1");
  if (cutoff < 0) throw DimensionMismatch("cutoff must be >= 0");
}

void FockState::add_term(const OccupationVector& occupation, Complex amplitude) {
  if (static_cast<int>(occupation.size()) != mode_count_) {
    std::ostringstream msg;
    msg << "occupation vector has " << occupation.size() << " entries, expected " << mode_count_;
    throw DimensionMismatch(msg.str());
  }
  for (int n : occupation) {
    if (n < 0) throw DimensionMismatch("negative occupation number");
  }
  if (occupation_total(occupation) > cutoff_) {
    std::ostringstream msg;
    msg << "occupation holds " << occupation_total(occupation) << " photons, cutoff is "
        << cutoff_;
    throw CutoffExceeded(msg.str());
  }
  auto it = amplitudes_.find(occupation);
  if (it == amplitudes_.end()) {
    if (std::abs(amplitude) > kAmplitudePruneThreshold) amplitudes_.emplace(occupation, amplitude);
    return;
  }
  it->second += amplitude;
  if (std::abs(it->second) <= kAmplitudePruneThreshold) amplitudes_.erase(it);
}

Complex FockState::amplitude(const OccupationVector& occupation) const {
  auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? Complex{0.0, 0.0} : it->second;
}

double FockState::squared_norm() const {
  double total = 0.0;
  for (const auto& [occ, amp] : amplitudes_) total += std::norm(amp);
  return total;
}

bool FockState::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

FockState FockState::normalized(double zero_tol) const {
  const double norm = std::sqrt(squared_norm());
  if (norm < zero_tol) throw ZeroState("cannot normalize a zero Fock state");
  return scaled(Complex{1.0 / norm, 0.0});
}

FockState FockState::scaled(Complex factor) const {
  FockState out(mode_count_, cutoff_);
  for (const auto& [occ, amp] : amplitudes_) out.add_term(occ, amp * factor);
  return out;
}

ModeMap::ModeMap(int dim, std::vector<Complex> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim < 1) throw DimensionMismatch("mode map dimension must be >= 1");
  if (entries_.size() != static_cast<size_t>(dim) * dim) {
    throw DimensionMismatch("mode map needs dim*dim entries");
  }
}

ModeMap ModeMap::identity(int dim) {
  std::vector<Complex> entries(static_cast<size_t>(dim) * dim, Complex{0.0, 0.0});
  for (int i = 0; i < dim; ++i) entries[static_cast<size_t>(i) * dim + i] = Complex{1.0, 0.0};
  return ModeMap(dim, std::move(entries));
}

ModeMap ModeMap::adjoint() const {
  std::vector<Complex> entries(entries_.size());
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      entries[static_cast<size_t>(r) * dim_ + c] = std::conj(at(c, r));
    }
  }
  return ModeMap(dim_, std::move(entries));
}

double ModeMap::unitarity_error() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < dim_; ++k) sum += std::conj(at(k, i)) * at(k, j);
      const Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(sum - expected));
    }
  }
  return worst;
}

bool ModeMap::is_unitary(double tol) const { return unitarity_error() < tol; }

FockState vacuum(int mode_count, int cutoff) {
  FockState state(mode_count, cutoff);
  state.add_term(OccupationVector(static_cast<size_t>(mode_count), 0), Complex{1.0, 0.0});
  return state;
}

FockState create(const FockState& state, int mode) {
  check_mode_index(state, mode);
  FockState out(state.mode_count(), state.cutoff());
  for (const auto& [occ, amp] : state.amplitudes()) {
    OccupationVector raised = occ;
    raised[static_cast<size_t>(mode)] += 1;
    const double ladder = std::sqrt(static_cast<double>(raised[static_cast<size_t>(mode)]));
    out.add_term(raised, amp * ladder);
  }
  return out;
}

FockState annihilate(const FockState& state, int mode) {
  check_mode_index(state, mode);
  FockState out(state.mode_count(), state.cutoff());
  for (const auto& [occ, amp] : state.amplitudes()) {
    const int n = occ[static_cast<size_t>(mode)];
    if (n == 0) continue;
    OccupationVector lowered = occ;
    lowered[static_cast<size_t>(mode)] -= 1;
    out.add_term(lowered, amp * std::sqrt(static_cast<double>(n)));
  }
  return out;
}

Complex inner(const FockState& lhs, const FockState& rhs) {
  check_same_space(lhs, rhs);
  // Iterate the sparser side.
  const FockState& small = lhs.amplitudes().size() <= rhs.amplitudes().size() ? lhs : rhs;
  const FockState& large = (&small == &lhs) ? rhs : lhs;
  Complex total{0.0, 0.0};
  for (const auto& [occ, amp] : small.amplitudes()) {
    const Complex other = large.amplitude(occ);
    if (&small == &lhs) {
      total += std::conj(amp) * other;
    } else {
      total += std::conj(other) * amp;
    }
  }
  return total;
}

FockState apply_mode_map(const FockState& state, const ModeMap& map) {
  if (map.dim() != state.mode_count()) {
    throw DimensionMismatch("mode map dimension does not match state mode count");
  }
  const int modes = state.mode_count();
  FockState out(modes, state.cutoff());
  for (const auto& [occ, amp] : state.amplitudes()) {
    // |occ> = prod_j (a_j^dag)^{n_j} / sqrt(n_j!) |vac>; rebuild with each
    // a_j^dag replaced by sum_k U(k,j) a_k^dag.
    FockState monomial = vacuum(modes, state.cutoff());
    double factorial_norm = 1.0;
    for (int j = 0; j < modes; ++j) {
      const int n = occ[static_cast<size_t>(j)];
      for (int rep = 1; rep <= n; ++rep) {
        factorial_norm *= rep;
        FockState next(modes, state.cutoff());
        for (int k = 0; k < modes; ++k) {
          const Complex u = map.at(k, j);
          if (u == Complex{0.0, 0.0}) continue;
          const FockState raised = create(monomial, k);
          for (const auto& [term, term_amp] : raised.amplitudes()) {
            next.add_term(term, u * term_amp);
          }
        }
        monomial = std::move(next);
      }
    }
    const Complex weight = amp / std::sqrt(factorial_norm);
    for (const auto& [term, term_amp] : monomial.amplitudes()) {
      out.add_term(term, weight * term_amp);
    }
  }
  return out;
}

double number_expectation(const FockState& state, int mode) {
  check_mode_index(state, mode);
  double total = 0.0;
  for (const auto& [occ, amp] : state.amplitudes()) {
    total += occ[static_cast<size_t>(mode)] * std::norm(amp);
  }
  return total;
}

double outcome_probability(const FockState& state,
                           const std::function<bool(const OccupationVector&)>& pattern) {
  double total = 0.0;
  for (const auto& [occ, amp] : state.amplitudes()) {
    if (pattern(occ)) total += std::norm(amp);
  }
  return total;
}

}  // namespace biphoton
