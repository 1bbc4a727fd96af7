#pragma once
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "biphoton/errors.hpp"

namespace biphoton {

using Complex = std::complex<double>;

/// Photon counts per mode. Length equals the owning space's mode count;
/// the sum is bounded by the photon cutoff.
using OccupationVector = std::vector<int>;

/// Amplitudes below this magnitude are dropped after each operation, keeping
/// the sparse map exact at working precision.
inline constexpr double kAmplitudePruneThreshold = 1e-15;

/// Sparse few-photon bosonic state over M modes with a hard photon-number
/// cutoff N. Amplitudes are stored in a map keyed by occupation vector, so
/// iteration order is lexicographic and outputs are reproducible bit for bit.
///
/// Values are immutable once built (add_term is the builder interface); all
/// operations below are pure functions returning fresh states.
class FockState {
 public:
  FockState(int mode_count, int cutoff);

  int mode_count() const { return mode_count_; }
  int cutoff() const { return cutoff_; }
  const std::map<OccupationVector, Complex>& amplitudes() const { return amplitudes_; }

  /// Accumulate amplitude on one occupation term.
  /// Throws DimensionMismatch on wrong length, CutoffExceeded if the term
  /// holds more than `cutoff` photons.
  void add_term(const OccupationVector& occupation, Complex amplitude);

  Complex amplitude(const OccupationVector& occupation) const;
  double squared_norm() const;
  bool is_normalized(double tol = 1e-12) const;

  /// Rescale to unit norm. Throws ZeroState below the given floor.
  FockState normalized(double zero_tol = 1e-12) const;

  FockState scaled(Complex factor) const;

 private:
  int mode_count_;
  int cutoff_;
  std::map<OccupationVector, Complex> amplitudes_;
};

/// M x M complex matrix sending input creation operators to output creation
/// operators: a_j^dag -> sum_k U(k,j) a_k^dag.
class ModeMap {
 public:
  ModeMap(int dim, std::vector<Complex> row_major);
  static ModeMap identity(int dim);

  int dim() const { return dim_; }
  Complex at(int row, int col) const { return entries_[static_cast<size_t>(row) * dim_ + col]; }

  ModeMap adjoint() const;

  /// max |(U^dag U - I)_{ij}|
  double unitarity_error() const;
  bool is_unitary(double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<Complex> entries_;
};

/// |vac> on `mode_count` modes: single all-zero term with amplitude 1.
FockState vacuum(int mode_count, int cutoff);

/// Bosonic creation: each term gains a photon in `mode` with ladder factor
/// sqrt(n+1). Throws CutoffExceeded rather than truncating.
FockState create(const FockState& state, int mode);

/// Bosonic annihilation: factor sqrt(n), terms with n = 0 vanish.
/// Annihilating vacuum yields the zero state.
FockState annihilate(const FockState& state, int mode);

/// Hermitian inner product <lhs|rhs>. Throws DimensionMismatch unless both
/// states share mode count and cutoff.
Complex inner(const FockState& lhs, const FockState& rhs);

/// Lift a linear mode map to the state: every occupation term is re-expanded
/// as a product of transformed creation operators applied to vacuum. Exact
/// within the cutoff; norm-preserving when the map is unitary.
FockState apply_mode_map(const FockState& state, const ModeMap& map);

/// <n_mode> for a normalized state.
double number_expectation(const FockState& state, int mode);

/// Total probability of basis terms satisfying the predicate.
double outcome_probability(const FockState& state,
                           const std::function<bool(const OccupationVector&)>& pattern);

}  // namespace biphoton
