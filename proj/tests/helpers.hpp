#pragma once
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "biphoton/fock.hpp"
#include "biphoton/qutrit.hpp"

namespace biphoton::testing {

inline double abs_diff(Complex a, Complex b) { return std::abs(a - b); }

/// Haar-ish random unitary: complex Gaussian matrix, Gram-Schmidt columns.
inline ModeMap random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols) {
    for (auto& entry : col) entry = {gauss(rng), gauss(rng)};
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj{0.0, 0.0};
      for (int i = 0; i < dim; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
      for (int i = 0; i < dim; ++i) cols[j][i] -= proj * cols[k][i];
    }
    double norm = 0.0;
    for (int i = 0; i < dim; ++i) norm += std::norm(cols[j][i]);
    norm = std::sqrt(norm);
    for (int i = 0; i < dim; ++i) cols[j][i] /= norm;
  }
  std::vector<Complex> entries(dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) entries[i * dim + j] = cols[j][i];
  }
  return ModeMap(dim, entries);
}

/// A normalized random state of `terms` basis vectors in a small Fock space.
inline FockState random_fock_state(int modes, int cutoff, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> occ_dist(0, cutoff);
  FockState state(modes, cutoff);
  for (int attempt = 0; attempt < 6; ++attempt) {
    OccupationVector occ(modes, 0);
    int total = 0;
    for (int m = 0; m < modes; ++m) {
      occ[m] = occ_dist(rng);
      total += occ[m];
    }
    if (total > cutoff) continue;
    state.add_term(occ, {gauss(rng), gauss(rng)});
  }
  if (state.squared_norm() == 0.0) state.add_term(OccupationVector(modes, 0), 1.0);
  return state.normalized();
}

}  // namespace biphoton::testing
