#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// Quasi-energy pair at one quasi-momentum. Bands come in +-E with
/// E in [0, pi].
struct QuasiEnergies {
  double plus;
  double minus;
};

/// Band data at one k point. bloch_vector is absent where the gap is closed
/// (E within 1e-9 of 0 or pi) and the rotation axis is undefined.
struct BlochSample {
  double k;
  double energy_plus;
  double energy_minus;
  std::optional<std::array<double, 3>> bloch_vector;
};

/// Quasi-energy branches and Bloch vectors on a uniform k grid covering
/// [-pi, pi] inclusive.
struct BandStructure {
  CoinParams params;
  std::vector<BlochSample> samples;
};

/// One-step unitary in the momentum representation:
///   U(k) = diag(e^{-ik}, e^{+ik}) * Rx(phi) * Ry(theta).
/// Fourier convention: psi(k) = sum_x psi(x) e^{-ikx}, so translation acts
/// as e^{-ik} on the h component. This is the sign choice under which the
/// dispersion carries "+ sin k sin theta sin phi".
CoinMatrix bloch_unitary(double k, const CoinParams& params);

/// E = arccos(cos k cos theta cos phi + sin k sin theta sin phi), clamped
/// into arccos domain. Returns {E, -E}.
QuasiEnergies quasi_energy(double k, const CoinParams& params);

/// Unit vector n(k) with U(k) = exp(-i E n.sigma), recovered from the matrix
/// logarithm n.sigma = i (U - cos E I) / sin E, symmetrized to Hermitian
/// traceless form. Throws DegeneratePointError when sin E < 1e-9.
std::array<double, 3> bloch_vector(double k, const CoinParams& params);

/// Uniform sampling of quasi_energy and bloch_vector over [-pi, pi];
/// n_samples >= 3, endpoints included.
BandStructure band_structure(const CoinParams& params, int n_samples);

/// Second independent evolution route: Fourier transform to momentum space
/// on a power-of-two grid of size >= 4(N+1), apply U(k)^N through the
/// spectral decomposition, transform back. Agrees with evolve to 1e-8.
WalkState momentum_evolve_oracle(const InitialState& initial,
                                 const CoinParams& params, int n_steps);

}  // namespace qwalk
