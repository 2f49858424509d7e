#pragma once

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Minimal distances of the band to quasi-energy 0 and pi, with the
/// quasi-momenta attaining them. Both gaps lie in [0, pi/2] because the
/// spectrum is a symmetric +-E pair.
struct GapReport {
  CoinParams params;
  double gap_zero;
  double gap_pi;
  double k_at_gap_zero;
  double k_at_gap_pi;
};

/// A parameter-space point where the gap closes, together with the
/// quasi-momentum of the closure and which quasi-energy (0 or pi) closes.
struct DiracPoint {
  double theta;
  double phi;
  double k;
  enum class Label { Zero, Pi } label;
};

/// Parity invariants along the straight parameter-space segment from (0,0)
/// to a target. q = crossings mod 2 per label. boundary_flag marks a target
/// lying on a closing itself; counts then cover the half-open segment.
struct InvariantPair {
  int q_zero = 0;
  int q_pi = 0;
  int crossings_zero = 0;
  int crossings_pi = 0;
  bool boundary_flag = false;
};

struct PhaseCell {
  GapReport gap;
  InvariantPair invariants;
};

/// Per-node gap reports and invariants over a uniform (theta, phi) grid on
/// [-pi, pi]^2. cells is row-major: cells[i * phi_grid.size() + j] belongs
/// to (theta_grid[i], phi_grid[j]).
struct PhaseDiagram {
  std::vector<double> theta_grid;
  std::vector<double> phi_grid;
  std::vector<PhaseCell> cells;
};

/// Closed-form gap arccos(sqrt(cos^2 t cos^2 p + sin^2 t sin^2 p)), equal
/// for both quasi-energies. Validated against grid minimization in the test
/// suite before anything else relies on it.
double closed_form_gap(const CoinParams& params);

/// Grid minimization of |E| and |pi - E| over k (k_resolution >= 64 samples)
/// followed by golden-section refinement to 1e-10 in k.
GapReport gap_report(const CoinParams& params, int k_resolution);

/// All gap closures in [-pi, pi]^2, located by grid scan at the given
/// resolution (>= 101 per axis) plus local refinement, clustered to point
/// centers. Each closure point yields one entry per closing label.
std::vector<DiracPoint> dirac_points(int resolution);

/// Parity-of-gap-closings invariants along the segment (0,0) -> target,
/// sampled at samples_along_line points (>= 1000). The origin, itself a
/// closure, is excluded from the count. A closure event increments the label
/// whose extreme cos E = +-1 it attains; an amplitude-1 event attains both.
InvariantPair invariants(const CoinParams& target, int samples_along_line);

/// Full scan over a resolution x resolution grid (>= 51), with per-node
/// gap_report at k_resolution and invariants at the minimum line sampling.
PhaseDiagram phase_diagram(int resolution, int k_resolution);

}  // namespace qwalk
