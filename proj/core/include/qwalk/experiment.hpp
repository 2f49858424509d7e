#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// Fiber-loop constants of the time-multiplexed setup. Defaults are the
/// measured values of the reference apparatus. loop_efficiency is the net
/// per-round-trip survival probability, exclusive of the out-coupling tap.
struct LoopParams {
  double round_trip_time_ns = 750.0;
  double time_bin_distance_ns = 52.0;
  double repetition_rate_hz = 111e3;
  double outcoupling_probability = 0.05;
  double loop_efficiency = 0.50;
  double mean_photons_per_pulse = 0.003;
  double background_rate_per_ns = 0.0;

  /// Throws invalid_argument when a field is out of range or when the
  /// computed step capacity would let time bins of adjacent round trips
  /// overlap.
  void validate() const;
};

/// Detector counts per arrival-time bin after a trigger at origin_ns.
/// counts[i] covers [origin + i*bin_width, origin + (i+1)*bin_width).
struct BinnedHistogram {
  double bin_width_ns = 1.0;
  double origin_ns = 0.0;
  std::vector<std::uint64_t> counts;
};

/// Pre-noise per-bin means of the same histogram; the Poisson sampler draws
/// around these.
struct ExpectedHistogram {
  double bin_width_ns = 1.0;
  double origin_ns = 0.0;
  std::vector<double> means;
};

/// Half-wave plate angles realizing the two rotations: alpha = theta/2,
/// beta = phi/2.
struct WaveplateSetting {
  double alpha;
  double beta;
};

/// Largest observable step number: floor(pulse period / round-trip time).
int max_steps(const LoopParams& params);

/// Arrival time of the (step, position) bin: t = N*RTT + (x+N)/2 * TBD.
/// The earliest bin of round trip N is x = -N; x and N must share parity and
/// |x| <= N.
double arrival_time(int step, int position, const LoopParams& params);

/// Probability that a photon is detected at step N: the out-coupling tap
/// applied once times the per-round-trip survival to the N-th power.
double detection_probability(int step, const LoopParams& params);

/// Per-bin expected counts n_pulses * <n> * p(N) * P_N(x) for steps
/// 1..max_step, plus a uniform background floor.
ExpectedHistogram expected_histogram(const LoopParams& params,
                                     const CoinParams& coin,
                                     const InitialState& initial,
                                     std::uint64_t n_pulses, int max_step,
                                     double bin_width_ns = 1.0);

/// Poisson-sampled realization of expected_histogram. Each bin draws from
/// its own generator keyed on (seed, bin index), so results are byte-stable
/// for a fixed seed no matter how the loop is partitioned.
BinnedHistogram simulate_histogram(const LoopParams& params,
                                   const CoinParams& coin,
                                   const InitialState& initial,
                                   std::uint64_t n_pulses, int max_step,
                                   std::uint64_t seed,
                                   double bin_width_ns = 1.0);

/// Recover P_N(x) from a histogram: integrate counts in +-window/2 around
/// each predicted arrival time, subtract the off-window median background,
/// clamp negatives to zero, renormalize. window must stay below half the
/// time-bin distance so neighbouring position bins cannot bleed.
PositionDistribution ingest_histogram(const BinnedHistogram& raw,
                                      const LoopParams& params, int step,
                                      double window_ns);

WaveplateSetting waveplate_settings(const CoinParams& coin);

/// Poisson tail P(n >= 2) = 1 - e^{-mu}(1 + mu); the single-photon model is
/// valid while this stays negligible.
double multi_photon_probability(double mean_photons_per_pulse);

}  // namespace qwalk
