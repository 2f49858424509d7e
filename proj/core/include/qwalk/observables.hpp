#pragma once

#include <vector>

#include "qwalk/state.hpp"

namespace qwalk {

/// Position probabilities on a contiguous site window; probabilities[i]
/// belongs to x = offset + i. Sites outside the window read as zero.
struct PositionDistribution {
  int offset = 0;
  std::vector<double> probabilities;

  int min_site() const { return offset; }
  int max_site() const {
    return offset + static_cast<int>(probabilities.size()) - 1;
  }

  double at(int x) const {
    const int i = x - offset;
    if (i < 0 || i >= static_cast<int>(probabilities.size())) return 0.0;
    return probabilities[static_cast<std::size_t>(i)];
  }

  double total() const;
  /// Scale so the total becomes 1. Throws invalid_argument on a zero total.
  void normalize();
};

enum class LocalizationMode { Fixed, Adaptive };

/// Localization parameter
///   S_L = 1/2 [Q(outer) - Q(inner)],  Q(j) = P(+j) + P(-j)  (Q(0) = P(0)),
/// bounded in [-1/2, 1/2] for any normalized distribution. Negative values
/// mean weight concentrated at the inner sites (localized), positive at the
/// outer sites (delocalized).
struct LocalizationReport {
  double s_l = 0.0;
  int outer_position = 5;
  int inner_position = 1;
  LocalizationMode mode = LocalizationMode::Fixed;
};

/// P(x) = |h_x|^2 + |v_x|^2 (trace over the internal state).
PositionDistribution position_distribution(const WalkState& state);

/// S_L with caller-supplied peak indices; outer > inner >= 0 required.
/// Missing sites contribute zero.
LocalizationReport localization_parameter(const PositionDistribution& dist,
                                          int outer, int inner);

/// S_L with indices inferred from the distribution: outer is the outermost
/// site with probability above 1e-6, inner is 1 or 0 by the support parity.
/// When they coincide, the outer peak is treated as empty and
/// S_L = -Q(inner)/2. Needs at least two occupied sites.
LocalizationReport adaptive_localization(const PositionDistribution& dist);

/// Squared Bhattacharyya overlap [sum_x sqrt(P(x) Q(x))]^2, aligned by
/// absolute position. 1 for identical distributions, 0 for disjoint support.
double similarity(const PositionDistribution& p,
                  const PositionDistribution& q);

/// Inclusive phi range; step must cut it into at least two points.
struct PhiRange {
  double start;
  double stop;
  double step;
};

struct TrajectoryPoint {
  double phi;
  LocalizationReport report;
};

/// For each phi in the range: evolve n_steps at (theta, phi) and report S_L
/// with the fixed default indices (outer 5, inner 1).
std::vector<TrajectoryPoint> trajectory_scan(double theta,
                                             const PhiRange& range,
                                             int n_steps,
                                             const InitialState& initial);

struct SummaryStats {
  double mean;
  double variance;
  double participation_ratio;
};

SummaryStats summary_stats(const PositionDistribution& dist);

}  // namespace qwalk
