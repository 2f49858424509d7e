#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/experiment.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/topology.hpp"

namespace qwalk {

/// Parse an angle. Accepts exact pi fractions ("pi", "-pi/4", "3pi/4",
/// "0.5pi"), plain decimal radians ("1.57"), and degrees with an explicit
/// suffix ("45deg"). Throws invalid_argument on anything else.
double parse_angle(const std::string& text);

/// Write `content` to `path` via a temporary file in the same directory and
/// an atomic rename, so no partial file is ever visible.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);

std::string read_text(const std::filesystem::path& path);

// CSV/JSON emitters. Columns are part of the tool's contract; keep stable.

/// "x,p" rows. Sites with probability <= threshold are skipped.
void write_distribution_csv(const std::filesystem::path& path,
                            const PositionDistribution& dist,
                            double threshold = 1e-12);
PositionDistribution read_distribution_csv(const std::filesystem::path& path);

/// "x,re_h,im_h,re_v,im_v" rows over the stored window.
void write_amplitudes_csv(const std::filesystem::path& path,
                          const WalkState& state);

/// "k,E_plus,E_minus,n_x,n_y,n_z"; Bloch components are "nan" where the gap
/// is closed.
void write_band_csv(const std::filesystem::path& path,
                    const BandStructure& bands);

/// "theta,phi,gap0,gapPi,q0,qPi,boundary".
void write_phase_csv(const std::filesystem::path& path,
                     const PhaseDiagram& diagram);

/// Grid metadata plus per-cell records.
void write_phase_json(const std::filesystem::path& path,
                      const PhaseDiagram& diagram, int k_resolution);

/// "theta,phi,k,label" with label one of 0, pi.
void write_dirac_csv(const std::filesystem::path& path,
                     const std::vector<DiracPoint>& points);

/// "phi,s_l,outer,inner,mode".
void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<TrajectoryPoint>& points);

/// "time_ns,counts" plus a JSON sidecar {bin_width_ns, trigger_origin_ns}
/// at sidecar_path.
void write_histogram_csv(const std::filesystem::path& path,
                         const std::filesystem::path& sidecar_path,
                         const BinnedHistogram& histogram);
BinnedHistogram read_histogram_csv(const std::filesystem::path& path,
                                   const std::filesystem::path& sidecar_path);

}  // namespace qwalk
