#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// Polarization-dependent translation: h amplitudes move from x to x+1,
/// v amplitudes from x to x-1. Values are moved, not recomputed, so the
/// norm is preserved exactly. Storage grows by one site on each side.
WalkState translate(const WalkState& state);

/// One evolution step: the coin acts at every site, then translate.
/// step_count is incremented.
WalkState step(const WalkState& state, const CoinParams& params);

/// n_steps applications of step, starting from `initial`. Deterministic and
/// bit-for-bit reproducible on a fixed platform.
WalkState evolve(const InitialState& initial, const CoinParams& params,
                 int n_steps);

/// Independent check of evolve: explicit summation over all 2^N left/right
/// path histories, multiplying coin entries along each path. Exponential
/// cost; n_steps is capped at 16.
WalkState path_sum_oracle(const InitialState& initial,
                          const CoinParams& params, int n_steps);

}  // namespace qwalk
