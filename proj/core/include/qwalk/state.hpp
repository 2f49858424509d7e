#pragma once

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Two-component amplitude at one lattice site. h rides the H (right-moving)
/// rail, v the V (left-moving) rail.
struct Spinor {
  complexd h{0.0, 0.0};
  complexd v{0.0, 0.0};
};

/// Walker wave-function on a contiguous window of integer lattice sites.
/// amplitudes[i] lives at x = offset + i. Operations on states are pure;
/// a state is never mutated after construction.
struct WalkState {
  int offset = 0;
  std::vector<Spinor> amplitudes;
  int step_count = 0;

  int min_site() const { return offset; }
  int max_site() const { return offset + static_cast<int>(amplitudes.size()) - 1; }

  /// Amplitude at site x; zero outside the stored window.
  Spinor at(int x) const {
    const int i = x - offset;
    if (i < 0 || i >= static_cast<int>(amplitudes.size())) return {};
    return amplitudes[static_cast<std::size_t>(i)];
  }

  /// Sum of |h|^2 + |v|^2 over all sites.
  double norm_sq() const;
};

/// Initial condition of a walk: one of the two chirality eigenstates
/// |0> x (|H> +- i|V>)/sqrt(2), or a caller-supplied single-site spinor.
struct InitialState {
  enum class Kind { ChiralityPlus, ChiralityMinus, Custom };

  Kind kind = Kind::ChiralityPlus;
  int position = 0;
  Spinor spinor{};

  static InitialState chirality_plus() { return {Kind::ChiralityPlus, 0, {}}; }
  static InitialState chirality_minus() { return {Kind::ChiralityMinus, 0, {}}; }
  /// The custom spinor is normalized on preparation; a zero spinor is
  /// rejected.
  static InitialState custom(int position, const Spinor& spinor) {
    return {Kind::Custom, position, spinor};
  }
};

/// Materialize the single-site state described by `initial`, normalized to
/// within 1e-12.
WalkState prepare(const InitialState& initial);

}  // namespace qwalk
