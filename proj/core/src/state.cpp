#include "qwalk/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

double WalkState::norm_sq() const {
  double total = 0.0;
  for (const Spinor& s : amplitudes) {
    total += std::norm(s.h) + std::norm(s.v);
  }
  return total;
}

WalkState prepare(const InitialState& initial) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  WalkState state;
  state.step_count = 0;
  switch (initial.kind) {
    case InitialState::Kind::ChiralityPlus:
      state.offset = 0;
      state.amplitudes = {{complexd(inv_sqrt2, 0.0), complexd(0.0, inv_sqrt2)}};
      break;
    case InitialState::Kind::ChiralityMinus:
      state.offset = 0;
      state.amplitudes = {
          {complexd(inv_sqrt2, 0.0), complexd(0.0, -inv_sqrt2)}};
      break;
    case InitialState::Kind::Custom: {
      const double norm =
          std::sqrt(std::norm(initial.spinor.h) + std::norm(initial.spinor.v));
      if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument(
            "prepare: custom spinor must be nonzero and finite");
      }
      state.offset = initial.position;
      state.amplitudes = {
          {initial.spinor.h / norm, initial.spinor.v / norm}};
      break;
    }
  }
  return state;
}

}  // namespace qwalk
