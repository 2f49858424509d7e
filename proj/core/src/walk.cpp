#include "qwalk/walk.hpp"

#include <cstdint>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

WalkState translate(const WalkState& state) {
  const std::size_t n = state.amplitudes.size();
  WalkState out;
  out.offset = state.offset - 1;
  out.step_count = state.step_count;
  out.amplitudes.assign(n + 2, Spinor{});
  for (std::size_t i = 0; i < n; ++i) {
    out.amplitudes[i + 2].h = state.amplitudes[i].h;  // x -> x + 1
    out.amplitudes[i].v = state.amplitudes[i].v;      // x -> x - 1
  }
  return out;
}

WalkState step(const WalkState& state, const CoinParams& params) {
  const CoinMatrix c = coin(params);
  WalkState mixed = state;
  for (Spinor& s : mixed.amplitudes) {
    const complexd h = s.h, v = s.v;
    s.h = c.m00 * h + c.m01 * v;
    s.v = c.m10 * h + c.m11 * v;
  }
  WalkState out = translate(mixed);
  out.step_count = state.step_count + 1;
  return out;
}

WalkState evolve(const InitialState& initial, const CoinParams& params,
                 int n_steps) {
  if (n_steps < 0) {
    throw std::invalid_argument("evolve: n_steps must be non-negative");
  }
  WalkState state = prepare(initial);
  for (int i = 0; i < n_steps; ++i) {
    state = step(state, params);
  }
  return state;
}

WalkState path_sum_oracle(const InitialState& initial,
                          const CoinParams& params, int n_steps) {
  if (n_steps < 0) {
    throw std::invalid_argument("path_sum_oracle: n_steps must be non-negative");
  }
  if (n_steps > 16) {
    throw UnsupportedSizeError(
        "path_sum_oracle: 2^N path enumeration supports at most N = 16");
  }

  const WalkState start = prepare(initial);
  const int x0 = start.offset;
  const Spinor psi0 = start.amplitudes[0];
  const CoinMatrix c = coin(params);
  const complexd entry[2][2] = {{c.m00, c.m01}, {c.m10, c.m11}};

  WalkState out;
  out.offset = x0 - n_steps;
  out.step_count = n_steps;
  out.amplitudes.assign(static_cast<std::size_t>(2 * n_steps + 1), Spinor{});
  if (n_steps == 0) {
    out.amplitudes = start.amplitudes;
    out.offset = x0;
    return out;
  }

  // Bit j of the mask is the spin rail occupied after step j+1
  // (0 = h, moving right; 1 = v, moving left).
  const std::uint32_t n_paths = 1u << n_steps;
  for (std::uint32_t mask = 0; mask < n_paths; ++mask) {
    int displacement = 0;
    for (int j = 0; j < n_steps; ++j) {
      displacement += (mask >> j) & 1u ? -1 : +1;
    }
    const int last = (mask >> (n_steps - 1)) & 1u;

    complexd amp(0.0, 0.0);
    const complexd start_amp[2] = {psi0.h, psi0.v};
    for (int s0 = 0; s0 < 2; ++s0) {
      complexd a = start_amp[s0];
      int prev = s0;
      for (int j = 0; j < n_steps; ++j) {
        const int cur = (mask >> j) & 1u;
        a *= entry[cur][prev];
        prev = cur;
      }
      amp += a;
    }

    Spinor& site =
        out.amplitudes[static_cast<std::size_t>(x0 + displacement - out.offset)];
    if (last == 0) {
      site.h += amp;
    } else {
      site.v += amp;
    }
  }
  return out;
}

}  // namespace qwalk
