#include "qwalk/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

/// cos E at quasi-momentum k; the dispersion in closed form.
double dispersion_cos(double k, const CoinParams& p) {
  return std::cos(k) * std::cos(p.theta) * std::cos(p.phi) +
         std::sin(k) * std::sin(p.theta) * std::sin(p.phi);
}

}  // namespace

CoinMatrix bloch_unitary(double k, const CoinParams& params) {
  if (!std::isfinite(k)) {
    throw std::invalid_argument("bloch_unitary: k must be finite");
  }
  const complexd forward = std::polar(1.0, -k);  // acts on the h rail
  const complexd backward = std::polar(1.0, +k);
  const CoinMatrix c = coin(params);
  return {forward * c.m00, forward * c.m01, backward * c.m10,
          backward * c.m11};
}

QuasiEnergies quasi_energy(double k, const CoinParams& params) {
  if (!std::isfinite(k)) {
    throw std::invalid_argument("quasi_energy: k must be finite");
  }
  const double e = std::acos(clamp_unit(dispersion_cos(k, params)));
  return {e, -e};
}

std::array<double, 3> bloch_vector(double k, const CoinParams& params) {
  const CoinMatrix u = bloch_unitary(k, params);
  const double cos_e = clamp_unit(0.5 * std::real(u.trace()));
  const double sin_e = std::sqrt(std::max(0.0, 1.0 - cos_e * cos_e));
  if (sin_e < 1e-9) {
    throw DegeneratePointError(
        "bloch_vector: gap closed at this k; rotation axis undefined");
  }
  // n.sigma = i (U - cos E I) / sin E, then Hermitized.
  const complexd i_over_sin(0.0, 1.0 / sin_e);
  const CoinMatrix m =
      i_over_sin * (u - complexd(cos_e, 0.0) * CoinMatrix::identity());
  const CoinMatrix h = complexd(0.5, 0.0) * (m + m.adjoint());
  return {std::real(h.m01), -std::imag(h.m01), std::real(h.m00)};
}

BandStructure band_structure(const CoinParams& params, int n_samples) {
  if (n_samples < 3) {
    throw std::invalid_argument("band_structure: need at least 3 samples");
  }
  BandStructure bands{params, {}};
  bands.samples.reserve(static_cast<std::size_t>(n_samples));
  const double dk = 2.0 * kPi / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double k = -kPi + i * dk;
    const QuasiEnergies e = quasi_energy(k, params);
    BlochSample sample{k, e.plus, e.minus, std::nullopt};
    try {
      sample.bloch_vector = bloch_vector(k, params);
    } catch (const DegeneratePointError&) {
      // gap closed at this k; leave the vector unset
    }
    bands.samples.push_back(sample);
  }
  return bands;
}

namespace {

/// U^N for a unit-determinant 2x2 unitary, via the spectral form
///   U^N = cos(NE) I + r (U - cos E I),  r = sin(NE)/sin(E),
/// where r is the degree-(N-1) Chebyshev polynomial of the second kind in
/// cos E; near the degenerate points |cos E| -> 1 its limit N (cos E -> 1)
/// or (-1)^{N+1} N (cos E -> -1) is used.
CoinMatrix unitary_power(const CoinMatrix& u, int n) {
  if (n == 0) return CoinMatrix::identity();
  const double cos_e = std::clamp(0.5 * std::real(u.trace()), -1.0, 1.0);
  const double e = std::acos(cos_e);
  const double sin_e = std::sin(e);
  double ratio;
  if (sin_e > 1e-9) {
    ratio = std::sin(n * e) / sin_e;
  } else {
    ratio = cos_e > 0.0 ? static_cast<double>(n)
                        : (n % 2 == 0 ? -static_cast<double>(n)
                                      : static_cast<double>(n));
  }
  const double cos_ne = std::cos(n * e);
  CoinMatrix out = u - complexd(cos_e, 0.0) * CoinMatrix::identity();
  out = complexd(ratio, 0.0) * out;
  return out + complexd(cos_ne, 0.0) * CoinMatrix::identity();
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

WalkState momentum_evolve_oracle(const InitialState& initial,
                                 const CoinParams& params, int n_steps) {
  if (n_steps < 0) {
    throw std::invalid_argument(
        "momentum_evolve_oracle: n_steps must be non-negative");
  }
  const WalkState start = prepare(initial);
  if (n_steps == 0) return start;

  const int in_lo = start.min_site();
  const int in_hi = start.max_site();
  const std::size_t width =
      static_cast<std::size_t>(in_hi - in_lo + 1) + 2 * n_steps;
  const std::size_t m =
      next_pow2(std::max<std::size_t>(4 * (n_steps + 1), width + 1));

  // Forward transform psi(k) = sum_x psi(x) e^{-ikx} on k_j = -pi + 2pi j/m.
  std::vector<Spinor> momentum(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double k = -kPi + 2.0 * kPi * j / m;
    Spinor acc;
    for (int x = in_lo; x <= in_hi; ++x) {
      const complexd phase = std::polar(1.0, -k * x);
      const Spinor s = start.at(x);
      acc.h += phase * s.h;
      acc.v += phase * s.v;
    }
    const CoinMatrix un = unitary_power(bloch_unitary(k, params), n_steps);
    momentum[j] = {un.m00 * acc.h + un.m01 * acc.v,
                   un.m10 * acc.h + un.m11 * acc.v};
  }

  // Inverse transform on the light-cone window; m exceeds the support width,
  // so there is no wrap-around.
  WalkState out;
  out.offset = in_lo - n_steps;
  out.step_count = start.step_count + n_steps;
  out.amplitudes.assign(static_cast<std::size_t>(in_hi - in_lo + 1) +
                            2 * static_cast<std::size_t>(n_steps),
                        Spinor{});
  out.amplitudes.resize(static_cast<std::size_t>(in_hi + n_steps) -
                        static_cast<std::size_t>(in_lo - n_steps) + 1);
  for (int x = out.min_site(); x <= out.max_site(); ++x) {
    Spinor acc;
    for (std::size_t j = 0; j < m; ++j) {
      const double k = -kPi + 2.0 * kPi * j / m;
      const complexd phase = std::polar(1.0, k * x);
      acc.h += phase * momentum[j].h;
      acc.v += phase * momentum[j].v;
    }
    const double inv_m = 1.0 / static_cast<double>(m);
    out.amplitudes[static_cast<std::size_t>(x - out.offset)] = {
        acc.h * inv_m, acc.v * inv_m};
  }
  return out;
}

}  // namespace qwalk
