#pragma once

#include <array>
#include <complex>

namespace qwalk {

using complexd = std::complex<double>;

/// 2x2 complex matrix acting on the walker's internal (polarization) state.
/// Entries are row-major: m00 m01 / m10 m11.
struct CoinMatrix {
  complexd m00, m01, m10, m11;

  static CoinMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

  CoinMatrix adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  complexd trace() const { return m00 + m11; }
  complexd det() const { return m00 * m11 - m01 * m10; }

  friend CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }

  friend CoinMatrix operator*(complexd s, const CoinMatrix& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
  }

  friend CoinMatrix operator+(const CoinMatrix& a, const CoinMatrix& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
  }

  friend CoinMatrix operator-(const CoinMatrix& a, const CoinMatrix& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
  }

  friend bool operator==(const CoinMatrix& a, const CoinMatrix& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 &&
           a.m11 == b.m11;
  }
};

/// Largest elementwise |a - b|.
double max_abs_diff(const CoinMatrix& a, const CoinMatrix& b);

/// M M^dagger = I to within tol, elementwise.
bool is_unitary(const CoinMatrix& m, double tol = 1e-12);

/// Wrap an angle into [-pi, pi].
double wrap_angle(double angle);

/// Rotation angles (theta, phi) of the two-rotation coin. Both are wrapped
/// into [-pi, pi] on construction; non-finite input is rejected.
struct CoinParams {
  double theta = 0.0;
  double phi = 0.0;

  CoinParams() = default;
  CoinParams(double theta_in, double phi_in);
};

/// [[cos t, -sin t], [sin t, cos t]]. The full angle is used, not t/2.
CoinMatrix rotation_y(double theta);

/// [[cos p, i sin p], [i sin p, cos p]].
CoinMatrix rotation_x(double phi);

/// Rotation about a unit axis n = (nx, ny, nz). Specializes exactly to
/// rotation_y for n = (0,1,0) and rotation_x for n = (1,0,0).
CoinMatrix rotation_axis(const std::array<double, 3>& axis, double theta);

/// The one-step coin Rx(phi) * Ry(theta); Ry is applied first. The order is
/// fixed and deliberately not configurable.
CoinMatrix coin(const CoinParams& params);

}  // namespace qwalk
