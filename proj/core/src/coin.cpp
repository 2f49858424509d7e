#include "qwalk/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

double max_abs_diff(const CoinMatrix& a, const CoinMatrix& b) {
  double m = std::abs(a.m00 - b.m00);
  m = std::max(m, std::abs(a.m01 - b.m01));
  m = std::max(m, std::abs(a.m10 - b.m10));
  m = std::max(m, std::abs(a.m11 - b.m11));
  return m;
}

bool is_unitary(const CoinMatrix& m, double tol) {
  return max_abs_diff(m * m.adjoint(), CoinMatrix::identity()) <= tol;
}

double wrap_angle(double angle) {
  // remainder(x, 2pi) lands in [-pi, pi]; +-pi stay put.
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::remainder(angle, two_pi);
}

CoinParams::CoinParams(double theta_in, double phi_in) {
  if (!std::isfinite(theta_in) || !std::isfinite(phi_in)) {
    throw std::invalid_argument("CoinParams: angles must be finite");
  }
  theta = wrap_angle(theta_in);
  phi = wrap_angle(phi_in);
}

CoinMatrix rotation_y(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotation_y: angle must be finite");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {complexd(c, 0.0), complexd(-s, 0.0), complexd(s, 0.0),
          complexd(c, 0.0)};
}

CoinMatrix rotation_x(double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("rotation_x: angle must be finite");
  }
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {complexd(c, 0.0), complexd(0.0, s), complexd(0.0, s),
          complexd(c, 0.0)};
}

CoinMatrix rotation_axis(const std::array<double, 3>& axis, double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotation_axis: angle must be finite");
  }
  const double nx = axis[0], ny = axis[1], nz = axis[2];
  const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (!std::isfinite(len) || std::abs(len - 1.0) > 1e-9) {
    throw std::invalid_argument("rotation_axis: axis must be a unit vector");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {complexd(c, -nz * s), complexd(-ny * s, nx * s),
          complexd(ny * s, nx * s), complexd(c, nz * s)};
}

CoinMatrix coin(const CoinParams& params) {
  return rotation_x(params.phi) * rotation_y(params.theta);
}

}  // namespace qwalk
