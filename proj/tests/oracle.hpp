#pragma once

// Independent reference for pants arc lengths: a pants group built from
// traces alone, with arc lengths read off as distances between lifted axes.
// Shares no code with the library. Evaluated at 50 digits so that short
// boundaries do not cost the reference its accuracy.

#include <Eigen/Core>
#include <Eigen/LU>
#include <array>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <utility>

namespace oracle {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float_50::backend_type,
                                           boost::multiprecision::et_off>;
using M2 = Eigen::Matrix<Real, 2, 2>;

/// Boundary holonomies X1, X2, X3 with X1 X2 X3 = I and |tr Xk| = 2 cosh(lk / 2).
/// Conjugated by a fixed generic matrix so no fixed point sits at infinity.
inline std::array<M2, 3> pants_group(const Real& l1, const Real& l2, const Real& l3) {
  const Real a = l1 / 2;
  M2 A;
  A << exp(a), 0, 0, exp(-a);
  const Real tb = 2 * cosh(l2 / 2), tc = -2 * cosh(l3 / 2);
  const Real p = (tc - exp(-a) * tb) / (exp(a) - exp(-a));
  const Real s = tb - p;
  M2 B;
  B << p, 1, p * s - 1, s;
  M2 G;
  G << 2, 1, Real(1) / 3, Real(2) / 3;
  G /= sqrt(G.determinant());
  const M2 Gi = G.inverse();
  const M2 X1 = G * A * Gi, X2 = G * B * Gi;
  return {X1, X2, (X1 * X2).inverse()};
}

/// Endpoints of the axis of a hyperbolic element.
inline std::pair<Real, Real> fixed_points(const M2& m) {
  const Real disc = sqrt((m(0, 0) + m(1, 1)) * (m(0, 0) + m(1, 1)) - 4);
  return {(m(0, 0) - m(1, 1) + disc) / (2 * m(1, 0)), (m(0, 0) - m(1, 1) - disc) / (2 * m(1, 0))};
}

/// Distance between disjoint geodesics from the cross ratio of their endpoints.
inline Real axis_distance(const M2& g, const M2& h) {
  const auto [a1, b1] = fixed_points(g);
  const auto [a2, b2] = fixed_points(h);
  Real x = (a1 - a2) * (b1 - b2) / ((a1 - b2) * (b1 - a2));
  if (x > 1) x = 1 / x;
  return acosh((1 + x) / (1 - x));
}

/// Arc between boundaries i and j (0-based). For i == j the arc loops around
/// boundary k != i, lifting to the axes of Xi and Xk Xi Xk^-1.
inline Real arc(const std::array<long double, 3>& lengths, int i, int j) {
  const auto X = pants_group(Real(lengths[0]), Real(lengths[1]), Real(lengths[2]));
  if (i != j) return axis_distance(X[i], X[j]);
  const int k = (i + 1) % 3;
  return axis_distance(X[i], X[k] * X[i] * X[k].inverse());
}

}  // namespace oracle
