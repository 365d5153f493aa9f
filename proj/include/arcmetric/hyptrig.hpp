#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "arcmetric/errors.hpp"

/// Pair-of-pants trigonometry, intersection cases and elementary bounds.
///
/// All length kernels work in log space, so boundary lengths from 1e-300 up to
/// about 1e300 evaluate without overflow. Templates accept any floating scalar
/// with std math overloads (float, double, long double).
namespace arcmetric::hyptrig {

template <typename Scalar>
inline void require_finite_nonnegative(Scalar x, const char* what) {
  if (!(x >= Scalar(0)) || !std::isfinite(static_cast<long double>(x)))
    throw DomainError(std::string(what) + " must be finite and >= 0");
}

/// log(cosh x), exact to rounding for every finite x.
template <typename Scalar>
Scalar log_cosh(Scalar x) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::log1p;
  x = abs(x);
  return x + log1p(exp(Scalar(-2) * x)) - log(Scalar(2));
}

/// log(sinh x) for x > 0; -inf at x = 0.
template <typename Scalar>
Scalar log_sinh(Scalar x) {
  using std::exp;
  using std::log;
  using std::log1p;
  using std::sinh;
  if (x > Scalar(1)) return x + log1p(-exp(Scalar(-2) * x)) - log(Scalar(2));
  return log(sinh(x));
}

template <typename Scalar, std::size_t N>
Scalar log_sum_exp(const std::array<Scalar, N>& terms) {
  using std::exp;
  using std::log;
  const Scalar top = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(static_cast<long double>(top))) return top;
  Scalar sum(0);
  for (Scalar t : terms) sum += exp(t - top);
  return top + log(sum);
}

/// asinh(exp(log_y)), without forming exp(log_y) when it would overflow.
template <typename Scalar>
Scalar asinh_of_exp(Scalar log_y) {
  using std::asinh;
  using std::exp;
  using std::log;
  using std::sqrt;
  if (log_y > Scalar(20)) return log_y + log(Scalar(1) + sqrt(Scalar(1) + exp(Scalar(-2) * log_y)));
  return asinh(exp(log_y));
}

/// arccosh with inputs in [1 - 1e-12, 1] clamped to 1.
template <typename Scalar>
Scalar safe_acosh(Scalar x) {
  using std::acosh;
  if (x < Scalar(1)) {
    if (x >= Scalar(1) - Scalar(1e-12)) return Scalar(0);
    throw DomainError("acosh argument below 1");
  }
  return acosh(x);
}

/// Length of the orthogeodesic from side beta to itself in the pants with
/// side lengths (lb, lg1, lg2). Uses sinh^2(l/2) = cosh^2(l/2) - 1, which
/// turns the numerator into a sum of positive terms.
template <typename Scalar>
Scalar arc_length_same_boundary(Scalar lb, Scalar lg1, Scalar lg2) {
  require_finite_nonnegative(lb, "beta length");
  require_finite_nonnegative(lg1, "gamma1 length");
  require_finite_nonnegative(lg2, "gamma2 length");
  if (lb == Scalar(0)) throw DomainError("arc endpoint on a cusp (beta length 0)");
  using std::log;
  const Scalar cb = log_cosh(lb / 2), c1 = log_cosh(lg1 / 2), c2 = log_cosh(lg2 / 2);
  const Scalar log_q =
      log_sum_exp<Scalar, 3>({Scalar(2) * c1, Scalar(2) * c2, log(Scalar(2)) + cb + c1 + c2}) -
      Scalar(2) * log_sinh(lb / 2);
  return Scalar(2) * asinh_of_exp(log_q / 2);
}

/// Length of the orthogeodesic between sides beta1 and beta2 in the pants with
/// third side gamma. Uses cosh(l) - 1 = 2 sinh^2(l/2) and
/// c1 c2 - s1 s2 = cosh((lb1 - lb2)/2).
template <typename Scalar>
Scalar arc_length_distinct_boundaries(Scalar lb1, Scalar lb2, Scalar lg) {
  require_finite_nonnegative(lb1, "beta1 length");
  require_finite_nonnegative(lb2, "beta2 length");
  require_finite_nonnegative(lg, "gamma length");
  if (lb1 == Scalar(0) || lb2 == Scalar(0))
    throw DomainError("arc endpoint on a cusp (beta length 0)");
  using std::log;
  const Scalar log_p = log_sum_exp<Scalar, 2>({log_cosh(lg / 2), log_cosh((lb1 - lb2) / 2)}) -
                       log_sinh(lb1 / 2) - log_sinh(lb2 / 2);
  return Scalar(2) * asinh_of_exp((log_p - log(Scalar(2))) / 2);
}

/// Orthogonal distance between the sides a and b of a right-angled hexagon
/// whose alternate sides are a/2, b/2, c/2. Equals the distinct-boundary arc.
template <typename Scalar>
Scalar seam_length(Scalar a, Scalar b, Scalar c) {
  return arc_length_distinct_boundaries(a, b, c);
}

/// Intersection numbers with the three sides of a pants and the atomic
/// weights those sides carry as leaves.
struct PantsIntersectionData {
  std::array<double, 3> i{};
  std::array<double, 3> w{};

  void validate() const {
    for (int k = 0; k < 3; ++k) {
      if (!(i[k] >= 0) || !(w[k] >= 0) || !std::isfinite(i[k]) || !std::isfinite(w[k]))
        throw DomainError("intersection data must be finite and nonnegative");
      if (i[k] > 0 && w[k] > 0) throw DomainError("a weighted boundary leaf cannot be crossed");
    }
  }
};

/// i(mu, alpha) for an arc from side 0 (beta) to itself; sides 1, 2 are the gammas.
inline double intersection_arc_same(PantsIntersectionData d) {
  d.validate();
  double ib = d.i[0], i1 = d.i[1], i2 = d.i[2];
  if (i1 < i2) std::swap(i1, i2);
  const double wb = d.w[0];
  if (i1 > ib + i2) return i1 - ib + wb;
  if (ib > i1 + i2) return 0.0;
  return 0.5 * (i1 + i2 - ib) + wb;
}

/// i(mu, alpha) for an arc from side 0 (beta1) to side 1 (beta2); side 2 is gamma.
/// Each endpoint on a leaf contributes half its weight in every case.
inline double intersection_arc_distinct(PantsIntersectionData d) {
  d.validate();
  double i1 = d.i[0], i2 = d.i[1];
  if (i1 < i2) std::swap(i1, i2);
  const double ig = d.i[2];
  const double leaves = 0.5 * (d.w[0] + d.w[1]);
  if (ig > i1 + i2) return 0.5 * (ig - i1 - i2) + leaves;
  return leaves;
}

/// Upper bound 3|chi| / sinh(e^t omega / 2) for a leaf of weight omega.
template <typename Scalar>
Scalar theret_upper_bound(Scalar omega, Scalar t, Scalar abs_chi) {
  if (!(omega > Scalar(0)) || !std::isfinite(static_cast<long double>(omega)))
    throw DomainError("leaf weight must be positive");
  if (!(abs_chi >= Scalar(1))) throw DomainError("|chi| must be at least 1");
  if (!std::isfinite(static_cast<long double>(t))) throw DomainError("t must be finite");
  using std::exp;
  using std::log;
  return exp(log(Scalar(3) * abs_chi) - log_sinh(exp(t) * omega / 2));
}

}  // namespace arcmetric::hyptrig
