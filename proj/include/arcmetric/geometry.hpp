#pragma once

#include <Eigen/Core>
#include <random>

#include "arcmetric/lamination.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric {

/// Fenchel-Nielsen coordinates relative to the canonical decomposition of
/// `surface`, or, when `doubled`, relative to the symmetric decomposition of
/// its double (interior curves ordered C, B, Cbar; no boundary).
///
/// Twists are in hyperbolic length units; positive means a right twist.
struct FNPoint {
  SurfaceSignature surface;
  bool doubled = false;
  Eigen::VectorXd lengths;
  Eigen::VectorXd twists;
  Eigen::VectorXd boundary_lengths;

  static FNPoint make(const Surface& s, Eigen::VectorXd lengths, Eigen::VectorXd twists,
                      Eigen::VectorXd boundary_lengths);
  void validate() const;

  /// Length of a pants side; punctures have length 0.
  double side_length(Side side) const;

  bool operator==(const FNPoint& o) const;
};

FNPoint pants_point(double b1, double b2, double b3);
FNPoint torus_point(double length, double twist, double boundary);

/// Lengths uniform in [lo, hi], twists uniform in [-1, 1].
FNPoint random_point(const Surface& s, std::mt19937_64& rng, double lo = 0.5, double hi = 5.0);

/// (l_C, t_C) x l_B  ->  (l_C, t_C) x (l_B, 0) x (l_C, -t_C).
FNPoint double_point(const Surface& s, const FNPoint& x);

/// Closed-curve length: FN coordinate for boundary and decomposition curves,
/// trace length of the surface holonomy for registered word classes.
double curve_length(const Surface& s, const FNPoint& x, const HomotopyClass& gamma);

/// Orthogeodesic length. Pants-local arcs use the pants formulas; a torus
/// word arc of slope u is pants-local for the decomposition cut along u, so
/// it uses the same-boundary formula with l_u from the holonomy.
double arc_length(const Surface& s, const FNPoint& x, const HomotopyClass& alpha);

double class_length(const Surface& s, const FNPoint& x, const HomotopyClass& c);

/// Length of the doubled class on the double of x, computed from the
/// holonomy of the double: closed curves measure their upper copy, arcs
/// their doubled closed curve.
double doubled_length(const Surface& s, const FNPoint& x, const HomotopyClass& c);

double lamination_length(const Surface& s, const FNPoint& x, const RationalLamination& mu);

Eigen::VectorXd panel_lengths(const Surface& s, const FNPoint& x, const Panel& panel);

}  // namespace arcmetric
