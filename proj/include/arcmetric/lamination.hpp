#pragma once

#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "arcmetric/hyptrig.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric {

struct FNPoint;

struct LaminationTerm {
  HomotopyClass cls;
  double weight = 0.0;
};

/// Weighted union of pairwise disjoint curve and arc classes.
///
/// Terms are merged by class id and kept sorted by id. Disjointness is
/// strict: an arc with an endpoint on a boundary leaf meets that leaf.
class RationalLamination {
 public:
  RationalLamination() = default;

  static RationalLamination make(const Surface& s, std::vector<LaminationTerm> terms);

  const std::vector<LaminationTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool contains(std::string_view id) const;
  double weight_of(std::string_view id) const;
  RationalLamination scaled(double factor) const;

  bool operator==(const RationalLamination& o) const;

 private:
  std::vector<LaminationTerm> terms_;
};

/// Same components, weights equal up to a relative tolerance.
bool approx_equal(const RationalLamination& a, const RationalLamination& b, double rel_tol);

/// i(c, gamma) for a single component c of unit weight.
double intersection_number(const Surface& s, const HomotopyClass& c, const HomotopyClass& gamma);
/// Sum over components of weight * i(component, gamma).
double intersection_number(const Surface& s, const RationalLamination& mu,
                           const HomotopyClass& gamma);

/// Side data of mu for the host pants of a pants-local arc, in the arc's pattern order.
hyptrig::PantsIntersectionData side_data(const Surface& s, const RationalLamination& mu,
                                         const HomotopyClass& arc);

/// One (i, theta) pair per interior decomposition curve, theta_hat per boundary.
struct DTCoordinates {
  std::vector<std::pair<double, double>> interior;
  std::vector<double> theta_hat;

  bool operator==(const DTCoordinates&) const = default;
};

DTCoordinates dt_encode(const Surface& s, const RationalLamination& mu);
RationalLamination dt_decode(const Surface& s, const DTCoordinates& c);

/// Coordinates of the doubled lamination on the symmetric decomposition of
/// the double, indexed like DoubledTopology::decomposition.interior_labels.
std::vector<std::pair<double, double>> dt_encode_double(const Surface& s,
                                                        const RationalLamination& mu);

struct SphereDimension {
  int coordinate = 0;
  int sphere = 0;
};

/// 6g-6+3b+2p coordinates; b counts boundary components, p punctures.
SphereDimension sphere_dimension(const SurfaceSignature& s);

struct ErgodicDecomposition {
  std::vector<std::pair<HomotopyClass, double>> coefficients;
  /// False when nu has a component outside the support of the base.
  bool representable = true;
};

ErgodicDecomposition ergodic_decomposition(const RationalLamination& nu,
                                           const RationalLamination& mu);

/// max_j f_j for nu = sum f_j mu_j, or +inf when nu leaves supp(mu).
double ratio_sup(const RationalLamination& nu, const RationalLamination& mu);

struct Refinement {
  RationalLamination mu_hat;
  RationalLamination zeta;
};

Refinement refine(const Surface& s, const RationalLamination& mu, int panel_complexity = 2);

/// Every boundary carries a leaf of mu_hat or meets one of its arcs, and every
/// panel arc outside mu_hat meets mu_hat.
bool completion_holds(const Surface& s, const RationalLamination& mu_hat, const Panel& panel);

/// Random nonzero lamination on boundary leaves, decomposition curves and
/// pants-local arcs; weights are multiples of 1/64 in [0.109375, 3].
RationalLamination sample_adapted_lamination(const Surface& s, std::mt19937_64& rng);

RationalLamination normalize(const Surface& s, const RationalLamination& mu, const FNPoint& x0);

}  // namespace arcmetric
