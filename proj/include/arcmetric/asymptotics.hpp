#pragma once

#include <string>
#include <vector>

#include "arcmetric/geometry.hpp"
#include "arcmetric/lamination.hpp"
#include "arcmetric/metric.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric {

enum class Regime { grow, decay, hold };

const char* regime_name(Regime r);

/// FN scaling path driven by a rational lamination mu.
///
/// grow:  l_C(t) = e^t i(mu, C)                 needs i(mu, C) > 0
/// decay: l_C(t) = 3|chi(S^d)| / sinh(e^t w / 2)  needs leaf weight w > 0
/// hold:  l_C(t) = l_C of `initial`             needs neither
/// Twists stay at their values in `initial`.
struct PathSpec {
  RationalLamination mu;
  FNPoint initial;
  std::vector<Regime> interior;
  std::vector<Regime> boundary;
  std::vector<double> grid;
  double abs_chi_double = 2.0;

  /// Regimes read off from mu.
  static PathSpec from_lamination(const Surface& s, RationalLamination mu, FNPoint initial,
                                  std::vector<double> grid);
  void validate(const Surface& s) const;
};

/// start, start + step, ..., stop (inclusive up to rounding).
std::vector<double> make_grid(double start, double stop, double step);
std::vector<double> default_grid();

FNPoint scaling_path(const Surface& s, const PathSpec& spec, double t);

struct TargetDeviation {
  std::string id;
  double intersection = 0.0;
  /// Per grid point: e^t i - l and l - e^t i.
  std::vector<double> lower;
  std::vector<double> upper;
  double max_lower = 0.0;
  double max_upper = 0.0;
  bool flagged = false;
  /// Targets outside the pants-local family.
  bool exploratory = false;
};

struct InequalityReport {
  std::vector<double> grid;
  std::vector<TargetDeviation> targets;
  std::vector<std::string> skipped;
  double cap = 10.0;
};

InequalityReport verify_key_inequality(const Surface& s, const PathSpec& spec,
                                       const std::vector<HomotopyClass>& targets,
                                       double cap = 10.0);

/// Sup-norm distance between thurston_vector(X_t) and the normalized i(mu, .) per grid point.
std::vector<double> boundary_convergence(const Surface& s, const PathSpec& spec,
                                         const Panel& panel);

/// Per grid point, max over probes of |Phi_{X_t}(Y) - Phi_mu(Y)|.
std::vector<double> horo_convergence(const Surface& s, const PathSpec& spec, const FNPoint& x0,
                                     const std::vector<FNPoint>& probes, const Panel& panel);

struct SeparationOptions {
  int panel_complexity = 2;
  std::vector<double> epsilons{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
  std::vector<double> grid = default_grid();
  double min_gap = 1e-3;
};

struct SeparationWitness {
  FNPoint y;
  double lhs = 0.0;
  double rhs = 0.0;
  double epsilon = 0.0;
  double t = 0.0;
  RationalLamination target;
};

/// log max i(mu, g)/l_g(Y) over the panel.
double log_ratio_sup(const Surface& s, const RationalLamination& mu, const FNPoint& y,
                     const Panel& panel);

/// Searches the path toward (1-eps) mu + (eps/L) zeta, zeta = refine(mu) - mu
/// and L = l_zeta(X0), for a point where nu's log ratio beats mu's by min_gap.
SeparationWitness separation_experiment(const Surface& s, const RationalLamination& mu,
                                        const RationalLamination& nu, const FNPoint& x0,
                                        const SeparationOptions& options = {});

}  // namespace arcmetric
