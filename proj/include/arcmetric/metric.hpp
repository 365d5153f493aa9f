#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "arcmetric/geometry.hpp"
#include "arcmetric/lamination.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric {

/// log of the largest length ratio over a panel, with the entry attaining it.
/// Ties go to the earliest panel entry.
struct MetricValue {
  double value = 0.0;
  std::size_t maximizer = 0;
  std::string maximizer_id;
  int panel_complexity = 0;
};

MetricValue arc_metric(const Surface& s, const FNPoint& x, const FNPoint& y, const Panel& panel);

/// Same quantity from precomputed panel lengths.
MetricValue arc_metric(const Panel& panel, const Eigen::VectorXd& lx, const Eigen::VectorXd& ly);

/// max(d(X,Y), d(Y,X)).
double symmetrized_distance(const Surface& s, const FNPoint& x, const FNPoint& y,
                            const Panel& panel);

/// Interior horofunction Phi_X(Y) = d(Y,X) - d(X0,X), or boundary horofunction
/// Phi_mu(Y) = log max i(mu,g)/l_g(Y) - log max i(mu,g)/l_g(X0), both over a panel.
class Horofunction {
 public:
  enum class Kind { interior, boundary };

  static Horofunction interior(const Surface& s, const FNPoint& x, const FNPoint& base,
                               Panel panel);
  static Horofunction boundary(const Surface& s, const RationalLamination& mu,
                               const FNPoint& base, Panel panel);

  double operator()(const FNPoint& y) const;

  Kind kind() const { return kind_; }
  /// d(X0,X) for interior points, log sup_g i(mu,g)/l_g(X0) for boundary points.
  double offset() const { return offset_; }
  const Panel& panel() const { return panel_; }

 private:
  Horofunction(const Surface& s, Kind kind, Panel panel)
      : surface_(s), kind_(kind), panel_(std::move(panel)) {}

  Surface surface_;
  Kind kind_;
  Panel panel_;
  Eigen::VectorXd numerators_;
  double offset_ = 0.0;
};

/// Panel lengths scaled to sup-norm 1.
Eigen::VectorXd thurston_vector(const Surface& s, const FNPoint& x, const Panel& panel);

/// i(mu, g) over the panel, scaled to sup-norm 1.
Eigen::VectorXd intersection_vector(const Surface& s, const RationalLamination& mu,
                                    const Panel& panel);

struct LimitReport {
  enum class Kind { interior, boundary, none };
  Kind kind = Kind::none;
  FNPoint point;
  Eigen::VectorXd vector;
  /// Estimated distance of the last sample from the limit.
  double tail_estimate = 0.0;
  int panel_complexity = 0;
};

/// Classifies a sampled sequence: interior limit when the FN coordinates
/// (log lengths, twists) converge, boundary limit when only the projective
/// length vector converges, otherwise no limit. Convergence means the
/// geometric tail estimate from the last two steps is within tolerance.
LimitReport detect_limit(const Surface& s, const std::vector<FNPoint>& sequence,
                         const Panel& panel, double tolerance = 1e-6);

}  // namespace arcmetric
