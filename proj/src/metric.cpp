#include "arcmetric/metric.hpp"

#include <cmath>
#include <limits>

#include "arcmetric/errors.hpp"

namespace arcmetric {

MetricValue arc_metric(const Panel& panel, const Eigen::VectorXd& lx, const Eigen::VectorXd& ly) {
  if (panel.size() == 0) throw DomainError("panel is empty");
  Eigen::Index arg = 0;
  const double ratio = (ly.array() / lx.array()).maxCoeff(&arg);
  MetricValue v;
  v.value = std::log(ratio);
  v.maximizer = static_cast<std::size_t>(arg);
  v.maximizer_id = panel.entries[v.maximizer].id;
  v.panel_complexity = panel.complexity;
  return v;
}

MetricValue arc_metric(const Surface& s, const FNPoint& x, const FNPoint& y, const Panel& panel) {
  if (x.surface != y.surface) throw DomainError("points lie on different surfaces");
  if (panel.size() == 0) throw DomainError("panel is empty");
  return arc_metric(panel, panel_lengths(s, x, panel), panel_lengths(s, y, panel));
}

double symmetrized_distance(const Surface& s, const FNPoint& x, const FNPoint& y,
                            const Panel& panel) {
  return std::max(arc_metric(s, x, y, panel).value, arc_metric(s, y, x, panel).value);
}

Horofunction Horofunction::interior(const Surface& s, const FNPoint& x, const FNPoint& base,
                                    Panel panel) {
  Horofunction h(s, Kind::interior, std::move(panel));
  h.numerators_ = panel_lengths(s, x, h.panel_);
  h.offset_ = arc_metric(h.panel_, panel_lengths(s, base, h.panel_), h.numerators_).value;
  return h;
}

Horofunction Horofunction::boundary(const Surface& s, const RationalLamination& mu,
                                    const FNPoint& base, Panel panel) {
  if (mu.empty()) throw DomainError("boundary horofunction needs a nonzero lamination");
  Horofunction h(s, Kind::boundary, std::move(panel));
  h.numerators_.resize(static_cast<Eigen::Index>(h.panel_.size()));
  for (std::size_t k = 0; k < h.panel_.size(); ++k)
    h.numerators_[static_cast<Eigen::Index>(k)] = intersection_number(s, mu, h.panel_.entries[k]);
  if (h.numerators_.maxCoeff() <= 0.0)
    throw DomainError("degenerate panel: the lamination meets no panel entry");
  h.offset_ = std::log((h.numerators_.array() / panel_lengths(s, base, h.panel_).array()).maxCoeff());
  return h;
}

double Horofunction::operator()(const FNPoint& y) const {
  const Eigen::VectorXd ly = panel_lengths(surface_, y, panel_);
  return std::log((numerators_.array() / ly.array()).maxCoeff()) - offset_;
}

Eigen::VectorXd thurston_vector(const Surface& s, const FNPoint& x, const Panel& panel) {
  if (panel.size() == 0) throw DomainError("panel is empty");
  const Eigen::VectorXd l = panel_lengths(s, x, panel);
  return l / l.maxCoeff();
}

Eigen::VectorXd intersection_vector(const Surface& s, const RationalLamination& mu,
                                    const Panel& panel) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(panel.size()));
  for (std::size_t k = 0; k < panel.size(); ++k)
    v[static_cast<Eigen::Index>(k)] = intersection_number(s, mu, panel.entries[k]);
  const double top = v.size() ? v.maxCoeff() : 0.0;
  if (!(top > 0)) throw DomainError("lamination meets no panel entry");
  return v / top;
}

namespace {

/// Distance from the last sample to the limit, assuming geometric decay of
/// the step sizes; infinite when the steps do not shrink.
double tail_estimate(const std::vector<Eigen::VectorXd>& seq) {
  const std::size_t n = seq.size();
  const double last = (seq[n - 1] - seq[n - 2]).lpNorm<Eigen::Infinity>();
  if (last == 0.0) return 0.0;
  if (n < 3) return std::numeric_limits<double>::infinity();
  const double prev = (seq[n - 2] - seq[n - 3]).lpNorm<Eigen::Infinity>();
  if (prev == 0.0 || last >= prev) return std::numeric_limits<double>::infinity();
  const double r = last / prev;
  return last * r / (1.0 - r);
}

Eigen::VectorXd fn_coordinates(const FNPoint& x) {
  Eigen::VectorXd c(x.lengths.size() + x.twists.size() + x.boundary_lengths.size());
  c << x.lengths.array().log().matrix(), x.twists, x.boundary_lengths.array().log().matrix();
  return c;
}

}  // namespace

LimitReport detect_limit(const Surface& s, const std::vector<FNPoint>& sequence,
                         const Panel& panel, double tolerance) {
  if (sequence.size() < 2) throw DomainError("limit detection needs at least two samples");
  LimitReport r;
  r.panel_complexity = panel.complexity;
  std::vector<Eigen::VectorXd> coords, vectors;
  for (const auto& x : sequence) {
    coords.push_back(fn_coordinates(x));
    vectors.push_back(thurston_vector(s, x, panel));
  }
  const double fn_tail = tail_estimate(coords);
  if (fn_tail <= tolerance) {
    r.kind = LimitReport::Kind::interior;
    r.point = sequence.back();
    r.vector = vectors.back();
    r.tail_estimate = fn_tail;
    return r;
  }
  const double pv_tail = tail_estimate(vectors);
  if (pv_tail <= tolerance) {
    r.kind = LimitReport::Kind::boundary;
    r.vector = vectors.back();
    r.tail_estimate = pv_tail;
    return r;
  }
  r.tail_estimate = std::min(fn_tail, pv_tail);
  return r;
}

}  // namespace arcmetric
