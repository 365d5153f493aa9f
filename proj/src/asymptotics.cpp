#include "arcmetric/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "arcmetric/errors.hpp"
#include "arcmetric/hyptrig.hpp"

namespace arcmetric {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::grow: return "grow";
    case Regime::decay: return "decay";
    case Regime::hold: return "hold";
  }
  return "?";
}

namespace {

Regime regime_for(double intersection, double leaf) {
  if (intersection > 0) return Regime::grow;
  if (leaf > 0) return Regime::decay;
  return Regime::hold;
}

double prescribed(Regime r, double intersection, double leaf, double held, double t,
                  double abs_chi) {
  switch (r) {
    case Regime::grow: return std::exp(t) * intersection;
    case Regime::decay: return hyptrig::theret_upper_bound(leaf, t, abs_chi);
    case Regime::hold: return held;
  }
  return held;
}

}  // namespace

PathSpec PathSpec::from_lamination(const Surface& s, RationalLamination mu, FNPoint initial,
                                   std::vector<double> grid) {
  PathSpec p;
  for (int k = 0; k < s.signature().interior_curve_count(); ++k) {
    const auto c = s.decomposition_curve(k);
    p.interior.push_back(regime_for(intersection_number(s, mu, c), mu.weight_of(c.id)));
  }
  for (int j = 0; j < s.signature().boundaries; ++j) {
    const auto b = s.boundary(j);
    p.boundary.push_back(regime_for(intersection_number(s, mu, b), mu.weight_of(b.id)));
  }
  p.mu = std::move(mu);
  p.initial = std::move(initial);
  p.grid = std::move(grid);
  p.abs_chi_double = 2.0 * std::abs(s.signature().euler_characteristic());
  p.validate(s);
  return p;
}

void PathSpec::validate(const Surface& s) const {
  initial.validate();
  if (initial.doubled || initial.surface != s.signature())
    throw SpecError("initial point is not on this surface");
  if (static_cast<int>(interior.size()) != s.signature().interior_curve_count() ||
      static_cast<int>(boundary.size()) != s.signature().boundaries)
    throw SpecError("every decomposition and boundary curve needs exactly one regime");
  auto check = [&](const HomotopyClass& c, Regime r) {
    const double i = intersection_number(s, mu, c);
    const double w = mu.weight_of(c.id);
    const bool ok = (r == Regime::grow && i > 0) || (r == Regime::decay && w > 0) ||
                    (r == Regime::hold && i == 0 && w == 0);
    if (!ok)
      throw SpecError("regime '" + std::string(regime_name(r)) + "' on " + c.id +
                      " does not match the lamination");
  };
  for (int k = 0; k < static_cast<int>(interior.size()); ++k) check(s.decomposition_curve(k), interior[k]);
  for (int j = 0; j < static_cast<int>(boundary.size()); ++j) check(s.boundary(j), boundary[j]);
  if (grid.empty()) throw SpecError("grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(grid[k]) || grid[k] < 0) throw SpecError("grid values must be finite and >= 0");
    if (k > 0 && !(grid[k] > grid[k - 1])) throw SpecError("grid must be strictly increasing");
  }
  if (!(abs_chi_double >= 1)) throw SpecError("|chi| of the double must be at least 1");
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0) || !(stop >= start)) throw DomainError("grid needs step > 0 and stop >= start");
  std::vector<double> g;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long k = 0; k <= n; ++k) g.push_back(start + static_cast<double>(k) * step);
  return g;
}

std::vector<double> default_grid() { return make_grid(0.0, 10.0, 0.5); }

FNPoint scaling_path(const Surface& s, const PathSpec& spec, double t) {
  spec.validate(s);
  if (!(t >= spec.grid.front() && t <= spec.grid.back()))
    throw DomainError("t lies outside the grid range");
  FNPoint x = spec.initial;
  auto value = [&](Regime r, const HomotopyClass& c, double held) {
    const double l = prescribed(r, intersection_number(s, spec.mu, c), spec.mu.weight_of(c.id), held,
                                t, spec.abs_chi_double);
    if (!(l >= std::numeric_limits<double>::min()) || !std::isfinite(l)) {
      std::ostringstream msg;
      msg << "length of " << c.id << " at t=" << t << " is outside double range";
      throw DomainError(msg.str());
    }
    return l;
  };
  for (int k = 0; k < static_cast<int>(spec.interior.size()); ++k)
    x.lengths[k] = value(spec.interior[k], s.decomposition_curve(k), spec.initial.lengths[k]);
  for (int j = 0; j < static_cast<int>(spec.boundary.size()); ++j)
    x.boundary_lengths[j] = value(spec.boundary[j], s.boundary(j), spec.initial.boundary_lengths[j]);
  return x;
}

InequalityReport verify_key_inequality(const Surface& s, const PathSpec& spec,
                                       const std::vector<HomotopyClass>& targets, double cap) {
  spec.validate(s);
  InequalityReport report;
  report.grid = spec.grid;
  report.cap = cap;
  std::vector<FNPoint> path;
  for (double t : spec.grid) path.push_back(scaling_path(s, spec, t));

  for (const auto& target : targets) {
    TargetDeviation dev;
    dev.id = target.id;
    dev.exploratory = target.kind == ClassKind::word_curve || target.kind == ClassKind::word_arc;
    try {
      dev.intersection = intersection_number(s, spec.mu, target);
      for (std::size_t k = 0; k < path.size(); ++k) {
        const double growth = std::exp(spec.grid[k]) * dev.intersection;
        const double l = class_length(s, path[k], target);
        dev.lower.push_back(growth - l);
        dev.upper.push_back(l - growth);
      }
    } catch (const UnsupportedError& e) {
      report.skipped.push_back(target.id + ": " + e.what());
      continue;
    }
    dev.max_lower = *std::max_element(dev.lower.begin(), dev.lower.end());
    dev.max_upper = *std::max_element(dev.upper.begin(), dev.upper.end());
    dev.flagged = dev.max_lower > cap || dev.max_upper > cap;
    report.targets.push_back(std::move(dev));
  }
  return report;
}

std::vector<double> boundary_convergence(const Surface& s, const PathSpec& spec,
                                         const Panel& panel) {
  const Eigen::VectorXd target = intersection_vector(s, spec.mu, panel);
  std::vector<double> out;
  for (double t : spec.grid)
    out.push_back((thurston_vector(s, scaling_path(s, spec, t), panel) - target)
                      .lpNorm<Eigen::Infinity>());
  return out;
}

std::vector<double> horo_convergence(const Surface& s, const PathSpec& spec, const FNPoint& x0,
                                     const std::vector<FNPoint>& probes, const Panel& panel) {
  const auto limit = Horofunction::boundary(s, spec.mu, x0, panel);
  std::vector<double> phi_mu;
  for (const auto& y : probes) phi_mu.push_back(limit(y));
  std::vector<double> out;
  for (double t : spec.grid) {
    const auto h = Horofunction::interior(s, scaling_path(s, spec, t), x0, panel);
    double worst = 0.0;
    for (std::size_t k = 0; k < probes.size(); ++k)
      worst = std::max(worst, std::abs(h(probes[k]) - phi_mu[k]));
    out.push_back(worst);
  }
  return out;
}

double log_ratio_sup(const Surface& s, const RationalLamination& mu, const FNPoint& y,
                     const Panel& panel) {
  const Eigen::VectorXd l = panel_lengths(s, y, panel);
  double best = 0.0;
  for (std::size_t k = 0; k < panel.size(); ++k)
    best = std::max(best, intersection_number(s, mu, panel.entries[k]) / l[static_cast<Eigen::Index>(k)]);
  if (!(best > 0)) throw DomainError("lamination meets no panel entry");
  return std::log(best);
}

SeparationWitness separation_experiment(const Surface& s, const RationalLamination& mu,
                                        const RationalLamination& nu, const FNPoint& x0,
                                        const SeparationOptions& options) {
  if (!s.tier_one()) throw UnsupportedError("separation needs a registered Tier-1 surface");
  if (mu.empty() || nu.empty()) throw DomainError("laminations must be nonzero");
  if (mu == nu) throw DomainError("separation needs two distinct laminations");
  const Panel panel = s.panel(options.panel_complexity);
  const Refinement r = refine(s, mu, options.panel_complexity);

  std::ostringstream tried;
  for (double eps : options.epsilons) {
    RationalLamination target = mu;
    if (!r.zeta.empty()) {
      const double len = lamination_length(s, x0, r.zeta);
      std::vector<LaminationTerm> terms;
      for (const auto& t : mu.terms()) terms.push_back({t.cls, (1.0 - eps) * t.weight});
      for (const auto& t : r.zeta.terms()) terms.push_back({t.cls, eps / len * t.weight});
      target = RationalLamination::make(s, std::move(terms));
    }
    const PathSpec spec = PathSpec::from_lamination(s, target, x0, options.grid);
    tried << " eps=" << eps;
    for (double t : options.grid) {
      FNPoint y;
      try {
        y = scaling_path(s, spec, t);
      } catch (const DomainError&) {
        break;
      }
      const double lhs = log_ratio_sup(s, nu, y, panel);
      const double rhs = log_ratio_sup(s, mu, y, panel);
      if (lhs - rhs >= options.min_gap) return {y, lhs, rhs, eps, t, target};
    }
    if (r.zeta.empty()) break;
  }
  std::ostringstream msg;
  msg << "no separating point found; tried" << tried.str() << " over t in [" << options.grid.front()
      << ", " << options.grid.back() << "]";
  throw DomainError(msg.str());
}

}  // namespace arcmetric
