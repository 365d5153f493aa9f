#include "arcmetric/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "arcmetric/errors.hpp"
#include "arcmetric/geometry.hpp"

namespace arcmetric {

namespace {

bool adapted(const HomotopyClass& c) {
  return c.kind == ClassKind::boundary_curve || c.kind == ClassKind::decomposition_curve ||
         c.kind == ClassKind::pants_arc;
}

double endpoints_on(const HomotopyClass& c, int boundary) {
  switch (c.kind) {
    case ClassKind::pants_arc: {
      const Side b{SideKind::boundary, boundary};
      if (c.same_boundary) return c.pattern[0] == b ? 2.0 : 0.0;
      return (c.pattern[0] == b ? 1.0 : 0.0) + (c.pattern[1] == b ? 1.0 : 0.0);
    }
    case ClassKind::word_arc: return boundary == 0 ? 2.0 : 0.0;
    default: return 0.0;
  }
}

double slope_table(const Surface& s, const HomotopyClass& c, const HomotopyClass& g) {
  const auto sc = s.slope_of(c), sg = s.slope_of(g);
  if (!sc || !sg) throw UnsupportedError("no crossing table for '" + c.id + "' x '" + g.id + "'");
  const int det = slope_det(*sc, *sg);
  if (c.is_arc() && g.is_arc()) return std::max(det - 1, 0);
  return det;
}

HomotopyClass side_class(const Surface& s, Side side) {
  if (side.kind == SideKind::interior) return s.decomposition_curve(side.index);
  return s.boundary(side.index);
}

}  // namespace

RationalLamination RationalLamination::make(const Surface& s, std::vector<LaminationTerm> terms) {
  std::map<std::string, LaminationTerm> merged;
  for (auto& t : terms) {
    if (!(t.weight > 0) || !std::isfinite(t.weight))
      throw DomainError("lamination weight for '" + t.cls.id + "' must be positive and finite");
    auto [it, fresh] = merged.try_emplace(t.cls.id, t);
    if (!fresh) it->second.weight += t.weight;
  }
  RationalLamination out;
  for (auto& [id, t] : merged) out.terms_.push_back(std::move(t));
  for (std::size_t x = 0; x < out.terms_.size(); ++x)
    for (std::size_t y = 0; y < out.terms_.size(); ++y) {
      if (x == y) continue;
      if (intersection_number(s, out.terms_[x].cls, out.terms_[y].cls) != 0.0)
        throw DomainError("components '" + out.terms_[x].cls.id + "' and '" +
                          out.terms_[y].cls.id + "' intersect");
    }
  return out;
}

bool RationalLamination::contains(std::string_view id) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.cls.id == id; });
}

double RationalLamination::weight_of(std::string_view id) const {
  for (const auto& t : terms_)
    if (t.cls.id == id) return t.weight;
  return 0.0;
}

RationalLamination RationalLamination::scaled(double factor) const {
  if (!(factor > 0) || !std::isfinite(factor)) throw DomainError("scale factor must be positive");
  RationalLamination out = *this;
  for (auto& t : out.terms_) t.weight *= factor;
  return out;
}

bool RationalLamination::operator==(const RationalLamination& o) const {
  return std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                    [](const auto& l, const auto& r) {
                      return l.cls.id == r.cls.id && l.weight == r.weight;
                    });
}

bool approx_equal(const RationalLamination& a, const RationalLamination& b, double rel_tol) {
  return std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                    [&](const auto& l, const auto& r) {
                      return l.cls.id == r.cls.id &&
                             std::abs(l.weight - r.weight) <=
                                 rel_tol * std::max({1.0, l.weight, r.weight});
                    });
}

double intersection_number(const Surface& s, const HomotopyClass& c, const HomotopyClass& g) {
  if (c.id == g.id) return 0.0;
  switch (g.kind) {
    case ClassKind::boundary_curve: return c.is_arc() ? endpoints_on(c, g.label) : 0.0;
    case ClassKind::decomposition_curve:
      if (s.marking() == Marking::one_holed_torus && c.kind != ClassKind::boundary_curve)
        return slope_table(s, c, g);
      if (!adapted(c)) throw UnsupportedError("no crossing table for '" + c.id + "'");
      return 0.0;
    case ClassKind::pants_arc: {
      hyptrig::PantsIntersectionData d;
      for (int k = 0; k < 3; ++k) {
        const Side side = g.pattern[k];
        if (side.kind == SideKind::puncture) continue;
        const HomotopyClass sc = side_class(s, side);
        d.i[k] = intersection_number(s, c, sc);
        d.w[k] = (c.id == sc.id) ? 1.0 : 0.0;
      }
      return g.same_boundary ? hyptrig::intersection_arc_same(d)
                             : hyptrig::intersection_arc_distinct(d);
    }
    case ClassKind::word_curve:
    case ClassKind::word_arc:
      if (c.kind == ClassKind::boundary_curve) return g.is_arc() ? 1.0 : 0.0;
      return slope_table(s, c, g);
  }
  throw std::logic_error("unreachable class kind");
}

double intersection_number(const Surface& s, const RationalLamination& mu,
                           const HomotopyClass& g) {
  double total = 0.0;
  for (const auto& t : mu.terms()) total += t.weight * intersection_number(s, t.cls, g);
  return total;
}

hyptrig::PantsIntersectionData side_data(const Surface& s, const RationalLamination& mu,
                                         const HomotopyClass& arc) {
  if (arc.kind != ClassKind::pants_arc) throw UnsupportedError("'" + arc.id + "' is not pants-local");
  hyptrig::PantsIntersectionData d;
  for (int k = 0; k < 3; ++k) {
    const Side side = arc.pattern[k];
    if (side.kind == SideKind::puncture) continue;
    const HomotopyClass sc = side_class(s, side);
    d.i[k] = intersection_number(s, mu, sc);
    d.w[k] = mu.weight_of(sc.id);
  }
  return d;
}

DTCoordinates dt_encode(const Surface& s, const RationalLamination& mu) {
  for (const auto& t : mu.terms())
    if (!adapted(t.cls))
      throw UnsupportedError("DT encoding needs decomposition-adapted classes, got '" + t.cls.id +
                             "'");
  DTCoordinates c;
  for (int k = 0; k < s.signature().interior_curve_count(); ++k) {
    const auto curve = s.decomposition_curve(k);
    c.interior.emplace_back(intersection_number(s, mu, curve), mu.weight_of(curve.id));
  }
  for (int j = 0; j < s.signature().boundaries; ++j) {
    const auto b = s.boundary(j);
    const double i = intersection_number(s, mu, b);
    const double w = mu.weight_of(b.id);
    c.theta_hat.push_back(i != 0.0 ? i : (w > 0.0 ? -w : 0.0));
  }
  return c;
}

RationalLamination dt_decode(const Surface& s, const DTCoordinates& c) {
  const auto& sig = s.signature();
  if (static_cast<int>(c.interior.size()) != sig.interior_curve_count() ||
      static_cast<int>(c.theta_hat.size()) != sig.boundaries)
    throw DomainError("DT coordinate vector has the wrong shape");
  std::vector<LaminationTerm> terms;
  for (int k = 0; k < sig.interior_curve_count(); ++k) {
    const auto [i, theta] = c.interior[k];
    if (!std::isfinite(i) || !std::isfinite(theta) || i < 0)
      throw DomainError("DT pair must be finite with i >= 0");
    if (i != 0.0)
      throw UnsupportedError("coordinates crossing decomposition curves are not representable");
    if (theta != 0.0) terms.push_back({s.decomposition_curve(k), std::abs(theta)});
  }
  for (int j = 0; j < sig.boundaries; ++j) {
    if (!std::isfinite(c.theta_hat[j])) throw DomainError("theta_hat must be finite");
    if (c.theta_hat[j] < 0) terms.push_back({s.boundary(j), -c.theta_hat[j]});
  }

  // Inside each pants the endpoint counts determine the arc weights.
  const auto& d = s.decomposition();
  for (int k = 0; k < static_cast<int>(d.pants.size()); ++k) {
    const auto& sides = d.pants[k].sides;
    std::array<double, 3> n{};
    for (int x = 0; x < 3; ++x)
      if (sides[x].kind == SideKind::boundary) n[x] = std::max(c.theta_hat[sides[x].index], 0.0);
    if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;

    std::array<std::array<double, 3>, 3> w{};
    int dominant = -1;
    for (int x = 0; x < 3; ++x)
      if (n[x] > n[(x + 1) % 3] + n[(x + 2) % 3]) dominant = x;
    if (dominant >= 0) {
      const int y = (dominant + 1) % 3, z = (dominant + 2) % 3;
      w[dominant][dominant] = 0.5 * (n[dominant] - n[y] - n[z]);
      w[dominant][y] = n[y];
      w[dominant][z] = n[z];
    } else {
      for (int x = 0; x < 3; ++x) {
        const int y = (x + 1) % 3, z = (x + 2) % 3;
        w[x][y] = 0.5 * (n[x] + n[y] - n[z]);
      }
    }
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (w[x][y] == 0.0) continue;
        if (sides[x].kind != SideKind::boundary || sides[y].kind != SideKind::boundary)
          throw UnsupportedError("coordinates need arcs ending on interior curves or punctures");
        const Side lo = std::min(sides[x], sides[y]), hi = std::max(sides[x], sides[y]);
        for (const auto& a : s.pants_arcs()) {
          if (a.host != k) continue;
          const bool hit = a.same_boundary ? (x == y && a.pattern[0] == lo)
                                           : (x != y && a.pattern[0] == lo && a.pattern[1] == hi);
          if (hit) terms.push_back({a, w[x][y]});
        }
      }
  }
  return RationalLamination::make(s, std::move(terms));
}

std::vector<std::pair<double, double>> dt_encode_double(const Surface& s,
                                                        const RationalLamination& mu) {
  const DTCoordinates c = dt_encode(s, mu);
  std::vector<std::pair<double, double>> out = c.interior;
  for (double th : c.theta_hat) out.emplace_back(th > 0 ? th : 0.0, th < 0 ? -th : 0.0);
  for (const auto& [i, theta] : c.interior) out.emplace_back(i, -theta);
  return out;
}

SphereDimension sphere_dimension(const SurfaceSignature& s) {
  const int coordinate = 6 * s.genus - 6 + 3 * s.boundaries + 2 * s.punctures;
  return {coordinate, coordinate - 1};
}

ErgodicDecomposition ergodic_decomposition(const RationalLamination& nu,
                                           const RationalLamination& mu) {
  if (mu.empty()) throw DomainError("base lamination must be nonzero");
  ErgodicDecomposition e;
  for (const auto& t : mu.terms()) e.coefficients.emplace_back(t.cls, nu.weight_of(t.cls.id) / t.weight);
  for (const auto& t : nu.terms())
    if (!mu.contains(t.cls.id)) e.representable = false;
  return e;
}

double ratio_sup(const RationalLamination& nu, const RationalLamination& mu) {
  const auto e = ergodic_decomposition(nu, mu);
  if (!e.representable) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  for (const auto& [cls, f] : e.coefficients) best = std::max(best, f);
  return best;
}

namespace {

bool disjoint_from(const Surface& s, const std::vector<LaminationTerm>& terms,
                   const HomotopyClass& c) {
  return std::all_of(terms.begin(), terms.end(), [&](const LaminationTerm& t) {
    return t.cls.id != c.id && intersection_number(s, t.cls, c) == 0.0 &&
           intersection_number(s, c, t.cls) == 0.0;
  });
}

bool present(const std::vector<LaminationTerm>& terms, const std::string& id) {
  return std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return t.cls.id == id; });
}

}  // namespace

Refinement refine(const Surface& s, const RationalLamination& mu, int panel_complexity) {
  if (!s.tier_one()) throw UnsupportedError("refinement needs a registered Tier-1 surface");
  const Panel panel = s.panel(panel_complexity);
  std::vector<LaminationTerm> all = mu.terms();
  std::vector<LaminationTerm> added;
  auto add = [&](const HomotopyClass& c) {
    all.push_back({c, 1.0});
    added.push_back({c, 1.0});
  };

  // (I) boundaries disjoint from mu.
  for (int j = 0; j < s.signature().boundaries; ++j) {
    const auto b = s.boundary(j);
    if (!present(all, b.id) && disjoint_from(s, all, b)) add(b);
  }
  // (II) arcs disjoint from everything chosen so far, in panel order.
  for (const auto& c : panel.entries)
    if (c.is_arc() && !present(all, c.id) && disjoint_from(s, all, c)) add(c);
  // (III) a single surviving arc on the torus cuts it into an annulus whose
  // core is the curve of the same slope.
  if (s.marking() == Marking::one_holed_torus) {
    std::vector<HomotopyClass> arcs;
    for (const auto& t : all)
      if (t.cls.is_arc()) arcs.push_back(t.cls);
    if (arcs.size() == 1) {
      const auto core = s.word_curve(*s.slope_of(arcs.front()));
      if (!present(all, core.id) && disjoint_from(s, all, core)) add(core);
    }
  }

  Refinement r;
  r.mu_hat = RationalLamination::make(s, all);
  if (!added.empty()) r.zeta = RationalLamination::make(s, added);
  if (!completion_holds(s, r.mu_hat, panel))
    throw std::logic_error("refinement failed its completion check");
  return r;
}

bool completion_holds(const Surface& s, const RationalLamination& mu_hat, const Panel& panel) {
  for (int j = 0; j < s.signature().boundaries; ++j) {
    const auto b = s.boundary(j);
    if (!mu_hat.contains(b.id) && intersection_number(s, mu_hat, b) == 0.0) return false;
  }
  for (const auto& c : panel.entries) {
    if (!c.is_arc() || mu_hat.contains(c.id)) continue;
    if (intersection_number(s, mu_hat, c) == 0.0) return false;
  }
  return true;
}

RationalLamination sample_adapted_lamination(const Surface& s, std::mt19937_64& rng) {
  std::vector<HomotopyClass> pool;
  for (int j = 0; j < s.signature().boundaries; ++j) pool.push_back(s.boundary(j));
  for (int k = 0; k < s.signature().interior_curve_count(); ++k)
    pool.push_back(s.decomposition_curve(k));
  pool.insert(pool.end(), s.pants_arcs().begin(), s.pants_arcs().end());
  std::shuffle(pool.begin(), pool.end(), rng);
  // Multiples of 1/64 keep DT sums and half-sums exact.
  std::uniform_int_distribution<int> sixty_fourths(7, 192);
  std::bernoulli_distribution keep(0.7);
  std::vector<LaminationTerm> chosen;
  for (const auto& c : pool) {
    if (!chosen.empty() && !keep(rng)) continue;
    if (disjoint_from(s, chosen, c)) chosen.push_back({c, sixty_fourths(rng) / 64.0});
  }
  return RationalLamination::make(s, std::move(chosen));
}

RationalLamination normalize(const Surface& s, const RationalLamination& mu, const FNPoint& x0) {
  if (mu.empty()) throw DomainError("cannot normalize the zero lamination");
  const double len = lamination_length(s, x0, mu);
  if (!(len > 0) || !std::isfinite(len)) throw DomainError("lamination length is not positive");
  return mu.scaled(1.0 / len);
}

}  // namespace arcmetric
