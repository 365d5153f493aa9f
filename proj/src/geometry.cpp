#include "arcmetric/geometry.hpp"

#include <cmath>

#include "arcmetric/errors.hpp"
#include "arcmetric/holonomy.hpp"
#include "arcmetric/hyptrig.hpp"

namespace arcmetric {

namespace {

void require_positive_finite(const Eigen::VectorXd& v, const char* what) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!(v[k] > 0) || !std::isfinite(v[k]))
      throw DomainError(std::string(what) + " must be positive and finite");
}

Word lower_copy(const Word& w) {
  Word out = w;
  for (int& x : out) x += (x > 0 ? 2 : -2);
  return out;
}

}  // namespace

FNPoint FNPoint::make(const Surface& s, Eigen::VectorXd lengths, Eigen::VectorXd twists,
                      Eigen::VectorXd boundary_lengths) {
  FNPoint x;
  x.surface = s.signature();
  x.lengths = std::move(lengths);
  x.twists = std::move(twists);
  x.boundary_lengths = std::move(boundary_lengths);
  x.validate();
  return x;
}

void FNPoint::validate() const {
  const int k = surface.interior_curve_count();
  const int p = surface.boundaries;
  const Eigen::Index interior = doubled ? 2 * k + p : k;
  const Eigen::Index boundary = doubled ? 0 : p;
  if (lengths.size() != interior || twists.size() != interior ||
      boundary_lengths.size() != boundary)
    throw DomainError("FN coordinate vectors do not match the decomposition");
  require_positive_finite(lengths, "interior lengths");
  require_positive_finite(boundary_lengths, "boundary lengths");
  if (!twists.allFinite()) throw DomainError("twists must be finite");
}

double FNPoint::side_length(Side side) const {
  switch (side.kind) {
    case SideKind::interior: return lengths[side.index];
    case SideKind::boundary: return boundary_lengths[side.index];
    case SideKind::puncture: return 0.0;
  }
  throw std::logic_error("unreachable side kind");
}

bool FNPoint::operator==(const FNPoint& o) const {
  return surface == o.surface && doubled == o.doubled && lengths == o.lengths &&
         twists == o.twists && boundary_lengths == o.boundary_lengths;
}

FNPoint pants_point(double b1, double b2, double b3) {
  static const Surface pants = Surface::build(0, 0, 3);
  return FNPoint::make(pants, Eigen::VectorXd(0), Eigen::VectorXd(0),
                       Eigen::Vector3d(b1, b2, b3));
}

FNPoint torus_point(double length, double twist, double boundary) {
  static const Surface torus = Surface::build(1, 0, 1);
  return FNPoint::make(torus, Eigen::VectorXd::Constant(1, length),
                       Eigen::VectorXd::Constant(1, twist),
                       Eigen::VectorXd::Constant(1, boundary));
}

FNPoint random_point(const Surface& s, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> len(lo, hi), tw(-1.0, 1.0);
  const int k = s.signature().interior_curve_count(), p = s.signature().boundaries;
  Eigen::VectorXd l(k), t(k), b(p);
  for (int i = 0; i < k; ++i) l[i] = len(rng);
  for (int i = 0; i < k; ++i) t[i] = tw(rng);
  for (int j = 0; j < p; ++j) b[j] = len(rng);
  return FNPoint::make(s, l, t, b);
}

FNPoint double_point(const Surface& s, const FNPoint& x) {
  x.validate();
  if (x.doubled || x.surface != s.signature()) throw DomainError("FN point is not on this surface");
  const Eigen::Index k = x.lengths.size(), p = x.boundary_lengths.size();
  FNPoint d;
  d.surface = x.surface;
  d.doubled = true;
  d.lengths.resize(2 * k + p);
  d.twists.resize(2 * k + p);
  d.lengths << x.lengths, x.boundary_lengths, x.lengths;
  d.twists << x.twists, Eigen::VectorXd::Zero(p), -x.twists;
  d.boundary_lengths.resize(0);
  return d;
}

double curve_length(const Surface& s, const FNPoint& x, const HomotopyClass& gamma) {
  switch (gamma.kind) {
    case ClassKind::boundary_curve: return x.boundary_lengths[gamma.label];
    case ClassKind::decomposition_curve: return x.lengths[gamma.label];
    case ClassKind::word_curve:
      return static_cast<double>(surface_holonomy<long double>(s, x).trace_length(gamma.word));
    default: throw UnsupportedError("'" + gamma.id + "' is not a closed curve");
  }
}

double arc_length(const Surface& s, const FNPoint& x, const HomotopyClass& alpha) {
  if (alpha.kind == ClassKind::pants_arc) {
    const double a = x.side_length(alpha.pattern[0]);
    const double b = x.side_length(alpha.pattern[1]);
    const double c = x.side_length(alpha.pattern[2]);
    return alpha.same_boundary ? hyptrig::arc_length_same_boundary(a, b, c)
                               : hyptrig::arc_length_distinct_boundaries(a, b, c);
  }
  if (alpha.kind == ClassKind::word_arc) {
    const double core = curve_length(s, x, s.word_curve(alpha.slope));
    return hyptrig::arc_length_same_boundary(x.boundary_lengths[0], core, core);
  }
  throw UnsupportedError("'" + alpha.id + "' is not an arc");
}

double class_length(const Surface& s, const FNPoint& x, const HomotopyClass& c) {
  return c.is_arc() ? arc_length(s, x, c) : curve_length(s, x, c);
}

Word doubled_word(const Surface& s, const HomotopyClass& c) {
  using namespace letters;
  if (s.marking() == Marking::pants) {
    const int t[3] = {0, t2, t3};
    const int y[3] = {y1, y2, y3};
    auto cross = [&](int j) { return j == 0 ? Word{} : Word{t[j]}; };
    if (c.kind == ClassKind::boundary_curve) return Word{c.label + 1};
    if (c.kind == ClassKind::pants_arc) {
      const int i = c.pattern[0].index;
      if (!c.same_boundary) {
        const int j = c.pattern[1].index;
        return concat(cross(j), inverse(cross(i)));
      }
      const int k = (i + 1) % 3;
      return concat(concat(Word{k + 1}, cross(i)), concat(Word{-y[k]}, inverse(cross(i))));
    }
  }
  if (s.marking() == Marking::one_holed_torus) {
    switch (c.kind) {
      case ClassKind::boundary_curve: return Word{a, b, -a, -b};
      case ClassKind::decomposition_curve:
      case ClassKind::word_curve: return c.word;
      case ClassKind::pants_arc: return Word{a, -abar};
      case ClassKind::word_arc: return concat(c.word, inverse(lower_copy(c.word)));
    }
  }
  throw UnsupportedError("no doubled word for '" + c.id + "'");
}

double doubled_length(const Surface& s, const FNPoint& x, const HomotopyClass& c) {
  const auto h = holonomy_build<long double>(s, double_point(s, x));
  return static_cast<double>(h.trace_length(doubled_word(s, c)));
}

double lamination_length(const Surface& s, const FNPoint& x, const RationalLamination& mu) {
  double total = 0.0;
  for (const auto& t : mu.terms()) total += t.weight * class_length(s, x, t.cls);
  return total;
}

Eigen::VectorXd panel_lengths(const Surface& s, const FNPoint& x, const Panel& panel) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(panel.size()));
  for (std::size_t k = 0; k < panel.size(); ++k)
    out[static_cast<Eigen::Index>(k)] = class_length(s, x, panel.entries[k]);
  return out;
}

}  // namespace arcmetric
