#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <vector>

#include "arcmetric/errors.hpp"
#include "arcmetric/geometry.hpp"
#include "arcmetric/hyptrig.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric {

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

namespace moves {

/// Translation by x along the imaginary axis.
template <typename Scalar>
Mat2<Scalar> translation(Scalar x) {
  using std::exp;
  Mat2<Scalar> m;
  m << exp(x / 2), Scalar(0), Scalar(0), exp(-x / 2);
  return m;
}

/// Rotation by a right angle about i; turns the walk to the left.
template <typename Scalar>
Mat2<Scalar> quarter_turn() {
  using std::sqrt;
  const Scalar h = sqrt(Scalar(0.5));
  Mat2<Scalar> m;
  m << h, h, -h, h;
  return m;
}

template <typename Scalar>
Mat2<Scalar> half_turn() {
  Mat2<Scalar> m;
  m << Scalar(0), Scalar(1), Scalar(-1), Scalar(0);
  return m;
}

/// Conjugation by z -> -conj(z).
template <typename Scalar>
Mat2<Scalar> mirrored(const Mat2<Scalar>& g) {
  Mat2<Scalar> m;
  m << g(0, 0), -g(0, 1), -g(1, 0), g(1, 1);
  return m;
}

/// Inverse of a determinant-one matrix.
template <typename Scalar>
Mat2<Scalar> sl2_inverse(const Mat2<Scalar>& g) {
  Mat2<Scalar> m;
  m << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return m;
}

}  // namespace moves

/// A pair of pants as two right-angled hexagons, walked counterclockwise.
///
/// frame[i] sits at the foot of the seam from cuff i to cuff i+1, looking
/// along cuff i; cuff[i] translates along cuff i by its length. The pants
/// lies to the left of every cuff and cuff[0] * cuff[2] * cuff[1] = -I.
template <typename Scalar>
struct PantsModel {
  std::array<Scalar, 3> lengths{};
  std::array<Mat2<Scalar>, 3> frame;
  std::array<Mat2<Scalar>, 3> cuff;

  static PantsModel build(const std::array<Scalar, 3>& l) {
    using namespace moves;
    PantsModel p;
    p.lengths = l;
    Mat2<Scalar> walk = Mat2<Scalar>::Identity();
    for (int i = 0; i < 3; ++i) {
      const Scalar seam =
          hyptrig::seam_length(l[i], l[(i + 1) % 3], l[(i + 2) % 3]);
      p.frame[i] = walk * translation(l[i] / 2);
      p.cuff[i] = p.frame[i] * translation(l[i]) * sl2_inverse(p.frame[i]);
      walk = p.frame[i] * quarter_turn<Scalar>() * translation(seam) * quarter_turn<Scalar>();
    }
    return p;
  }

  /// Frame at the foot of the seam from cuff i back to cuff i-1.
  Mat2<Scalar> back_frame(int i) const { return frame[i] * moves::translation(-lengths[i] / 2); }
};

/// Frame of the lower copy of cuff i, seen from the upper pants across it.
template <typename Scalar>
Mat2<Scalar> crossing(const PantsModel<Scalar>& upper, const PantsModel<Scalar>& lower, int i,
                      Scalar twist) {
  using namespace moves;
  const Mat2<Scalar> r = half_turn<Scalar>();
  return upper.frame[i] * translation(twist) * r * sl2_inverse(Mat2<Scalar>(mirrored(lower.frame[i]) * r));
}

/// Generators a = X0^-1 and b = T^-1 of the one-holed torus, where T glues
/// cuff 1 onto cuff 0 with the given twist. Then a b a^-1 b^-1 = -cuff[2].
template <typename Scalar>
struct TorusModel {
  PantsModel<Scalar> pants;
  Mat2<Scalar> a, b;

  static TorusModel build(Scalar length, Scalar twist, Scalar boundary) {
    using namespace moves;
    TorusModel m;
    m.pants = PantsModel<Scalar>::build({length, length, boundary});
    const Mat2<Scalar> glue = m.pants.frame[0] * translation(twist) * half_turn<Scalar>() *
                              sl2_inverse(m.pants.back_frame(1));
    m.a = sl2_inverse(m.pants.cuff[0]);
    m.b = sl2_inverse(glue);
    return m;
  }
};

/// Matrices for the generators of a surface group, with relators that must
/// map to plus or minus the identity.
template <typename Scalar>
class Holonomy {
 public:
  Holonomy(std::vector<Mat2<Scalar>> generators, std::vector<Word> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {
    for (const auto& g : generators_)
      if (!g.allFinite()) throw DomainError("holonomy overflow: lengths too large for this scalar");
  }

  std::size_t rank() const { return generators_.size(); }
  const Mat2<Scalar>& generator(std::size_t k) const { return generators_.at(k); }
  const std::vector<Word>& relators() const { return relators_; }

  Mat2<Scalar> evaluate(const Word& w) const {
    Mat2<Scalar> m = Mat2<Scalar>::Identity();
    for (int x : w) {
      const auto& g = generators_.at(static_cast<std::size_t>(std::abs(x) - 1));
      m = m * (x > 0 ? g : moves::sl2_inverse(g));
    }
    return m;
  }

  /// 2 acosh(|tr|/2); traces within 1e-12 of parabolic count as length 0.
  Scalar trace_length(const Word& w) const {
    using std::abs;
    const Scalar half = abs(evaluate(w).trace()) / 2;
    if (!std::isfinite(static_cast<long double>(half)))
      throw DomainError("holonomy overflow while evaluating a word");
    return Scalar(2) * hyptrig::safe_acosh(half);
  }

  /// Largest entrywise distance of a relator image from +I or -I.
  Scalar relator_residual() const {
    using std::min;
    Scalar worst(0);
    const Mat2<Scalar> id = Mat2<Scalar>::Identity();
    for (const auto& r : relators_) {
      const Mat2<Scalar> m = evaluate(r);
      const Scalar plus = (m - id).cwiseAbs().maxCoeff();
      const Scalar minus = (m + id).cwiseAbs().maxCoeff();
      worst = std::max(worst, min(plus, minus));
    }
    return worst;
  }

 private:
  std::vector<Mat2<Scalar>> generators_;
  std::vector<Word> relators_;
};

namespace letters {
// Pants double: upper cuffs, lower cuffs seen through B1, crossings B1 -> B2, B3.
inline constexpr int x1 = 1, x2 = 2, x3 = 3, y1 = 4, y2 = 5, y3 = 6, t2 = 7, t3 = 8;
// Torus double: upper a, b and their lower copies.
inline constexpr int a = 1, b = 2, abar = 3, bbar = 4;
}  // namespace letters

/// Holonomy of S itself: cuffs x1..x3 for the pants, a and b for the torus.
template <typename Scalar>
Holonomy<Scalar> surface_holonomy(const Surface& s, const FNPoint& x) {
  x.validate();
  if (x.doubled || x.surface != s.signature()) throw DomainError("FN point is not on this surface");
  if (s.marking() == Marking::pants) {
    const auto p = PantsModel<Scalar>::build({Scalar(x.boundary_lengths[0]),
                                              Scalar(x.boundary_lengths[1]),
                                              Scalar(x.boundary_lengths[2])});
    return Holonomy<Scalar>({p.cuff[0], p.cuff[1], p.cuff[2]}, {Word{1, 3, 2}});
  }
  if (s.marking() == Marking::one_holed_torus) {
    const auto m = TorusModel<Scalar>::build(Scalar(x.lengths[0]), Scalar(x.twists[0]),
                                             Scalar(x.boundary_lengths[0]));
    return Holonomy<Scalar>({m.a, m.b}, {});
  }
  throw UnsupportedError("no registered holonomy marking for this surface");
}

/// Holonomy of the double from FN coordinates on its symmetric decomposition.
template <typename Scalar>
Holonomy<Scalar> holonomy_build(const Surface& s, const FNPoint& xd) {
  using namespace moves;
  xd.validate();
  if (!xd.doubled || xd.surface != s.signature())
    throw DomainError("holonomy_build expects a point on the double of this surface");
  auto L = [&](int k) { return Scalar(xd.lengths[k]); };
  auto T = [&](int k) { return Scalar(xd.twists[k]); };

  if (s.marking() == Marking::pants) {
    const auto up = PantsModel<Scalar>::build({L(0), L(1), L(2)});
    const auto lo = PantsModel<Scalar>::build({L(0), L(1), L(2)});
    std::array<Mat2<Scalar>, 3> m;
    for (int j = 0; j < 3; ++j) m[j] = crossing(up, lo, j, T(j));
    const Mat2<Scalar> m1inv = sl2_inverse(m[0]);
    std::vector<Mat2<Scalar>> g{up.cuff[0], up.cuff[1], up.cuff[2]};
    for (int j = 0; j < 3; ++j) g.push_back(m[0] * mirrored(lo.cuff[j]) * m1inv);
    g.push_back(m[1] * m1inv);
    g.push_back(m[2] * m1inv);
    using namespace letters;
    return Holonomy<Scalar>(std::move(g), {Word{x1, x3, x2},
                                           Word{y1, y3, y2},
                                           Word{y1, -x1},
                                           Word{t2, y2, -t2, -x2},
                                           Word{t3, y3, -t3, -x3}});
  }
  if (s.marking() == Marking::one_holed_torus) {
    // Interior curves of the double: C, B, Cbar. The mirror reverses
    // orientation, so the lower torus is built with the opposite twist.
    const auto up = TorusModel<Scalar>::build(L(0), T(0), L(1));
    const auto lo = TorusModel<Scalar>::build(L(2), -T(2), L(1));
    const Mat2<Scalar> mb = crossing(up.pants, lo.pants, 2, T(1));
    const Mat2<Scalar> mbinv = sl2_inverse(mb);
    std::vector<Mat2<Scalar>> g{up.a, up.b, mb * mirrored(lo.a) * mbinv,
                                mb * mirrored(lo.b) * mbinv};
    using namespace letters;
    return Holonomy<Scalar>(std::move(g), {Word{a, b, -a, -b, bbar, abar, -bbar, -abar}});
  }
  throw UnsupportedError("no registered holonomy marking for this surface");
}

/// Word of the doubled class in the letters of holonomy_build.
Word doubled_word(const Surface& s, const HomotopyClass& c);

}  // namespace arcmetric
