#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "arcmetric/errors.hpp"
#include "arcmetric/geometry.hpp"
#include "arcmetric/lamination.hpp"

using namespace arcmetric;

namespace {

const Surface& pants() {
  static const Surface s = Surface::build(0, 0, 3);
  return s;
}

const Surface& torus() {
  static const Surface s = Surface::build(1, 0, 1);
  return s;
}

RationalLamination lam(const Surface& s, std::vector<std::pair<std::string, double>> terms) {
  std::vector<LaminationTerm> t;
  for (auto& [id, w] : terms) t.push_back({s.find(id), w});
  return RationalLamination::make(s, std::move(t));
}

/// Crossings of two pants arcs: loops around different boundaries cross
/// twice, a loop at i separates j from k so a_jk crosses it once, and all
/// other pairs are disjoint.
double pants_arc_oracle(int i1, int j1, int i2, int j2) {
  if (i1 == j1 && i2 == j2) return i1 == i2 ? 0.0 : 2.0;
  if (i1 == j1) return (i2 != i1 && j2 != i1) ? 1.0 : 0.0;
  if (i2 == j2) return (i1 != i2 && j1 != i2) ? 1.0 : 0.0;
  return 0.0;
}

}  // namespace

TEST_CASE("pants arc crossings match the cut-and-paste count") {
  const auto& s = pants();
  for (const auto& a : s.pants_arcs())
    for (const auto& b : s.pants_arcs()) {
      const double expected = pants_arc_oracle(a.pattern[0].index, a.same_boundary ? a.pattern[0].index : a.pattern[1].index,
                                               b.pattern[0].index, b.same_boundary ? b.pattern[0].index : b.pattern[1].index);
      CHECK_MESSAGE(intersection_number(s, a, b) == expected, a.id << " x " << b.id);
      CHECK(intersection_number(s, a, b) == intersection_number(s, b, a));
    }
}

TEST_CASE("arcs against boundaries") {
  const auto& s = pants();
  // An arc counts its endpoints on a boundary.
  CHECK(intersection_number(s, s.find("a11"), s.find("B1")) == 2.0);
  CHECK(intersection_number(s, s.find("a12"), s.find("B1")) == 1.0);
  CHECK(intersection_number(s, s.find("a12"), s.find("B3")) == 0.0);
  // A boundary leaf against an arc contributes half its weight per endpoint.
  CHECK(intersection_number(s, s.find("B1"), s.find("a12")) == 0.5);
  CHECK(intersection_number(s, s.find("B1"), s.find("a11")) == 1.0);
  CHECK(intersection_number(s, s.find("B1"), s.find("B2")) == 0.0);
}

TEST_CASE("torus crossings follow the slope determinant") {
  const auto& s = torus();
  const Panel panel = s.panel(3);
  for (const auto& a : panel.entries)
    for (const auto& b : panel.entries) {
      const auto sa = s.slope_of(a), sb = s.slope_of(b);
      if (!sa || !sb || a.id == b.id) continue;
      const int det = slope_det(*sa, *sb);
      const double expected = (a.is_arc() && b.is_arc()) ? std::max(det - 1, 0) : det;
      CHECK_MESSAGE(intersection_number(s, a, b) == expected, a.id << " x " << b.id);
    }
  CHECK(intersection_number(s, s.find("c(1,1)"), s.find("B1")) == 0.0);
  CHECK(intersection_number(s, s.find("a(1,1)"), s.find("B1")) == 2.0);
  CHECK(intersection_number(s, s.find("B1"), s.find("a(1,1)")) == 1.0);
}

TEST_CASE("laminations merge, sort and reject crossings") {
  const auto& s = pants();
  const auto mu = lam(s, {{"a33", 1.0}, {"B1", 2.0}, {"a33", 0.5}});
  REQUIRE(mu.terms().size() == 2);
  CHECK(mu.terms()[0].cls.id == "B1");
  CHECK(mu.weight_of("a33") == 1.5);
  CHECK(mu.weight_of("a12") == 0.0);
  CHECK(mu.contains("B1"));
  CHECK(mu.scaled(2.0).weight_of("B1") == 4.0);
  CHECK_THROWS_AS(lam(s, {{"a11", 1.0}, {"a22", 1.0}}), DomainError);
  // Strict disjointness: an arc ending on a leaf meets it.
  CHECK_THROWS_AS(lam(s, {{"a11", 1.0}, {"B1", 1.0}}), DomainError);
  CHECK_THROWS_AS(lam(s, {{"a11", 0.0}}), DomainError);
  CHECK_THROWS_AS(lam(s, {{"a11", -1.0}}), DomainError);
  CHECK_THROWS_AS(lam(s, {{"a11", std::numeric_limits<double>::infinity()}}), DomainError);
  CHECK_THROWS_AS(mu.scaled(0.0), DomainError);
  CHECK(lam(s, {{"a12", 1.0}, {"a13", 1.0}, {"a23", 1.0}}).terms().size() == 3);
}

TEST_CASE("intersection is linear in the lamination") {
  const auto& s = pants();
  const auto mu = lam(s, {{"a12", 2.0}, {"a13", 3.0}});
  CHECK(intersection_number(s, mu, s.find("a11")) == 0.0);
  CHECK(intersection_number(s, mu, s.find("a22")) == 3.0);
  CHECK(intersection_number(s, mu, s.find("a33")) == 2.0);
  CHECK(intersection_number(s, mu, s.find("B1")) == 5.0);
  CHECK(intersection_number(s, mu.scaled(3.0), s.find("B1")) == 15.0);
}

TEST_CASE("DT coordinates on the pants") {
  const auto& s = pants();
  const auto c = dt_encode(s, lam(s, {{"a33", 1.0}}));
  CHECK(c.interior.empty());
  CHECK(c.theta_hat == std::vector<double>{0.0, 0.0, 2.0});
  CHECK_FALSE(std::signbit(c.theta_hat[0]));
  const auto leaves = dt_encode(s, lam(s, {{"B1", 1.5}, {"a23", 1.0}}));
  CHECK(leaves.theta_hat == std::vector<double>{-1.5, 1.0, 1.0});
  CHECK(dt_decode(s, leaves) == lam(s, {{"B1", 1.5}, {"a23", 1.0}}));
  CHECK(dt_decode(s, c) == lam(s, {{"a33", 1.0}}));
}

TEST_CASE("DT coordinates on the torus") {
  const auto& s = torus();
  const auto c = dt_encode(s, lam(s, {{"C1", 2.0}, {"B1", 1.0}}));
  CHECK(c.interior == std::vector<std::pair<double, double>>{{0.0, 2.0}});
  CHECK(c.theta_hat == std::vector<double>{-1.0});
  const auto a = dt_encode(s, lam(s, {{"a11", 0.5}}));
  CHECK(a.theta_hat == std::vector<double>{1.0});
  CHECK(dt_decode(s, a) == lam(s, {{"a11", 0.5}}));
  CHECK_THROWS_AS(dt_encode(s, lam(s, {{"c(1,1)", 1.0}})), UnsupportedError);
  DTCoordinates crossing{{{1.0, 0.0}}, {0.0}};
  CHECK_THROWS_AS(dt_decode(s, crossing), UnsupportedError);
  DTCoordinates wrong{{}, {0.0}};
  CHECK_THROWS_AS(dt_decode(s, wrong), DomainError);
}

TEST_CASE("DT round trip on sampled laminations") {
  for (const Surface* s : {&pants(), &torus()}) {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 200; ++n) {
      const auto mu = sample_adapted_lamination(*s, rng);
      REQUIRE_FALSE(mu.empty());
      const auto c = dt_encode(*s, mu);
      const auto back = dt_decode(*s, c);
      CHECK(back == mu);
      CHECK(dt_encode(*s, back) == c);
    }
  }
}

TEST_CASE("doubled DT coordinates are mirror symmetric") {
  const auto& s = torus();
  std::mt19937_64 rng(9);
  for (int n = 0; n < 50; ++n) {
    const auto mu = sample_adapted_lamination(s, rng);
    const auto c = dt_encode(s, mu);
    const auto d = dt_encode_double(s, mu);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == c.interior[0]);
    CHECK(d[2].first == d[0].first);
    CHECK(d[2].second == -d[0].second);
    CHECK(d[1].first == std::max(c.theta_hat[0], 0.0));
    CHECK(d[1].second == std::max(-c.theta_hat[0], 0.0));
  }
}

TEST_CASE("sphere dimensions") {
  CHECK(sphere_dimension({0, 0, 3}).coordinate == 3);
  CHECK(sphere_dimension({0, 0, 3}).sphere == 2);
  CHECK(sphere_dimension({1, 0, 1}).coordinate == 3);
  CHECK(sphere_dimension({1, 0, 1}).sphere == 2);
  CHECK(sphere_dimension({0, 1, 2}).coordinate == 2);
  CHECK(sphere_dimension({2, 1, 3}).coordinate == 17);
}

TEST_CASE("ratio lemma against brute force") {
  const auto& s = pants();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.1, 4.0);
  for (int n = 0; n < 100; ++n) {
    const auto mu = sample_adapted_lamination(s, rng);
    const auto nu = sample_adapted_lamination(s, rng);
    double brute = 0.0;
    for (const auto& t : nu.terms()) {
      const double base = mu.weight_of(t.cls.id);
      brute = std::max(brute, base > 0 ? t.weight / base : std::numeric_limits<double>::infinity());
    }
    CHECK(ratio_sup(nu, mu) == brute);
  }
  const auto mu = lam(s, {{"a12", 2.0}, {"a13", 1.0}});
  CHECK(ratio_sup(lam(s, {{"a12", 1.0}}), mu) == 0.5);
  CHECK(ratio_sup(lam(s, {{"a12", 1.0}, {"a13", 3.0}}), mu) == 3.0);
  CHECK(std::isinf(ratio_sup(lam(s, {{"a23", 1.0}}), mu)));
  const auto e = ergodic_decomposition(lam(s, {{"a13", 2.0}}), mu);
  CHECK(e.representable);
  CHECK(e.coefficients.size() == 2);
  CHECK_THROWS_AS(ratio_sup(mu, RationalLamination{}), DomainError);
}

TEST_CASE("refinement completes a lamination") {
  const auto& p = pants();
  const auto r = refine(p, lam(p, {{"a33", 1.0}}));
  CHECK(r.zeta == lam(p, {{"B1", 1.0}, {"B2", 1.0}}));
  CHECK(r.mu_hat == lam(p, {{"a33", 1.0}, {"B1", 1.0}, {"B2", 1.0}}));

  const auto& t = torus();
  const auto tri = refine(t, lam(t, {{"a11", 1.0}}));
  CHECK(tri.zeta == lam(t, {{"a(0,1)", 1.0}, {"a(1,-1)", 1.0}}));
  const auto core = refine(t, lam(t, {{"a11", 1.0}}), 0);
  CHECK(core.zeta == lam(t, {{"C1", 1.0}}));
  CHECK(refine(t, lam(t, {{"B1", 1.0}})).zeta.empty());
  CHECK(refine(t, lam(t, {{"c(1,1)", 1.0}})).zeta == lam(t, {{"B1", 1.0}}));

  std::mt19937_64 rng(4);
  for (const Surface* s : {&p, &t})
    for (int n = 0; n < 50; ++n) {
      const auto mu = sample_adapted_lamination(*s, rng);
      const auto ref = refine(*s, mu);
      CHECK(completion_holds(*s, ref.mu_hat, s->panel(2)));
      for (const auto& term : mu.terms()) CHECK(ref.mu_hat.weight_of(term.cls.id) == term.weight);
    }
  CHECK_THROWS_AS(refine(Surface::build(0, 1, 2), RationalLamination{}), UnsupportedError);
}

TEST_CASE("normalization gives unit length at the base point") {
  const auto& s = pants();
  const FNPoint x0 = pants_point(2.0, 2.0, 2.0);
  const auto mu = normalize(s, lam(s, {{"a33", 1.0}}), x0);
  // 1 / l_a33(2, 2, 2), frozen from the axis-distance oracle.
  CHECK(mu.weight_of("a33") == doctest::Approx(1.0 / 3.612225999682252).epsilon(1e-14));
  CHECK(lamination_length(s, x0, mu) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(normalize(s, RationalLamination{}, x0), DomainError);
}
