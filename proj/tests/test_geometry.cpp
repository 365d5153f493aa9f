#include <doctest.h>

#include <cmath>
#include <random>

#include "arcmetric/errors.hpp"
#include "arcmetric/geometry.hpp"
#include "arcmetric/holonomy.hpp"
#include "arcmetric/hyptrig.hpp"
#include "oracle.hpp"

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

}  // namespace

TEST_CASE("FN points validate their shape and values") {
  CHECK_NOTHROW(pants_point(1.0, 2.0, 3.0));
  CHECK_THROWS_AS(pants_point(0.0, 2.0, 3.0), DomainError);
  CHECK_THROWS_AS(pants_point(1.0, std::nan(""), 3.0), DomainError);
  CHECK_THROWS_AS(torus_point(-1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(torus_point(1.0, INFINITY, 1.0), DomainError);
  CHECK_THROWS_AS(FNPoint::make(torus(), Eigen::VectorXd(0), Eigen::VectorXd(0), Eigen::VectorXd::Ones(1)),
                  DomainError);
  CHECK(pants_point(1.0, 2.0, 3.0) == pants_point(1.0, 2.0, 3.0));
  CHECK_FALSE(pants_point(1.0, 2.0, 3.0) == pants_point(1.0, 2.0, 3.5));
}

TEST_CASE("random points are valid and reproducible") {
  std::mt19937_64 a(1), b(1);
  const Surface s = Surface::build(2, 1, 2);
  const FNPoint x = random_point(s, a), y = random_point(s, b);
  CHECK(x == y);
  CHECK(x.lengths.size() == 6);
  CHECK(x.boundary_lengths.size() == 2);
  CHECK((x.lengths.array() >= 0.5).all());
  CHECK((x.twists.array().abs() <= 1.0).all());
}

TEST_CASE("double point layout") {
  const FNPoint x = torus_point(1.5, 0.25, 2.0);
  const FNPoint d = double_point(torus(), x);
  CHECK(d.doubled);
  CHECK(d.lengths == Eigen::Vector3d(1.5, 2.0, 1.5));
  CHECK(d.twists == Eigen::Vector3d(0.25, 0.0, -0.25));
  CHECK(d.boundary_lengths.size() == 0);
  CHECK_THROWS_AS(double_point(torus(), d), DomainError);
  CHECK_THROWS_AS(double_point(pants(), x), DomainError);
}

TEST_CASE("pants arcs agree with the oracle through the class interface") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> len(0.1, 6.0);
  for (int n = 0; n < 50; ++n) {
    const std::array<long double, 3> l{len(rng), len(rng), len(rng)};
    const FNPoint x = pants_point(double(l[0]), double(l[1]), double(l[2]));
    for (const auto& a : pants().pants_arcs()) {
      const int i = a.pattern[0].index, j = a.same_boundary ? i : a.pattern[1].index;
      CHECK(std::abs(arc_length(pants(), x, a) - double(oracle::arc(l, i, j))) < 1e-9);
    }
  }
}

TEST_CASE("curve lengths") {
  const FNPoint x = torus_point(1.25, 0.5, 3.0);
  CHECK(curve_length(torus(), x, torus().find("C1")) == 1.25);
  CHECK(curve_length(torus(), x, torus().find("B1")) == 3.0);
  CHECK(curve_length(torus(), x, torus().find("c(1,0)")) == 1.25);
  CHECK_THROWS_AS(curve_length(torus(), x, torus().find("a11")), UnsupportedError);
  CHECK_THROWS_AS(arc_length(torus(), x, torus().find("C1")), UnsupportedError);
}

TEST_CASE("doubling relation on the pants") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> len(0.1, 6.0);
  for (int n = 0; n < 50; ++n) {
    const FNPoint x = pants_point(len(rng), len(rng), len(rng));
    for (const auto& a : pants().pants_arcs())
      CHECK(std::abs(2.0 * arc_length(pants(), x, a) - doubled_length(pants(), x, a)) < 1e-9);
    for (int j = 0; j < 3; ++j) {
      const auto b = pants().boundary(j);
      CHECK(std::abs(curve_length(pants(), x, b) - doubled_length(pants(), x, b)) < 1e-9);
    }
  }
}

TEST_CASE("doubling relation on the torus panel") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> len(0.3, 4.0), tw(-1.0, 1.0);
  for (int n = 0; n < 20; ++n) {
    const FNPoint x = torus_point(len(rng), tw(rng), len(rng));
    for (const auto& c : torus().panel(3).entries) {
      const double l = class_length(torus(), x, c), ld = doubled_length(torus(), x, c);
      CHECK_MESSAGE(std::abs((c.is_arc() ? 2.0 * l : l) - ld) < 1e-9, c.id);
    }
  }
}

TEST_CASE("holonomy relators and boundary traces") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> len(0.2, 8.0), tw(-2.0, 2.0);
  for (int n = 0; n < 20; ++n) {
    const FNPoint x = torus_point(len(rng), tw(rng), len(rng));
    const auto h = holonomy_build<long double>(torus(), double_point(torus(), x));
    CHECK(h.relator_residual() < 1e-9);
    const FNPoint p = pants_point(len(rng), len(rng), len(rng));
    const auto hp = holonomy_build<long double>(pants(), double_point(pants(), p));
    CHECK(hp.relator_residual() < 1e-9);
    for (int j = 0; j < 3; ++j)
      CHECK(double(hp.trace_length(Word{j + 1})) == doctest::Approx(p.boundary_lengths[j]).epsilon(1e-12));
  }
}

TEST_CASE("torus holonomy satisfies the Fricke identity") {
  // tr[A,B] = x^2 + y^2 + z^2 - xyz - 2 = -2 cosh(l_B / 2).
  const FNPoint x = torus_point(1.3, 0.4, 2.1);
  const auto h = surface_holonomy<long double>(torus(), x);
  const long double a = h.evaluate({1}).trace(), b = h.evaluate({2}).trace(),
                    ab = h.evaluate({1, 2}).trace();
  CHECK(double(a * a + b * b + ab * ab - a * b * ab - 2) == doctest::Approx(-2 * std::cosh(1.05)).epsilon(1e-12));
}

TEST_CASE("a full twist about C1 shifts slopes") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> len(0.3, 3.0), tw(-1.0, 1.0);
  for (int n = 0; n < 20; ++n) {
    const double l = len(rng), t = tw(rng), b = len(rng);
    const FNPoint x = torus_point(l, t, b), y = torus_point(l, t + l, b);
    const auto& s = torus();
    CHECK(class_length(s, y, s.find("c(0,1)")) == doctest::Approx(class_length(s, x, s.find("c(1,1)"))).epsilon(1e-10));
    CHECK(class_length(s, y, s.find("c(1,-1)")) == doctest::Approx(class_length(s, x, s.find("c(0,1)"))).epsilon(1e-10));
    CHECK(class_length(s, y, s.find("a(1,1)")) == doctest::Approx(class_length(s, x, s.find("a(2,1)"))).epsilon(1e-10));
    // Reflection reverses the twist.
    const FNPoint z = torus_point(l, -t, b);
    CHECK(class_length(s, z, s.find("c(1,1)")) == doctest::Approx(class_length(s, x, s.find("c(1,-1)"))).epsilon(1e-10));
  }
}

TEST_CASE("torus word arcs match the holonomy of their doubles") {
  const FNPoint x = torus_point(0.9, -0.3, 1.7);
  for (const auto& c : torus().panel(4).entries)
    if (c.is_arc())
      CHECK(2.0 * class_length(torus(), x, c) == doctest::Approx(doubled_length(torus(), x, c)).epsilon(1e-10));
}

TEST_CASE("word lengths stay finite at large boundary length") {
  const FNPoint x = torus_point(1.0, 0.0, 2.0 * std::exp(8.0));
  const double l = class_length(torus(), x, torus().find("c(0,1)"));
  CHECK(std::isfinite(l));
  CHECK(l > 2900.0);
}

TEST_CASE("lamination length and panel lengths") {
  const FNPoint x = pants_point(2.0, 2.0, 2.0);
  std::vector<LaminationTerm> t{{pants().find("a12"), 2.0}, {pants().find("B3"), 1.0}};
  const auto mu = RationalLamination::make(pants(), t);
  CHECK(lamination_length(pants(), x, mu) == doctest::Approx(2.0 * 1.7049128323580137 + 2.0).epsilon(1e-14));
  const Eigen::VectorXd l = panel_lengths(pants(), x, pants().panel(2));
  CHECK(l.size() == 9);
  CHECK(l[0] == 2.0);
  CHECK(l[6] == doctest::Approx(1.7049128323580137).epsilon(1e-14));
}
