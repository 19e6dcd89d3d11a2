#include "doctest_main.hpp"

#include "quadwalk/closed_form.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/field.hpp"
#include "quadwalk/geometry.hpp"

#include <cmath>

using namespace quadwalk;

namespace {

StepSet steps(const char* text) { return parse_step_set(text).steps; }

StepSet model(int id) {
  static const char* table[] = {"",
                                "N,S,E,W", "NE,SE,NW,SW", "N,S,NE,SE,NW,SW", "N,S,E,W,NW,SW,SE,NE",
                                "NE,W,S", "N,E,SW", "N,NE,E,S,SW,W", "NE,E,SW,W",
                                "NE,NW,S", "N,NW,NE,S", "NE,NW,E,W,S", "N,NE,NW,SE,SW",
                                "N,NW,NE,E,W,S", "N,E,W,NE,NW,SE,SW", "N,W,SE", "NW,SE,N,S,E,W",
                                "N,SE,SW", "N,S,SE,SW", "N,E,W,SE,SW", "NE,NW,SE,SW,S",
                                "N,E,W,S,SW,SE", "NE,NW,E,W,SE,SW,S", "E,SE,W,NW"};
  return steps(table[id]);
}

const RealQuad s2 = RealQuad::sqrt2(), s3 = RealQuad::sqrt3(), s6 = RealQuad::sqrt6();

}  // namespace

TEST_CASE("surd field arithmetic and exact sign") {
  CHECK(s2 * s2 == RealQuad(2));
  CHECK(s2 * s3 == s6);
  CHECK(s6 * s6 == RealQuad(6));
  RealQuad x = RealQuad(1) + s2 - RealQuad(Rational(1, 3)) * s3 + s6;
  CHECK(x * x.inverse() == RealQuad(1));
  CHECK(std::abs((x.inverse()).to_double() - 1 / x.to_double()) < 1e-14);
  // 7 - 4√3 > 0 but small; 3√2 - 4 > 0; 2√6 - 5 < 0
  CHECK((RealQuad(7) - RealQuad(4) * s3).sign() == 1);
  CHECK((RealQuad(3) * s2 - RealQuad(4)).sign() == 1);
  CHECK((RealQuad(2) * s6 - RealQuad(5)).sign() == -1);
  CHECK((s2 + s3 - s6 + RealQuad(Rational(1, 10))).sign() == ((std::sqrt(2.0) + std::sqrt(3.0) - std::sqrt(6.0) + 0.1) > 0 ? 1 : -1));
  CHECK(RealQuad::sqrt_of_rational(Rational(1, 2)) == RealQuad(0, Rational(1, 2), 0, 0));
  CHECK(RealQuad::sqrt_of_rational(Rational(27, 4)) == RealQuad(0, 0, Rational(3, 2), 0));
  CHECK_THROWS_AS(RealQuad::sqrt_of_rational(Rational(5)), Error);
  RealQuad a = RealQuad(1) + s2;
  CHECK((a * a).sqrt() == a);
  RealQuad b = RealQuad(2) - s3;
  CHECK((b * b).sqrt() == b);
}

TEST_CASE("roots of unity in the complex field") {
  ComplexQuad nu = ComplexQuad::root_of_unity_12(4);
  CHECK(nu.pow(3) == ComplexQuad(1));
  CHECK(nu.phase_order() == 3);
  CHECK(ComplexQuad::i().phase_order() == 4);
  CHECK(ComplexQuad(-2).phase_order() == 2);
  CHECK(ComplexQuad::root_of_unity_12(1).phase_order() == 12);
  ComplexQuad z = nu * ComplexQuad(RealQuad(Rational(1, 3)));
  CHECK(z.modulus() == RealQuad(Rational(1, 3)));
  CHECK(std::abs(AlgebraicNumber(nu).approx - std::polar(1.0, 2 * M_PI / 3)) < 1e-15);
}

TEST_CASE("closed forms evaluate to high precision") {
  ClosedForm c = ClosedForm(4) / ClosedForm::pi();
  CHECK(std::abs(c.value() - 4 / M_PI) < 1e-15);
  CHECK(c.to_string() == "4/pi");
  ClosedForm g = ClosedForm(2) * ClosedForm::sqrt(2) / ClosedForm::gamma(Rational(1, 4));
  CHECK(std::abs(g.value() - 2 * std::sqrt(2.0) / std::tgamma(0.25)) < 1e-14);
  ClosedForm p = ClosedForm::pow(ClosedForm(RealQuad(1) + s2), Rational(7, 2));
  CHECK(std::abs(p.value() - std::pow(1 + std::sqrt(2.0), 3.5)) < 1e-11);
  CHECK(ClosedForm(RealQuad(3) * s2 + RealQuad(4)).to_string() == "4 + 3*sqrt(2)");
  CHECK_THROWS_AS(ClosedForm::gamma(Rational(1, 2)), Error);
}

TEST_CASE("root counting on the unit interval") {
  // (2s - 1)(3s - 2)(s - 3)
  std::vector<RealQuad> p = {RealQuad(-6), RealQuad(23), RealQuad(-25), RealQuad(6)};
  CHECK(count_roots_open_unit(p) == 2);
  // 1 - s√2 has its root at 1/√2
  CHECK(count_roots_open_unit({RealQuad(1), -s2}) == 1);
  // (1 - s)^2 has its only root at the endpoint
  CHECK(count_roots_open_unit({RealQuad(1), RealQuad(-2), RealQuad(1)}) == 0);
  // (2s - 1)^2
  CHECK(count_roots_open_unit({RealQuad(1), RealQuad(-4), RealQuad(4)}) == 1);
  CHECK(count_roots_open_unit({RealQuad(1), RealQuad(0), RealQuad(1)}) == 0);
}

TEST_CASE("highly symmetric critical points") {
  auto pts = critical_points(model(1));
  // S vanishes at (1,-1) and (-1,1), so only two of the four sign patterns are on V
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].point()[2] == ComplexQuad(Rational(1, 4)));
  CHECK(pts[1].point() == Point3{ComplexQuad(-1), ComplexQuad(-1), ComplexQuad(Rational(-1, 4))});
  for (const auto& p : pts) {
    CHECK(p.smooth());
    CHECK(p.minimal);
    CHECK(p.cone_interior);
  }
  CHECK(critical_points(model(2)).size() == 4);
  CHECK(critical_points(model(3)).size() == 2);
  CHECK(critical_points(model(4)).size() == 1);
  CHECK(contributing_set(model(1)).size() == 2);
}

TEST_CASE("model 1 minimality along the scaling segment") {
  auto f = diagonal_representation(model(1), 1, 1);
  auto pts = critical_points(model(1));
  auto cert = certify_minimality(pts[0], f);
  CHECK(cert.certified);
  CHECK(cert.blocking.empty());
  CHECK(cert.sampled_ok);
  CHECK(cert.sampled_margin > 0);
  CHECK(cert.note.find("evidence") != std::string::npos);
}

TEST_CASE("one-symmetry critical points") {
  auto pts = critical_points(steps("N,SE,SW"));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].point() == Point3{ComplexQuad(1), ComplexQuad(RealQuad(0, Rational(1, 2), 0, 0)), ComplexQuad(Rational(1, 2))});
  CHECK(pts[0].minimal);
  CHECK(pts[0].smooth());
  CHECK(pts[1].point() == Point3{ComplexQuad(1), ComplexQuad(1), ComplexQuad(Rational(1, 3))});

  auto pos = critical_points(steps("NE,NW,S"));
  REQUIRE(pos.size() == 2);
  CHECK(pos[0].point()[1] == ComplexQuad(s2));
  CHECK_FALSE(pos[0].minimal);
  auto f = diagonal_representation(steps("NE,NW,S"), 1, 1);
  auto cert = certify_minimality(pos[0], f);
  CHECK(cert.blocking == std::vector<std::string>{"1-y"});
  CHECK(pos[1].point() == Point3{ComplexQuad(1), ComplexQuad(1), ComplexQuad(Rational(1, 3))});
  CHECK(pos[1].minimal);
  CHECK(pos[1].stratum.size() == 2);
}

TEST_CASE("drift dichotomy of the smooth point") {
  for (int id = 9; id <= 22; ++id) {
    if (id == 15 || id == 16) continue;
    auto pts = critical_points(model(id));
    RealQuad y1 = pts[0].point()[1].re();
    if (id <= 14) CHECK_MESSAGE((y1 - RealQuad(1)).sign() > 0, id);
    else CHECK_MESSAGE((y1 - RealQuad(1)).sign() < 0, id);
  }
}

TEST_CASE("dual cone membership") {
  StratumGeometry smooth{{Point3{ComplexQuad(2), ComplexQuad(2), ComplexQuad(2)}}};
  CHECK(dual_cone_contains_one(smooth));
  StratumGeometry off{{Point3{ComplexQuad(1), ComplexQuad(2), ComplexQuad(1)}}};
  CHECK_FALSE(dual_cone_contains_one(off));
  // outward normal of 1-y and a kernel normal with y-component 1/2 or 2
  StratumGeometry half{{Point3{ComplexQuad(0), ComplexQuad(1), ComplexQuad(0)},
                        Point3{ComplexQuad(1), ComplexQuad(Rational(1, 2)), ComplexQuad(1)}}};
  CHECK(dual_cone_contains_one(half));
  StratumGeometry two{{Point3{ComplexQuad(0), ComplexQuad(1), ComplexQuad(0)},
                       Point3{ComplexQuad(1), ComplexQuad(2), ComplexQuad(1)}}};
  CHECK_FALSE(dual_cone_contains_one(two));
  StratumGeometry dependent{{Point3{ComplexQuad(1), ComplexQuad(1), ComplexQuad(1)},
                             Point3{ComplexQuad(2), ComplexQuad(2), ComplexQuad(2)}}};
  CHECK_THROWS_AS(dual_cone_contains_one(dependent), DegenerateGeometry);

  // the stratum point of a positive-drift model is in the cone, that of a negative-drift model is not
  auto f9 = diagonal_representation(model(9), 1, 1);
  CHECK(dual_cone_contains_one(stratum_geometry(f9, critical_points(model(9))[1].point())));
  auto f17 = diagonal_representation(model(17), 1, 1);
  CHECK_FALSE(dual_cone_contains_one(stratum_geometry(f17, critical_points(model(17))[1].point())));
}

TEST_CASE("negative drift contributing set") {
  auto pts = contributing_set(steps("N,SE,SW"));
  REQUIRE(pts.size() == 4);
  const ComplexQuad r(RealQuad(0, Rational(1, 2), 0, 0));  // 1/√2
  const ComplexQuad i = ComplexQuad::i();
  std::vector<Point3> expected = {{ComplexQuad(1), r, ComplexQuad(Rational(1, 2))},
                                  {ComplexQuad(1), -r, ComplexQuad(Rational(1, 2))},
                                  {ComplexQuad(-1), i * r, ComplexQuad(Rational(-1, 2))},
                                  {ComplexQuad(-1), -(i * r), ComplexQuad(Rational(-1, 2))}};
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& p : pts) found = found || p.point() == e;
    CHECK_MESSAGE(found, (e[0].to_string() + ", " + e[1].to_string() + ", " + e[2].to_string()));
  }
  for (const auto& p : pts) {
    CHECK(p.contributing);
    CHECK(p.minimal);
    CHECK(p.coords[1].exact.norm() == RealQuad(Rational(1, 2)));
  }
}

TEST_CASE("contributing sets share coordinatewise moduli") {
  for (int id : {1, 2, 3, 4, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23}) {
    auto pts = contributing_set(model(id));
    REQUIRE_MESSAGE(!pts.empty(), id);
    for (const auto& p : pts) {
      for (int k = 0; k < 3; ++k) CHECK_MESSAGE(p.coords[k].exact.norm() == pts[0].coords[k].exact.norm(), id);
      CHECK(p.contributing);
    }
    if (id >= 9 && id <= 14) CHECK_MESSAGE(pts.size() == 1, id);
  }
}

TEST_CASE("sporadic points") {
  auto p16 = contributing_set(model(16));
  REQUIRE(p16.size() == 1);
  CHECK(p16[0].point()[2] == ComplexQuad(Rational(1, 6)));
  auto p15 = contributing_set(model(15));
  REQUIRE(p15.size() == 3);
  CHECK(p15[0].rank == 0);
  CHECK(p15[1].rank == 1);
  CHECK(p15[1].point()[0] == ComplexQuad::root_of_unity_12(4));
  auto p23 = contributing_set(model(23));
  REQUIRE(p23.size() == 2);
  CHECK(p23[1].point()[0] == ComplexQuad(-1));
  CHECK(p23[1].rank == 1);
}

TEST_CASE("swapped orientation and class errors") {
  auto pts = critical_points(model(17).swapped());
  CHECK(pts[0].point()[0] == ComplexQuad(RealQuad(0, Rational(1, 2), 0, 0)));
  CHECK(pts[0].point()[1] == ComplexQuad(1));
  CHECK_THROWS_AS(critical_points(model(5)), ClassMismatch);
  CHECK_THROWS_AS(critical_points(steps("N,E,SW,W,NW")), ClassMismatch);
}
