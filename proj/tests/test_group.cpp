#include "doctest_main.hpp"

#include "quadwalk/catalog.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/group.hpp"

using namespace quadwalk;

namespace {

StepSet steps(const char* text) { return parse_step_set(text).steps; }
LaurentPolynomial2 mono(int i, int j, long c = 1) { return LaurentPolynomial2::monomial({i, j}, Rational(c)); }
RationalExpr2 expr(const LaurentPolynomial2& n, const LaurentPolynomial2& d = LaurentPolynomial2(1)) {
  return RationalExpr2(n, d);
}

}  // namespace

TEST_CASE("rational expressions reduce canonically") {
  auto x = mono(1, 0), y = mono(0, 1), one = LaurentPolynomial2(1);
  CHECK(expr(x * x - one, x - one) == expr(x + one));
  CHECK(expr((x + y) * (x - y), (x + y) * y) == expr(x - y, y));
  CHECK(expr(x * 2, y * 4) == expr(x, y * 2));
  // Leading denominator coefficient normalized to 1.
  auto r = expr(x, y * (-3) + one);
  CHECK(r.denominator().coefficient({0, 1}) == 1);
  CHECK(expr(mono(-1, 0) + x) == expr(x * x + one, x));
  CHECK(expr(mono(-1, 0) + x).to_string() == "x + x^-1");
  CHECK((expr(x) + expr(mono(-1, 0))) == expr(x * x + one, x));
  CHECK((expr(x, y) * expr(y, x)) == expr(one));
  CHECK_THROWS(expr(x, LaurentPolynomial2(0)));
  CHECK(expr(x * x + one, x).inverted() == expr(x * x + one, x));
}

TEST_CASE("polynomial gcd in Q[x][y]") {
  auto x = mono(1, 0), y = mono(0, 1), one = LaurentPolynomial2(1);
  auto f = (x * y + one) * (x - y) * (x - y);
  auto g = (x * y + one) * (x - y) * (y + 3);
  BiPoly d = bipoly::gcd(bipoly::from_polynomial(f), bipoly::from_polynomial(g));
  CHECK(bipoly::to_polynomial(d) == (x * y + one) * (x - y) * Rational(-1));
}

TEST_CASE("generators") {
  auto g1 = generators(steps("N,S,E,W"));
  CHECK(g1.phi.x_image == expr(mono(1, 0)));
  CHECK(g1.phi.y_image == expr(mono(0, -1)));
  CHECK(g1.psi.x_image == expr(mono(-1, 0)));
  CHECK(g1.psi.y_image == expr(mono(0, 1)));
  auto g17 = generators(steps("N,SE,SW"));
  CHECK(g17.phi.x_image == expr(mono(1, 0)));
  CHECK(g17.phi.y_image == expr(mono(1, -1) + mono(-1, -1)));
  CHECK_THROWS_AS(generators(steps("N,E")), ClassMismatch);

  for (const auto& e : Catalog::builtin().entries()) {
    auto g = generators(e.steps);
    CHECK(compose(g.phi, g.phi) == identity_map());
    CHECK(compose(g.psi, g.psi) == identity_map());
    RationalExpr2 s(characteristic_polynomial(e.steps));
    CHECK(apply_map(g.phi, s) == s);
    CHECK(apply_map(g.psi, s) == s);
  }
}

TEST_CASE("apply_map") {
  auto g = generators(steps("N,S,E,W"));
  RationalExpr2 s(characteristic_polynomial(steps("N,S,E,W")));
  CHECK(apply_map(g.phi, s) == s);
  CHECK(apply_map(g.psi, expr(mono(1, 1))) == expr(mono(-1, 1)));
  RationalExpr2 f = expr(mono(2, 1) + mono(0, -3), mono(1, 0) + LaurentPolynomial2(5));
  CHECK(apply_map(identity_map(), f) == f);
}

TEST_CASE("group of the simple walk and of {NE,NW,S}") {
  auto g = generate_group(steps("N,S,E,W"));
  REQUIRE(g.finite());
  CHECK(g.order() == 4);
  std::vector<BirationalMap> expected;
  for (int a : {1, -1}) {
    for (int b : {1, -1}) expected.push_back({expr(mono(a, 0)), expr(mono(0, b))});
  }
  for (const auto& m : expected) {
    bool found = false;
    for (const auto& e : g.elements) found = found || e.map == m;
    CHECK(found);
  }
  auto h = generate_group(steps("NE,NW,S"));
  REQUIRE(h.finite());
  CHECK(h.order() == 4);
  auto gen = generators(steps("NE,NW,S"));
  CHECK(gen.psi.x_image == expr(mono(-1, 0)));
  CHECK(gen.phi.y_image == expr(LaurentPolynomial2(1), mono(1, 1) + mono(-1, 1)));
}

TEST_CASE("group census over the catalog") {
  std::map<int, int> expected_order{{5, 6}, {6, 6}, {7, 6}, {8, 8}, {15, 6}, {16, 6}, {23, 8}};
  int finite = 0;
  for (const auto& e : Catalog::builtin().entries()) {
    auto g = generate_group(e.steps);
    CHECK(g.finite() == (e.id <= 23));
    if (!g.finite()) continue;
    ++finite;
    int want = expected_order.count(e.id) ? expected_order[e.id] : 4;
    CHECK(g.order() == want);
    RationalExpr2 s(characteristic_polynomial(e.steps));
    for (const auto& el : g.elements) {
      CHECK(apply_map(el.map, s) == s);
      CHECK(el.sign == (el.word.size() % 2 == 0 ? 1 : -1));
    }
    for (const auto& a : g.elements) {
      for (const auto& b : g.elements) {
        BirationalMap prod = compose(a.map, b.map);
        const GroupElement* found = nullptr;
        for (const auto& c : g.elements) {
          if (c.map == prod) found = &c;
        }
        REQUIRE(found != nullptr);
        CHECK(found->sign == a.sign * b.sign);
      }
    }
  }
  CHECK(finite == 23);
}

TEST_CASE("bound and degree cap are reported distinctly") {
  auto inf = steps("N,SE,NW");
  CHECK(generate_group(inf, {3, 8}).status == GroupStatus::ExceedsBound);
  CHECK(generate_group(inf, {200, 2}).status == GroupStatus::DegreeCapExceeded);
  CHECK(generate_group(steps("N,S,E,W"), {3, 8}).status == GroupStatus::ExceedsBound);
  CHECK_THROWS(generate_group(inf, {1, 8}));
}

TEST_CASE("orbit sums") {
  auto g1 = generate_group(steps("N,S,E,W"));
  CHECK(orbit_sum(g1) == mono(1, 1) - mono(-1, 1) - mono(1, -1) + mono(-1, -1));

  auto g17 = generate_group(steps("N,SE,SW"));
  LaurentPolynomial2 o = orbit_sum(g17);
  // xy O(x̄,ȳ) = (1-x)(1+x)(A_1 - y² A_{-1}) with A_1 = 1, A_{-1} = x + x̄.
  LaurentPolynomial2 cleared = o.rescaled_exponents({-1, -1}).shifted({1, 1});
  auto one = LaurentPolynomial2(1), x = mono(1, 0);
  auto a_minus = mono(1, 0) + mono(-1, 0);
  CHECK(cleared == (one - x) * (one + x) * (one - mono(0, 2) * a_minus));

  WalkGroup trivial;
  trivial.elements.push_back({"", identity_map(), 1});
  CHECK(orbit_sum(trivial) == mono(1, 1));

  auto g9 = generate_group(steps("NE,NW,S"));
  CHECK_THROWS_AS(orbit_sum(g9), ClassMismatch);
  RationalExpr2 r = orbit_sum_rational(g9).inverted() * expr(mono(1, 1));
  // (1-x²)(1 - y² A_{-1}/A_1) with A_{-1} = 1, A_1 = x + x̄.
  RationalExpr2 expect = expr(one - x * x) * (expr(one) - expr(mono(0, 2), mono(1, 0) + mono(-1, 0)));
  CHECK(r == expect);

  CHECK_THROWS(orbit_sum_rational(generate_group(steps("N,SE,NW"), {10, 8})));
}
