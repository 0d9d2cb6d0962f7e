#include <doctest.h>

#include "excalc/dolbeault.hpp"
#include "excalc/form.hpp"
#include "excalc/parser.hpp"
#include "excalc/printer.hpp"
#include "excalc/randgen.hpp"

using namespace excalc;

namespace {

SessionConfig real_cfg(int dim) { return {Mode::Real, dim, {}}; }
SessionConfig complex_cfg(int dim) { return {Mode::Complex, dim, {}}; }

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("wedge examples") {
    auto cfg = real_cfg(3);
    CHECK(parse_form("dx1/\\dx2", cfg) == wedge(parse_form("dx1", cfg), parse_form("dx2", cfg)));
    Form xdy = parse_form("x1*dx2", cfg);
    CHECK(wedge(xdy, xdy).is_zero());
    CHECK(wedge(parse_form("dx1", cfg), parse_form("dx1/\\dx2 + dx2/\\dx3", cfg)) ==
          parse_form("dx1/\\dx2/\\dx3", cfg));
  }

  TEST_CASE("exterior derivative examples") {
    auto cfg = real_cfg(2);
    CHECK(ext_d(parse_form("x1^2*x2", cfg)) == parse_form("2*x1*x2*dx1 + x1^2*dx2", cfg));
    CHECK(ext_d(parse_form("x1*dx2", cfg)) == parse_form("dx1/\\dx2", cfg));
    CHECK(ext_d(parse_form("dx1/\\dx2", cfg)).is_zero());
  }

  TEST_CASE("interior product examples") {
    auto cfg = real_cfg(2);
    auto base = cfg.resolved_base();
    auto K = RadialField::full(Mode::Real, base);
    CHECK(interior(K, parse_form("dx1/\\dx2", cfg)) == parse_form("x1*dx2 - x2*dx1", cfg));
    CHECK(interior(K, parse_form("x1*dx2", cfg)) == parse_form("x1*x2", cfg));
    // contraction of a 0-form is zero
    CHECK(interior(K, parse_form("x1^2", cfg)).is_zero());

    // K+ contraction of zbar dz is zbar*(z - z0)
    SessionConfig ccfg{Mode::Complex, 1, {GaussRat(Rat(1), Rat(2))}};
    Form w = parse_form("zb1*dz1", ccfg);
    Form contracted = interior(RadialField::holomorphic(ccfg.base), w);
    CHECK(contracted == wedge(parse_form("zb1", ccfg), parse_form("z1 - (1+2*i)", ccfg)));

    // sampled cross-check: the value at z is conj(z)*(z - z0)
    Rng rng(17);
    for (int i = 0; i < 5; ++i) {
      std::vector<GaussRat> pt{GaussRat(rng.rat(), rng.rat())};
      Form at = evaluate_form(contracted, pt);
      const GaussRat want = pt[0].conj() * (pt[0] - ccfg.base[0]);
      if (want.is_zero()) {
        REQUIRE(at.is_zero());
      } else {
        REQUIRE(at.terms().begin()->second.constant_term() == want);
      }
    }
  }

  TEST_CASE("evaluation at the base point") {
    SessionConfig cfg{Mode::Real, 1, {GaussRat(1)}};
    CHECK(eval_at_base(parse_form("x1^2 + 3", cfg)) == parse_form("4", cfg));
    CHECK(eval_at_base(parse_form("5", cfg)) == parse_form("5", cfg));
    auto cfg2 = real_cfg(2);
    CHECK(eval_at_base(parse_form("x1*dx2", cfg2)).is_zero());
  }

  TEST_CASE("base points are part of a form's identity") {
    SessionConfig at_zero = real_cfg(2);
    SessionConfig at_one{Mode::Real, 2, {GaussRat(1), GaussRat(1)}};
    Form a = parse_form("x1*dx2", at_zero);
    Form b = parse_form("x1*dx2", at_one);
    CHECK(a != b);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK_THROWS_AS(wedge(a, b), DomainError);
    CHECK_THROWS_AS(interior(RadialField::full(Mode::Real, at_one.resolved_base()), a),
                    DomainError);
  }

  TEST_CASE("mixed degrees are rejected at the form level") {
    Form f = Form::zero(Mode::Real, 2, {GaussRat(0), GaussRat(0)}, 1);
    CHECK_THROWS_AS(f.add_term(BasisTerm({0, 1}), Poly::constant(Mode::Real, 2, GaussRat(1))),
                    DomainError);
    auto cfg = real_cfg(2);
    CHECK_THROWS_AS(parse_form("dx1", cfg) + parse_form("dx1/\\dx2", cfg), DomainError);
  }

  TEST_CASE("zero forms of any degree compare equal") {
    auto base = std::vector<GaussRat>{GaussRat(0), GaussRat(0)};
    CHECK(Form::zero(Mode::Real, 2, base, 0) == Form::zero(Mode::Real, 2, base, 2));
    auto cfg = real_cfg(2);
    CHECK(parse_form("dx1 - dx1", cfg) == Form::zero(Mode::Real, 2, base, 0));
  }

  TEST_CASE("d is nilpotent on random forms") {
    Rng rng(5150);
    for (int i = 0; i < 1000; ++i) {
      const int n = rng.range(1, 4);
      const int k = rng.range(0, n);
      Form w = rng.form(Mode::Real, n, rng.base_point(Mode::Real, n), k, 5, 3);
      REQUIRE(ext_d(ext_d(w)).is_zero());
    }
  }

  TEST_CASE("graded Leibniz rule") {
    Rng rng(6001);
    for (int i = 0; i < 500; ++i) {
      const int n = rng.range(1, 4);
      auto base = rng.base_point(Mode::Real, n);
      const int ka = rng.range(0, n);
      const int kb = rng.range(0, n - ka);
      Form a = rng.form(Mode::Real, n, base, ka, 4, 2);
      Form b = rng.form(Mode::Real, n, base, kb, 4, 2);
      Form rhs = wedge(ext_d(a), b) + (ka % 2 == 0 ? wedge(a, ext_d(b)) : -wedge(a, ext_d(b)));
      REQUIRE(ext_d(wedge(a, b)) == rhs);
    }
  }

  TEST_CASE("wedge graded anticommutativity") {
    Rng rng(6002);
    for (int i = 0; i < 500; ++i) {
      const int n = rng.range(1, 4);
      auto base = rng.base_point(Mode::Real, n);
      const int ka = rng.range(0, n);
      const int kb = rng.range(0, n - ka);
      Form a = rng.form(Mode::Real, n, base, ka, 4, 2);
      Form b = rng.form(Mode::Real, n, base, kb, 4, 2);
      Form rhs = (ka * kb) % 2 == 0 ? wedge(b, a) : -wedge(b, a);
      REQUIRE(wedge(a, b) == rhs);
    }
  }

  TEST_CASE("interior product is an antiderivation") {
    Rng rng(6003);
    for (int i = 0; i < 500; ++i) {
      const int n = rng.range(1, 4);
      auto base = rng.base_point(Mode::Real, n);
      const int ka = rng.range(0, n);
      const int kb = rng.range(0, n - ka);
      Form a = rng.form(Mode::Real, n, base, ka, 4, 2);
      Form b = rng.form(Mode::Real, n, base, kb, 4, 2);
      auto K = RadialField::full(Mode::Real, base);
      Form rhs = wedge(interior(K, a), b) +
                 (ka % 2 == 0 ? wedge(a, interior(K, b)) : -wedge(a, interior(K, b)));
      REQUIRE(interior(K, wedge(a, b)) == rhs);
    }
  }

  TEST_CASE("complex exterior derivative splits into del + delbar") {
    Rng rng(6004);
    for (int i = 0; i < 500; ++i) {
      const int n = rng.range(1, 2);
      const int k = rng.range(0, 2 * n);
      Form w = rng.form(Mode::Complex, n, rng.base_point(Mode::Complex, n), k, 4, 3);
      REQUIRE(ext_d(w) == del(w) + delbar(w));
    }
  }

  TEST_CASE("remaining error paths") {
    CHECK_THROWS_AS(Poly::variable(Mode::Real, 2, 5), DomainError);
    CHECK_THROWS_AS(Poly::variable(Mode::Real, 2, -1), DomainError);
    CHECK_THROWS_AS(conj_poly(Poly::variable(Mode::Real, 2, 0)), DomainError);

    auto cfg = real_cfg(2);
    CHECK_THROWS_AS(conj_form(parse_form("x1*dx2", cfg)), DomainError);
    CHECK_THROWS_AS(Form::zero(Mode::Real, 2, {GaussRat(0)}, 1), DomainError);
    CHECK_THROWS_AS(Form::zero(Mode::Real, 0, {}, 0), DomainError);

    Poly p = Poly::variable(Mode::Real, 2, 0);
    std::vector<GaussRat> a{GaussRat(0), GaussRat(0)};
    std::vector<GaussRat> shorter{GaussRat(1)};
    CHECK_THROWS_AS(rebase(p, a, shorter), DomainError);

    Form f = Form::zero(Mode::Real, 2, a, 1);
    CHECK_THROWS_AS(f.add_term(BasisTerm({1, 0}), Poly::constant(Mode::Real, 2, GaussRat(1))),
                    DomainError);
    CHECK_THROWS_AS(f.add_term(BasisTerm({7}), Poly::constant(Mode::Real, 2, GaussRat(1))),
                    DomainError);
    CHECK_THROWS_AS(f.add_term(BasisTerm({0}), Poly::constant(Mode::Real, 3, GaussRat(1))),
                    DomainError);
  }

  TEST_CASE("bidegrees") {
    auto cfg = complex_cfg(2);
    Form w = parse_form("dz1/\\dzb2", cfg);
    CHECK(w.pure_bidegree() == std::pair<int, int>{1, 1});
    Form mixed = parse_form("dz1/\\dz2 + dz1/\\dzb1", cfg);
    CHECK(!mixed.pure_bidegree().has_value());
  }
}
