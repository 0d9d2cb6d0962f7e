#include <doctest.h>

#include <vector>

#include "excalc/polynomial.hpp"
#include "excalc/randgen.hpp"

using namespace excalc;

namespace {

Poly real_var(int dim, Label s) { return Poly::variable(Mode::Real, dim, s); }
Poly real_const(int dim, const Rat& c) { return Poly::constant(Mode::Real, dim, GaussRat(c)); }

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("rationals stay canonical") {
    // gcd-reduced, positive denominator; a negative denominator is rejected
    CHECK(numerator(Rat(Int(6), Int(3))) == 2);
    CHECK(denominator(Rat(Int(6), Int(3))) == 1);
    const Rat q = Rat(2) / Rat(-4);
    CHECK(q == Rat(Int(-1), Int(2)));
    CHECK(denominator(q) == 2);
    CHECK_THROWS(Rat(Int(2), Int(-4)));
    CHECK(GaussRat(Rat(1), Rat(-2)).conj() == GaussRat(Rat(1), Rat(2)));
  }

  TEST_CASE("ring basics") {
    // (u1 + 1)(u1 - 1) = u1^2 - 1
    const int dim = 1;
    Poly p = (real_var(dim, 0) + real_const(dim, Rat(1))) * (real_var(dim, 0) - real_const(dim, Rat(1)));
    Poly want(Mode::Real, dim);
    want.add_monomial({2}, GaussRat(1));
    want.add_monomial({0}, GaussRat(-1));
    CHECK(p == want);

    // additive identity
    Poly q = real_var(2, 0) * real_var(2, 1);
    CHECK(q + Poly(Mode::Real, 2) == q);

    // (i*v1)*(i*v1) = -v1^2
    Poly iv = Poly::variable(Mode::Complex, 1, 0).scaled(GaussRat::unit_i());
    Poly want_c(Mode::Complex, 1);
    want_c.add_monomial({2, 0}, GaussRat(-1));
    CHECK(iv * iv == want_c);
  }

  TEST_CASE("formal partials") {
    const int dim = 2;
    Poly p(Mode::Real, dim);  // u1^2 u2
    p.add_monomial({2, 1}, GaussRat(1));
    Poly want(Mode::Real, dim);  // 2 u1 u2
    want.add_monomial({1, 1}, GaussRat(2));
    CHECK(p.partial(0) == want);

    Poly q(Mode::Real, dim);  // u1^2
    q.add_monomial({2, 0}, GaussRat(1));
    CHECK(q.partial(1).is_zero());

    // Wirtinger-style formal rule: d/dvb1 (v1 vb1) = v1
    Poly c(Mode::Complex, 1);
    c.add_monomial({1, 1}, GaussRat(1));
    CHECK(c.partial(1) == Poly::variable(Mode::Complex, 1, 0));
  }

  TEST_CASE("homogeneous_split") {
    Poly p(Mode::Real, 2);  // u1^2 + u2
    p.add_monomial({2, 0}, GaussRat(1));
    p.add_monomial({0, 1}, GaussRat(1));
    auto parts = p.homogeneous_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 1);
    CHECK(parts[0].second == Poly::variable(Mode::Real, 2, 1));
    CHECK(parts[1].first == 2);

    auto constant = real_const(2, Rat(5)).homogeneous_split();
    REQUIRE(constant.size() == 1);
    CHECK(constant[0].first == 0);

    CHECK(Poly(Mode::Real, 2).homogeneous_split().empty());
  }

  TEST_CASE("homogeneous_split sums back to the polynomial") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
      const int dim = rng.range(1, 4);
      Poly p = rng.poly(Mode::Real, dim, 6, 6, false);
      Poly sum(Mode::Real, dim);
      for (const auto& [deg, part] : p.homogeneous_split()) sum += part;
      REQUIRE(sum == p);
    }
  }

  TEST_CASE("rebase by binomial expansion") {
    // x^2 written at 0, rebased to 1: u^2 + 2u + 1
    Poly p(Mode::Real, 1);
    p.add_monomial({2}, GaussRat(1));
    std::vector<GaussRat> zero{GaussRat(0)}, one{GaussRat(1)};
    Poly q = rebase(p, zero, one);
    Poly want(Mode::Real, 1);
    want.add_monomial({2}, GaussRat(1));
    want.add_monomial({1}, GaussRat(2));
    want.add_monomial({0}, GaussRat(1));
    CHECK(q == want);

    // rebasing to the same point is the identity
    CHECK(rebase(p, one, one) == p);

    // (x-1)(x+1) written at 0, rebased to 1: u^2 + 2u
    Poly r(Mode::Real, 1);  // x^2 - 1
    r.add_monomial({2}, GaussRat(1));
    r.add_monomial({0}, GaussRat(-1));
    Poly rb = rebase(r, zero, one);
    Poly want2(Mode::Real, 1);
    want2.add_monomial({2}, GaussRat(1));
    want2.add_monomial({1}, GaussRat(2));
    CHECK(rb == want2);

    // oracle: same function, evaluated at random rational points
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
      std::vector<GaussRat> pt{GaussRat(rng.rat())};
      REQUIRE(evaluate(r, pt, zero) == evaluate(rb, pt, one));
    }
  }

  TEST_CASE("rebase round-trips") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
      const int dim = rng.range(1, 3);
      const Mode mode = rng.range(0, 1) == 0 ? Mode::Real : Mode::Complex;
      Poly p = rng.poly(mode, dim, 5, 5, mode == Mode::Complex);
      auto a = rng.base_point(mode, dim);
      auto b = rng.base_point(mode, dim);
      REQUIRE(rebase(rebase(p, a, b), b, a) == p);
    }
  }

  TEST_CASE("evaluate") {
    Poly p(Mode::Real, 2);  // u1 u2, base 0
    p.add_monomial({1, 1}, GaussRat(1));
    std::vector<GaussRat> base{GaussRat(0), GaussRat(0)};
    std::vector<GaussRat> pt{GaussRat(2), GaussRat(3)};
    CHECK(evaluate(p, pt, base) == GaussRat(6));

    // at the base point only the constant term survives
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      Poly q = rng.poly(Mode::Real, 2, 5, 5, false);
      auto b = rng.base_point(Mode::Real, 2);
      REQUIRE(evaluate(q, b, b) == q.constant_term());
    }

    // v1*vb1 at z = 1+i is |1+i|^2 = 2
    Poly c(Mode::Complex, 1);
    c.add_monomial({1, 1}, GaussRat(1));
    std::vector<GaussRat> zbase{GaussRat(0)};
    std::vector<GaussRat> zpt{GaussRat(Rat(1), Rat(1))};
    CHECK(evaluate(c, zpt, zbase) == GaussRat(2));
  }

  TEST_CASE("ring axioms on random triples") {
    Rng rng(123);
    for (int i = 0; i < 1000; ++i) {
      const int dim = rng.range(1, 4);
      Poly a = rng.poly(Mode::Real, dim, 6, 3, false);
      Poly b = rng.poly(Mode::Real, dim, 6, 3, false);
      Poly c = rng.poly(Mode::Real, dim, 6, 3, false);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a + b == b + a);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("partials commute") {
    Rng rng(321);
    for (int i = 0; i < 200; ++i) {
      const int dim = rng.range(2, 4);
      Poly p = rng.poly(Mode::Real, dim, 6, 5, false);
      for (Label a = 0; a < dim; ++a) {
        for (Label b = a + 1; b < dim; ++b) {
          REQUIRE(p.partial(a).partial(b) == p.partial(b).partial(a));
        }
      }
    }
  }

  TEST_CASE("mode and arity violations") {
    CHECK_THROWS_AS(real_var(2, 0) + Poly::variable(Mode::Real, 3, 0), DomainError);
    CHECK_THROWS_AS(real_var(2, 0) * Poly::variable(Mode::Complex, 2, 0), DomainError);
    CHECK_THROWS_AS(real_var(2, 0).partial(5), DomainError);
    Poly p = real_var(2, 0);
    std::vector<GaussRat> base{GaussRat(0), GaussRat(0)};
    std::vector<GaussRat> short_pt{GaussRat(1)};
    CHECK_THROWS_AS(evaluate(p, short_pt, base), DomainError);
  }
}
