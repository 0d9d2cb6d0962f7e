#include <doctest.h>

#include <vector>

#include "excalc/dolbeault.hpp"
#include "excalc/homotopy.hpp"
#include "excalc/parser.hpp"
#include "excalc/printer.hpp"
#include "excalc/randgen.hpp"

using namespace excalc;

namespace {

SessionConfig complex_cfg(int dim, std::vector<GaussRat> base = {}) {
  return {Mode::Complex, dim, std::move(base)};
}

const std::vector<GaussRat> kBases1d[] = {
    {GaussRat(0)},
    {GaussRat(Rat(1), Rat(2))},
    {GaussRat(Rat(-3, 2), Rat(1, 3))},
    {GaussRat(2)},
    {GaussRat(Rat(0), Rat(5))},
};

}  // namespace

TEST_SUITE("dolbeault") {
  TEST_CASE("del and delbar on simple forms") {
    auto cfg = complex_cfg(1);
    CHECK(delbar(parse_form("zb1*dz1", cfg)) == parse_form("dzb1/\\dz1", cfg));
    CHECK(del(parse_form("zb1*dz1", cfg)).is_zero());
    CHECK(del(parse_form("z1^2", cfg)) == parse_form("2*z1*dz1", cfg));
    CHECK(del(parse_form("zb1*dz1", cfg)) + delbar(parse_form("zb1*dz1", cfg)) ==
          ext_d(parse_form("zb1*dz1", cfg)));
  }

  TEST_CASE("real mode is rejected") {
    SessionConfig rcfg{Mode::Real, 2, {}};
    Form w = parse_form("x1*dx2", rcfg);
    CHECK_THROWS_AS(del(w), DomainError);
    CHECK_THROWS_AS(delbar(w), DomainError);
    CHECK_THROWS_AS(h_plus(w), DomainError);
    CHECK_THROWS_AS(h_minus(w), DomainError);
  }

  TEST_CASE("split homotopy on zbar dz across base points") {
    for (const auto& base : kBases1d) {
      auto cfg = complex_cfg(1, base);
      Form w = parse_form("zb1*dz1", cfg);

      // H+ w = (zb0 + (zb - zb0)/2) * (z - z0), frozen coefficientwise
      Form expected = Form::zero(Mode::Complex, 1, base, 0);
      Poly coeff(Mode::Complex, 1);
      coeff.add_monomial({1, 0}, base[0].conj());       // zb0 * v
      coeff.add_monomial({1, 1}, GaussRat(Rat(1, 2)));  // (1/2) v vb
      expected.add_term(BasisTerm{}, coeff);
      CHECK(h_plus(w) == expected);

      CHECK(h_minus(w).is_zero());

      auto split = split_check(w);
      CHECK(split.total == split.plus + split.minus);
      CHECK(split.total == h_plus(w));
    }
  }

  TEST_CASE("h_plus of the standard volume term") {
    auto cfg = complex_cfg(1);
    CHECK(h_plus(parse_form("dz1/\\dzb1", cfg)) == parse_form("1/2*z1*dzb1", cfg));
    CHECK(split_check(parse_form("z1*zb1", cfg)).total.is_zero());

    // with a shifted base the coefficient is still (z - z0)/2
    for (const auto& base : kBases1d) {
      auto shifted = complex_cfg(1, base);
      Form vol = parse_form("dz1/\\dzb1", shifted);
      Form expected = Form::zero(Mode::Complex, 1, base, 1);
      Poly coeff(Mode::Complex, 1);
      coeff.add_monomial({1, 0}, GaussRat(Rat(1, 2)));
      expected.add_term(BasisTerm({1}), coeff);
      CHECK(h_plus(vol) == expected);
      auto split = split_check(vol);
      CHECK(split.total == split.plus + split.minus);
    }
  }

  TEST_CASE("the eight invariance terms reproduce the worked example") {
    for (const auto& base : kBases1d) {
      auto cfg = complex_cfg(1, base);
      Form w = parse_form("zb1*dz1", cfg);
      auto inv = invariance_terms(w);
      REQUIRE(inv.terms.size() == 8);

      const GaussRat half(Rat(1, 2));
      const GaussRat zb0 = base[0].conj();

      Form del_hplus = Form::zero(Mode::Complex, 1, base, 1);
      {
        Poly c(Mode::Complex, 1);
        c.add_monomial({0, 0}, zb0);
        c.add_monomial({0, 1}, half);
        del_hplus.add_term(BasisTerm({0}), c);
      }
      Form delbar_hplus = Form::zero(Mode::Complex, 1, base, 1);
      {
        Poly c(Mode::Complex, 1);
        c.add_monomial({1, 0}, half);
        delbar_hplus.add_term(BasisTerm({1}), c);
      }
      Form hminus_delbar = Form::zero(Mode::Complex, 1, base, 1);
      {
        Poly c(Mode::Complex, 1);
        c.add_monomial({0, 1}, half);
        hminus_delbar.add_term(BasisTerm({0}), c);
      }

      auto term = [&](const char* name) -> const Form& {
        for (const auto& [label, f] : inv.terms) {
          if (label == name) return f;
        }
        FAIL("missing label");
        return inv.sum;
      };

      CHECK(term("del_hplus") == del_hplus);
      CHECK(term("delbar_hplus") == delbar_hplus);
      CHECK(term("hplus_delbar") == -delbar_hplus);
      CHECK(term("hminus_delbar") == hminus_delbar);
      CHECK(term("hplus_del").is_zero());
      CHECK(term("delbar_hminus").is_zero());
      CHECK(term("hminus_del").is_zero());
      CHECK(term("del_hminus").is_zero());

      CHECK(inv.holds);
      CHECK(inv.sum == w);  // s* of a 1-form vanishes
    }
  }

  TEST_CASE("invariance terms of a constant function all vanish") {
    auto cfg = complex_cfg(1);
    auto inv = invariance_terms(parse_form("5", cfg));
    for (const auto& [label, f] : inv.terms) CHECK(f.is_zero());
    CHECK(inv.holds);
    CHECK(inv.expected.is_zero());
  }

  TEST_CASE("boundary subcomplexes") {
    auto cfg = complex_cfg(1);
    auto holo = subcomplex_check(parse_form("z1^2*dz1", cfg));
    CHECK(holo.precondition_ok);
    CHECK(holo.holomorphic_side);
    CHECK(holo.identity_holds);
    CHECK(holo.complementary_h_vanishes);
    CHECK(holo.mixed_derivative_vanishes);

    auto anti = subcomplex_check(parse_form("zb1^2*dzb1", cfg));
    CHECK(anti.precondition_ok);
    CHECK(!anti.holomorphic_side);
    CHECK(anti.identity_holds);

    auto bad = subcomplex_check(parse_form("zb1*dz1", cfg));
    CHECK(!bad.precondition_ok);
    CHECK(bad.failed_hypothesis == "delbar(form) != 0");
  }

  TEST_CASE("conversion between real and complex coordinates") {
    auto cfg = complex_cfg(1);
    SessionConfig rcfg{Mode::Real, 2, {}};

    CHECK(complexify(parse_form("dx1", rcfg)) == parse_form("1/2*dz1 + 1/2*dzb1", cfg));
    // dy1 aliases dx2
    CHECK(realify(parse_form("dz1/\\dzb1", cfg)) == parse_form("-2*i*dx1/\\dy1", rcfg));
    CHECK(realify(parse_form("dz1/\\dzb1", cfg)) == parse_form("-2*i*dx1/\\dx2", rcfg));

    Form w = parse_form("zb1*dz1", cfg);
    CHECK(homotopy_H(realify(w)) == realify(h_plus(w) + h_minus(w)));
  }

  TEST_CASE("bicomplex and split-operator laws on random forms") {
    Rng rng(314159);
    for (int i = 0; i < 500; ++i) {
      const int n = rng.range(1, 2);
      const int k = rng.range(0, 2 * n);
      auto base = rng.base_point(Mode::Complex, n);
      Form w = rng.form(Mode::Complex, n, base, k, 4, 3);

      REQUIRE(del(del(w)).is_zero());
      REQUIRE(delbar(delbar(w)).is_zero());
      REQUIRE((del(delbar(w)) + delbar(del(w))).is_zero());

      REQUIRE(h_plus(h_plus(w)).is_zero());
      REQUIRE(h_minus(h_minus(w)).is_zero());
      REQUIRE((h_plus(h_minus(w)) + h_minus(h_plus(w))).is_zero());

      auto split = split_check(w);
      REQUIRE(split.total == split.plus + split.minus);

      auto inv = invariance_terms(w);
      REQUIRE(inv.holds);

      REQUIRE(conj_form(h_plus(w)) == h_minus(conj_form(w)));
    }
  }

  TEST_CASE("generic forms need all eight invariance terms") {
    // mixed terms are individually nonzero and only cancel in the sum
    for (const auto& base : kBases1d) {
      auto cfg = complex_cfg(1, base);
      auto inv = invariance_terms(parse_form("zb1*dz1", cfg));
      const Form& hplus_delbar = inv.terms[6].second;
      const Form& delbar_hplus = inv.terms[7].second;
      CHECK(!hplus_delbar.is_zero());
      CHECK(!delbar_hplus.is_zero());
      CHECK((hplus_delbar + delbar_hplus).is_zero());
    }
  }

  TEST_CASE("round trips and commutation through realify") {
    Rng rng(2718);
    for (int i = 0; i < 300; ++i) {
      const int n = rng.range(1, 2);
      const int k = rng.range(0, 2 * n);
      auto base = rng.base_point(Mode::Complex, n);
      Form w = rng.form(Mode::Complex, n, base, k, 4, 3);

      Form r = realify(w);
      REQUIRE(complexify(r) == w);
      REQUIRE(realify(ext_d(w)) == ext_d(r));
      REQUIRE(realify(homotopy_H(w)) == homotopy_H(r));
    }
  }

  TEST_CASE("conversion arity errors") {
    SessionConfig odd{Mode::Real, 3, {}};
    CHECK_THROWS_AS(complexify(parse_form("x1*dx2", odd)), DomainError);
    auto cfg = complex_cfg(1);
    CHECK_THROWS_AS(realify(parse_form("x1", SessionConfig{Mode::Real, 1, {}})), DomainError);
  }

  TEST_CASE("holomorphic corpus satisfies the two-term identity") {
    Rng rng(555);
    for (int i = 0; i < 200; ++i) {
      const int n = rng.range(1, 2);
      auto base = rng.base_point(Mode::Complex, n);
      const int p = rng.range(0, n);
      Form w = rng.form(Mode::Complex, n, base, p, 4, 3, SlotRange::Holomorphic);
      auto rep = subcomplex_check(w);
      REQUIRE(rep.precondition_ok);
      REQUIRE(rep.identity_holds);
      REQUIRE(rep.complementary_h_vanishes);
      REQUIRE(rep.mixed_derivative_vanishes);

      Form wb = rng.form(Mode::Complex, n, base, p, 4, 3, SlotRange::Antiholomorphic);
      auto repb = subcomplex_check(wb);
      REQUIRE(repb.precondition_ok);
      REQUIRE(repb.identity_holds);
    }
  }
}
