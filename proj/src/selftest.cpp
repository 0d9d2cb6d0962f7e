#include "excalc/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>

#include "excalc/dolbeault.hpp"
#include "excalc/homotopy.hpp"
#include "excalc/parser.hpp"
#include "excalc/printer.hpp"
#include "excalc/quadrature.hpp"
#include "excalc/randgen.hpp"

namespace excalc {

namespace {

using MaybeFail = std::optional<std::string>;

struct Suite {
  const SelftestOptions& opt;
  std::vector<CheckResult> rows;

  void check(const std::string& name, int cases, const std::function<MaybeFail(Rng&, int)>& body) {
    std::uint64_t salt = 1469598103934665603ull;  // FNV-1a over the name
    for (char c : name) {
      salt ^= static_cast<unsigned char>(c);
      salt *= 1099511628211ull;
    }
    Rng rng(opt.seed ^ salt);
    CheckResult row{name, cases, true, ""};
    for (int i = 0; i < cases; ++i) {
      if (MaybeFail fail = body(rng, i)) {
        row.passed = false;
        row.detail = "case " + std::to_string(i) + ": " + *fail;
        break;
      }
    }
    rows.push_back(std::move(row));
  }
};

struct RealSample {
  Form w;
  int n = 0;
  int k = 0;
};

RealSample random_real(Rng& rng) {
  RealSample s;
  s.n = rng.range(1, 4);
  s.k = rng.range(0, s.n);
  auto base = rng.base_point(Mode::Real, s.n);
  s.w = rng.form(Mode::Real, s.n, base, s.k, 5, 3);
  return s;
}

Form random_complex(Rng& rng, int& n_out) {
  const int n = rng.range(1, 2);
  n_out = n;
  const int k = rng.range(0, 2 * n);
  auto base = rng.base_point(Mode::Complex, n);
  return rng.form(Mode::Complex, n, base, k, 4, 3);
}

MaybeFail expect_equal(const Form& got, const Form& want, const char* what) {
  if (got == want) return std::nullopt;
  return std::string(what) + ": got " + to_text(got) + ", want " + to_text(want);
}

MaybeFail expect_zero(const Form& got, const char* what) {
  if (got.is_zero()) return std::nullopt;
  return std::string(what) + " != 0: " + to_text(got);
}

// --- numeric helpers -------------------------------------------------------

double mag(const std::complex<double>& z) { return std::abs(z); }

MaybeFail compare_oracle(const Form& w, const Form& symbolic, std::span<const GaussRat> point,
                         ContractPart part) {
  QuadratureRule rule(std::max(16, required_order(w)));
  auto numeric = quad_H_at(w, point, rule, part);
  auto exact_at = evaluate_form(symbolic, point);
  // union of basis terms on both sides
  std::map<BasisTerm, std::complex<double>> exact;
  for (const auto& [t, p] : exact_at.terms()) exact[t] = p.constant_term().to_complex();
  for (const auto& [t, v] : numeric) exact.try_emplace(t, 0.0);
  for (const auto& [t, want] : exact) {
    const auto it = numeric.find(t);
    const std::complex<double> got = it == numeric.end() ? 0.0 : it->second;
    const double tol = std::max(1e-12, 1e-9 * std::max(mag(got), mag(want)));
    if (mag(got - want) > tol) {
      return "quadrature mismatch: |" + std::to_string(mag(got - want)) + "| on form " + to_text(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
  Suite suite{opt, {}};
  const int N = opt.count;

  // ---- homotopy operator laws ----------------------------------------------

  suite.check("invariance_formula", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    Form rebuilt = ext_d(homotopy_H(w)) + homotopy_H(ext_d(w)) + eval_at_base(w);
    return expect_equal(rebuilt, w, "dH + Hd + s*");
  });

  suite.check("d_d_zero", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    return expect_zero(ext_d(ext_d(w)), "d(d w)");
  });

  suite.check("H_H_zero", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    return expect_zero(homotopy_H(homotopy_H(w)), "H(H w)");
  });

  suite.check("projector_dH_idempotent", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    Form p = ext_d(homotopy_H(w));
    return expect_equal(ext_d(homotopy_H(p)), p, "(dH)^2 vs dH");
  });

  suite.check("projector_Hd_idempotent", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    Form p = homotopy_H(ext_d(w));
    return expect_equal(homotopy_H(ext_d(p)), p, "(Hd)^2 vs Hd");
  });

  suite.check("image_antiexact", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    if (is_antiexact(homotopy_H(w))) return std::nullopt;
    return "H image not antiexact for " + to_text(w);
  });

  suite.check("ladder_dHd", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    return expect_equal(ext_d(homotopy_H(ext_d(w))), ext_d(w), "dHd vs d");
  });

  suite.check("ladder_HdH", N, [](Rng& rng, int) -> MaybeFail {
    auto [w, n, k] = random_real(rng);
    return expect_equal(homotopy_H(ext_d(homotopy_H(w))), homotopy_H(w), "HdH vs H");
  });

  suite.check("Hd_inverts_on_antiexact", N, [](Rng& rng, int) -> MaybeFail {
    // antiexact alpha of degree >= 1: H d alpha = alpha
    const int n = rng.range(2, 4);
    const int k = rng.range(2, n);
    auto base = rng.base_point(Mode::Real, n);
    Form alpha = homotopy_H(rng.nonzero_form(Mode::Real, n, base, k, 5, 3));
    return expect_equal(homotopy_H(ext_d(alpha)), alpha, "Hd on antiexact");
  });

  suite.check("dH_inverts_on_exact", N, [](Rng& rng, int) -> MaybeFail {
    // exact eps of degree >= 1: d H eps = eps
    const int n = rng.range(1, 4);
    const int k = rng.range(1, n);
    auto base = rng.base_point(Mode::Real, n);
    Form eps = ext_d(rng.form(Mode::Real, n, base, k - 1, 5, 3));
    return expect_equal(ext_d(homotopy_H(eps)), eps, "dH on exact");
  });

  suite.check("ladder_d_lowers", N, [](Rng& rng, int) -> MaybeFail {
    // nonzero antiexact mu: d mu is an eigenvector with eigenvalue -1
    const int n = rng.range(2, 4);
    const int k = rng.range(1, n - 1);
    auto base = rng.base_point(Mode::Real, n);
    Form mu;
    do {
      mu = homotopy_H(rng.nonzero_form(Mode::Real, n, base, k + 1, 5, 3));
    } while (mu.is_zero());
    auto verdict = oscillator_classify(ext_d(mu));
    if (verdict.kind == OscillatorVerdict::Kind::Eigenvector && verdict.lambda == -1)
      return std::nullopt;
    return "d(antiexact) did not classify as lambda=-1 for " + to_text(mu);
  });

  suite.check("ladder_H_raises", N, [](Rng& rng, int) -> MaybeFail {
    // nonzero exact omega, k < n: H omega is an eigenvector with eigenvalue +1
    const int n = rng.range(2, 4);
    const int k = rng.range(1, n - 1);
    auto base = rng.base_point(Mode::Real, n);
    Form omega;
    do {
      omega = ext_d(rng.nonzero_form(Mode::Real, n, base, k - 1, 5, 3));
    } while (omega.is_zero());
    auto verdict = oscillator_classify(homotopy_H(omega));
    if (verdict.kind == OscillatorVerdict::Kind::Eigenvector && verdict.lambda == 1)
      return std::nullopt;
    return "H(exact) did not classify as lambda=+1 for " + to_text(omega);
  });

  // ---- form algebra ---------------------------------------------------------

  suite.check("leibniz_rule", N, [](Rng& rng, int) -> MaybeFail {
    const int n = rng.range(1, 4);
    auto base = rng.base_point(Mode::Real, n);
    const int ka = rng.range(0, n);
    const int kb = rng.range(0, n - ka);
    Form a = rng.form(Mode::Real, n, base, ka, 4, 2);
    Form b = rng.form(Mode::Real, n, base, kb, 4, 2);
    Form lhs = ext_d(wedge(a, b));
    Form rhs = wedge(ext_d(a), b) + (ka % 2 == 0 ? wedge(a, ext_d(b)) : -wedge(a, ext_d(b)));
    return expect_equal(lhs, rhs, "graded Leibniz");
  });

  suite.check("wedge_graded_anticommute", N, [](Rng& rng, int) -> MaybeFail {
    const int n = rng.range(1, 4);
    auto base = rng.base_point(Mode::Real, n);
    const int ka = rng.range(0, n);
    const int kb = rng.range(0, n - ka);
    Form a = rng.form(Mode::Real, n, base, ka, 4, 2);
    Form b = rng.form(Mode::Real, n, base, kb, 4, 2);
    Form rhs = wedge(b, a);
    if ((ka * kb) % 2 == 1) rhs = -rhs;
    return expect_equal(wedge(a, b), rhs, "a^b vs (-1)^(|a||b|) b^a");
  });

  suite.check("interior_antiderivation", N, [](Rng& rng, int) -> MaybeFail {
    const int n = rng.range(1, 4);
    auto base = rng.base_point(Mode::Real, n);
    const int ka = rng.range(0, n);
    const int kb = rng.range(0, n - ka);
    Form a = rng.form(Mode::Real, n, base, ka, 4, 2);
    Form b = rng.form(Mode::Real, n, base, kb, 4, 2);
    auto K = RadialField::full(Mode::Real, base);
    Form lhs = interior(K, wedge(a, b));
    Form rhs = wedge(interior(K, a), b) +
               (ka % 2 == 0 ? wedge(a, interior(K, b)) : -wedge(a, interior(K, b)));
    return expect_equal(lhs, rhs, "contraction antiderivation");
  });

  // ---- Dolbeault layer ------------------------------------------------------

  suite.check("complex_d_splits", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_equal(ext_d(w), del(w) + delbar(w), "d vs del + delbar");
  });

  suite.check("del_del_zero", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_zero(del(del(w)), "del^2");
  });

  suite.check("delbar_delbar_zero", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_zero(delbar(delbar(w)), "delbar^2");
  });

  suite.check("del_delbar_anticommute", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_zero(del(delbar(w)) + delbar(del(w)), "del delbar + delbar del");
  });

  suite.check("hplus_hplus_zero", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_zero(h_plus(h_plus(w)), "H+ H+");
  });

  suite.check("hminus_hminus_zero", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_zero(h_minus(h_minus(w)), "H- H-");
  });

  suite.check("hplus_hminus_anticommute", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_zero(h_plus(h_minus(w)) + h_minus(h_plus(w)), "H+ H- + H- H+");
  });

  suite.check("homotopy_splits", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    auto split = split_check(w);
    return expect_equal(split.total, split.plus + split.minus, "H vs H+ + H-");
  });

  suite.check("invariance_eight_terms", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    auto inv = invariance_terms(w);
    if (inv.holds) return std::nullopt;
    return "eight-term sum mismatch on " + to_text(w);
  });

  suite.check("cross_terms_cancel_not_vanish", N, [](Rng& rng, int) -> MaybeFail {
    // zbar dz keeps nonzero mixed terms that only cancel in the sum
    auto base = rng.base_point(Mode::Complex, 1);
    SessionConfig cfg{Mode::Complex, 1, base};
    Form w = parse_form("zb1*dz1", cfg);
    auto inv = invariance_terms(w);
    const Form& hplus_delbar = inv.terms[6].second;
    const Form& delbar_hplus = inv.terms[7].second;
    if (hplus_delbar.is_zero() || delbar_hplus.is_zero())
      return std::string("mixed term unexpectedly vanished");
    if (!(hplus_delbar + delbar_hplus).is_zero())
      return std::string("mixed terms failed to cancel");
    if (!inv.holds) return std::string("eight-term identity failed");
    return std::nullopt;
  });

  suite.check("conj_intertwines_h_split", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_equal(conj_form(h_plus(w)), h_minus(conj_form(w)), "conj H+ vs H- conj");
  });

  suite.check("subcomplex_holomorphic", N, [](Rng& rng, int) -> MaybeFail {
    const int n = rng.range(1, 2);
    auto base = rng.base_point(Mode::Complex, n);
    const int p = rng.range(0, n);
    Form w = rng.form(Mode::Complex, n, base, p, 4, 3, SlotRange::Holomorphic);
    auto rep = subcomplex_check(w);
    if (rep.precondition_ok && rep.identity_holds && rep.complementary_h_vanishes &&
        rep.mixed_derivative_vanishes)
      return std::nullopt;
    return "holomorphic subcomplex failed on " + to_text(w);
  });

  suite.check("subcomplex_antiholomorphic", N, [](Rng& rng, int) -> MaybeFail {
    const int n = rng.range(1, 2);
    auto base = rng.base_point(Mode::Complex, n);
    const int q = rng.range(0, n);
    Form w = rng.form(Mode::Complex, n, base, q, 4, 3, SlotRange::Antiholomorphic);
    auto rep = subcomplex_check(w);
    if (rep.precondition_ok && rep.identity_holds && rep.complementary_h_vanishes &&
        rep.mixed_derivative_vanishes)
      return std::nullopt;
    return "antiholomorphic subcomplex failed on " + to_text(w);
  });

  suite.check("realify_roundtrip", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    if (auto fail = expect_equal(complexify(realify(w)), w, "complexify(realify)")) return fail;
    return expect_equal(realify(ext_d(w)), ext_d(realify(w)), "d through realify");
  });

  suite.check("realify_intertwines_H", N, [](Rng& rng, int) -> MaybeFail {
    int n = 0;
    Form w = random_complex(rng, n);
    return expect_equal(realify(homotopy_H(w)), homotopy_H(realify(w)), "H through realify");
  });

  // ---- numeric oracles ------------------------------------------------------

  if (opt.numeric) {
    suite.check("quadrature_selftest", 20, [](Rng&, int i) -> MaybeFail {
      const int order = i + 1;
      QuadratureRule rule(order);
      for (int m = 0; m <= 2 * order - 1; ++m) {
        double got = 0.0;
        for (int q = 0; q < order; ++q)
          got += rule.weights()[q] * std::pow(rule.nodes()[q], m);
        const double want = 1.0 / (m + 1);
        if (std::abs(got - want) > 1e-14 * want)
          return "order " + std::to_string(order) + " misses t^" + std::to_string(m);
      }
      return std::nullopt;
    });

    suite.check("oracle_H", N, [](Rng& rng, int) -> MaybeFail {
      const int n = rng.range(1, 4);
      const int k = rng.range(1, n);
      auto base = rng.base_point(Mode::Real, n);
      Form w = rng.form(Mode::Real, n, base, k, 5, 3);
      Form hw = homotopy_H(w);
      for (int rep = 0; rep < 5; ++rep) {
        auto pt = rng.sample_point(Mode::Real, n);
        if (auto fail = compare_oracle(w, hw, pt, ContractPart::Full)) return fail;
      }
      return std::nullopt;
    });

    suite.check("oracle_H_split", N, [](Rng& rng, int) -> MaybeFail {
      const int n = rng.range(1, 2);
      const int k = rng.range(1, 2 * n);
      auto base = rng.base_point(Mode::Complex, n);
      Form w = rng.form(Mode::Complex, n, base, k, 4, 3);
      Form hp = h_plus(w);
      Form hm = h_minus(w);
      for (int rep = 0; rep < 5; ++rep) {
        auto pt = rng.sample_point(Mode::Complex, n);
        if (auto fail = compare_oracle(w, hp, pt, ContractPart::Holomorphic)) return fail;
        if (auto fail = compare_oracle(w, hm, pt, ContractPart::Antiholomorphic)) return fail;
      }
      return std::nullopt;
    });

    suite.check("fd_exterior_derivative", N, [](Rng& rng, int) -> MaybeFail {
      // coefficients <= 3 and |x| <= 1 keep the step^2 error under the bound
      const int n = rng.range(1, 4);
      const int k = rng.range(0, n);
      std::vector<GaussRat> origin(n, GaussRat(0));
      Form w = rng.form(Mode::Real, n, origin, k, 5, 3).scaled(GaussRat(Rat(1, 3)));
      std::vector<GaussRat> pt;
      for (int s = 0; s < n; ++s) pt.emplace_back(Rat(rng.range(-3, 3), rng.range(3, 4)));
      const double residual = fd_d_at(w, pt, 1e-4);
      if (residual < 1e-6) return std::nullopt;
      return "finite differences off by " + std::to_string(residual);
    });
  }

  return suite.rows;
}

}  // namespace excalc
