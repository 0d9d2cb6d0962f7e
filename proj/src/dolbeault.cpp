#include "excalc/dolbeault.hpp"

#include <utility>

#include "excalc/homotopy.hpp"

namespace excalc {

namespace {

void require_complex(const Form& w, const char* op) {
  if (w.mode() != Mode::Complex) throw DomainError(std::string(op) + " requires complex mode");
}

// Exterior derivative restricted to one slot block.
Form directional_d(const Form& w, bool holomorphic) {
  const int n = w.dim();
  const Label lo = holomorphic ? 0 : n;
  const Label hi = holomorphic ? n : 2 * n;
  Form out = Form::zero(w.mode(), w.dim(), w.base(), w.degree() + 1);
  for (const auto& [t, p] : w.terms()) {
    for (Label s = lo; s < hi; ++s) {
      Poly dp = p.partial(s);
      if (dp.is_zero()) continue;
      auto [sign, merged] = wedge_merge(BasisTerm({s}), t);
      if (sign == 0) continue;
      out.add_term(merged, sign < 0 ? -dp : dp);
    }
  }
  return out;
}

// Transports a form along per-slot variable and differential images.
Form map_form(const Form& src, Mode tmode, int tdim, const std::vector<GaussRat>& tbase,
              const std::vector<Poly>& var_images, const std::vector<Form>& diff_images) {
  Form out = Form::zero(tmode, tdim, tbase, src.degree());
  for (const auto& [t, p] : src.terms()) {
    Form piece = Form::zero(tmode, tdim, tbase, 0);
    piece.add_term(BasisTerm{}, substitute(p, tmode, tdim, var_images));
    for (Label l : t.labels) piece = wedge(piece, diff_images[l]);
    out = out + piece;
  }
  return out;
}

Form const_one_form(Mode mode, int dim, const std::vector<GaussRat>& base, Label slot,
                    const GaussRat& coeff) {
  Form f = Form::zero(mode, dim, base, 1);
  f.add_term(BasisTerm({slot}), Poly::constant(mode, dim, coeff));
  return f;
}

}  // namespace

Form del(const Form& w) {
  require_complex(w, "del");
  return directional_d(w, true);
}

Form delbar(const Form& w) {
  require_complex(w, "delbar");
  return directional_d(w, false);
}

Form h_plus(const Form& w) {
  require_complex(w, "h_plus");
  return homotopy_part(w, ContractPart::Holomorphic);
}

Form h_minus(const Form& w) {
  require_complex(w, "h_minus");
  return homotopy_part(w, ContractPart::Antiholomorphic);
}

HomotopySplit split_check(const Form& w) {
  require_complex(w, "split_check");
  return {homotopy_H(w), h_plus(w), h_minus(w)};
}

InvarianceResult invariance_terms(const Form& w) {
  require_complex(w, "invariance_terms");
  const Form dp = del(w);
  const Form dm = delbar(w);
  const Form hp = h_plus(w);
  const Form hm = h_minus(w);

  InvarianceResult r;
  r.terms.emplace_back("hplus_del", h_plus(dp));
  r.terms.emplace_back("del_hplus", del(hp));
  r.terms.emplace_back("hminus_delbar", h_minus(dm));
  r.terms.emplace_back("delbar_hminus", delbar(hm));
  r.terms.emplace_back("hminus_del", h_minus(dp));
  r.terms.emplace_back("del_hminus", del(hm));
  r.terms.emplace_back("hplus_delbar", h_plus(dm));
  r.terms.emplace_back("delbar_hplus", delbar(hp));

  Form sum = Form::zero(w.mode(), w.dim(), w.base(), w.degree());
  for (const auto& [name, f] : r.terms) sum = sum + f;
  r.sum = std::move(sum);
  r.expected = w - eval_at_base(w);
  r.holds = (r.sum == r.expected);
  return r;
}

SubcomplexReport subcomplex_check(const Form& w) {
  require_complex(w, "subcomplex_check");
  SubcomplexReport rep;
  auto bd = w.pure_bidegree();
  if (!bd) {
    rep.failed_hypothesis = "form has mixed bidegree";
    return rep;
  }
  auto [p, q] = *bd;
  if (p > 0 && q > 0) {
    rep.failed_hypothesis = "form is not of pure (p,0) or (0,q) bidegree";
    return rep;
  }
  // Prefer whichever side's hypothesis actually holds; 0-forms may go either
  // way and default to the holomorphic side.
  const bool try_holo = q == 0;
  if (try_holo && delbar(w).is_zero()) {
    rep.holomorphic_side = true;
  } else if (p == 0 && del(w).is_zero()) {
    rep.holomorphic_side = false;
  } else if (try_holo && p == 0) {
    rep.failed_hypothesis = "neither del(form) nor delbar(form) vanishes";
    return rep;
  } else {
    rep.failed_hypothesis = try_holo ? "delbar(form) != 0" : "del(form) != 0";
    return rep;
  }
  rep.precondition_ok = true;
  if (rep.holomorphic_side) {
    rep.identity_holds = h_plus(del(w)) + del(h_plus(w)) == w - eval_at_base(w);
    rep.complementary_h_vanishes = h_minus(w).is_zero();
    rep.mixed_derivative_vanishes = delbar(h_plus(w)).is_zero();
  } else {
    rep.identity_holds = h_minus(delbar(w)) + delbar(h_minus(w)) == w - eval_at_base(w);
    rep.complementary_h_vanishes = h_plus(w).is_zero();
    rep.mixed_derivative_vanishes = del(h_minus(w)).is_zero();
  }
  return rep;
}

Form realify(const Form& w) {
  require_complex(w, "realify");
  const int n = w.dim();
  const int m = 2 * n;
  std::vector<GaussRat> tbase;
  tbase.reserve(m);
  for (const auto& z : w.base()) {
    tbase.emplace_back(z.re);
    tbase.emplace_back(z.im);
  }
  const GaussRat i = GaussRat::unit_i();
  std::vector<Poly> var_images;
  std::vector<Form> diff_images;
  var_images.reserve(2 * n);
  diff_images.reserve(2 * n);
  // v^mu = u_x + i u_y over the interleaved real slots
  for (int mu = 0; mu < n; ++mu) {
    Poly v = Poly::variable(Mode::Real, m, 2 * mu);
    v += Poly::variable(Mode::Real, m, 2 * mu + 1).scaled(i);
    var_images.push_back(std::move(v));
  }
  for (int mu = 0; mu < n; ++mu) {
    Poly vb = Poly::variable(Mode::Real, m, 2 * mu);
    vb -= Poly::variable(Mode::Real, m, 2 * mu + 1).scaled(i);
    var_images.push_back(std::move(vb));
  }
  for (int mu = 0; mu < n; ++mu) {
    Form dz = const_one_form(Mode::Real, m, tbase, 2 * mu, GaussRat(1));
    dz = dz + const_one_form(Mode::Real, m, tbase, 2 * mu + 1, i);
    diff_images.push_back(std::move(dz));
  }
  for (int mu = 0; mu < n; ++mu) {
    Form dzb = const_one_form(Mode::Real, m, tbase, 2 * mu, GaussRat(1));
    dzb = dzb - const_one_form(Mode::Real, m, tbase, 2 * mu + 1, i);
    diff_images.push_back(std::move(dzb));
  }
  return map_form(w, Mode::Real, m, tbase, var_images, diff_images);
}

Form complexify(const Form& w) {
  if (w.mode() != Mode::Real) throw DomainError("complexify requires real mode");
  if (w.dim() % 2 != 0) throw DomainError("complexify requires even real dimension");
  const int n = w.dim() / 2;
  std::vector<GaussRat> tbase;
  tbase.reserve(n);
  for (int mu = 0; mu < n; ++mu) {
    tbase.emplace_back(w.base()[2 * mu].re, w.base()[2 * mu + 1].re);
  }
  const GaussRat half(Rat(Int(1), Int(2)));
  const GaussRat minus_half_i(Rat(0), Rat(Int(-1), Int(2)));
  std::vector<Poly> var_images;
  std::vector<Form> diff_images;
  var_images.reserve(2 * n);
  diff_images.reserve(2 * n);
  for (int mu = 0; mu < n; ++mu) {
    // u_x = (v + vb)/2
    Poly ux = Poly::variable(Mode::Complex, n, mu) + Poly::variable(Mode::Complex, n, n + mu);
    var_images.push_back(ux.scaled(half));
    // u_y = -i (v - vb)/2
    Poly uy = Poly::variable(Mode::Complex, n, mu) - Poly::variable(Mode::Complex, n, n + mu);
    var_images.push_back(uy.scaled(minus_half_i));
  }
  for (int mu = 0; mu < n; ++mu) {
    Form dx = const_one_form(Mode::Complex, n, tbase, mu, half);
    dx = dx + const_one_form(Mode::Complex, n, tbase, n + mu, half);
    Form dy = const_one_form(Mode::Complex, n, tbase, mu, minus_half_i);
    dy = dy - const_one_form(Mode::Complex, n, tbase, n + mu, minus_half_i);
    diff_images.push_back(std::move(dx));
    diff_images.push_back(std::move(dy));
  }
  return map_form(w, Mode::Complex, n, tbase, var_images, diff_images);
}

}  // namespace excalc
