#include "excalc/homotopy.hpp"

namespace excalc {

Form homotopy_part(const Form& w, ContractPart part) {
  if (part != ContractPart::Full && w.mode() != Mode::Complex)
    throw DomainError("split homotopy operator requires complex mode");
  const int k = w.degree();
  Form out = Form::zero(w.mode(), w.dim(), w.base(), k > 0 ? k - 1 : 0);
  if (k == 0 || w.is_zero()) return out;
  for (const auto& [t, p] : w.terms()) {
    for (const auto& [m, component] : p.homogeneous_split()) {
      // straight-line pullback scales a degree-m coefficient by t^m, so the
      // weight t^(k-1) integrates to 1/(m+k)
      const GaussRat factor(Rat(Int(1), Int(m + k)));
      for (std::size_t j = 0; j < t.labels.size(); ++j) {
        Label l = t.labels[j];
        if (!part_contains(part, l, w.dim())) continue;
        Poly coeff = (Poly::variable(w.mode(), w.dim(), l) * component).scaled(factor);
        if (j % 2 == 1) coeff = -coeff;
        out.add_term(erase_index(t, j), coeff);
      }
    }
  }
  return out;
}

Form homotopy_H(const Form& w) { return homotopy_part(w, ContractPart::Full); }

DecompResult decompose(const Form& w) {
  return {ext_d(homotopy_H(w)), homotopy_H(ext_d(w)), eval_at_base(w)};
}

bool is_antiexact(const Form& w) {
  if (w.is_zero()) return true;
  if (w.degree() == 0) return eval_at_base(w).is_zero();
  for (const auto& [t, p] : w.terms()) {
    if (!p.constant_term().is_zero()) return false;  // nonzero value at the base
  }
  return interior(RadialField::full(w.mode(), w.base()), w).is_zero();
}

Form potential(const Form& w) {
  if (w.is_zero()) return Form::zero(w.mode(), w.dim(), w.base(), w.degree() > 0 ? w.degree() - 1 : 0);
  if (w.degree() < 1) throw PreconditionError("potential requires degree >= 1");
  Form residual = ext_d(w);
  if (!residual.is_zero()) throw NotClosedError(std::move(residual));
  return homotopy_H(w);
}

Form oscillator_apply(const Form& w) { return homotopy_H(ext_d(w)) - ext_d(homotopy_H(w)); }

OscillatorVerdict oscillator_classify(const Form& w) {
  if (w.is_zero()) return {OscillatorVerdict::Kind::Zero, 0, std::nullopt};
  Form image = oscillator_apply(w);
  if (image == w) return {OscillatorVerdict::Kind::Eigenvector, 1, std::nullopt};
  if (image == -w) return {OscillatorVerdict::Kind::Eigenvector, -1, std::nullopt};
  Form residual_plus = image - w;
  Form residual_minus = image + w;
  if (residual_minus.monomial_count() < residual_plus.monomial_count())
    return {OscillatorVerdict::Kind::NotEigenvector, -1, std::move(residual_minus)};
  return {OscillatorVerdict::Kind::NotEigenvector, 1, std::move(residual_plus)};
}

}  // namespace excalc
