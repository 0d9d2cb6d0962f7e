#include "excalc/form.hpp"

#include <algorithm>
#include <utility>

namespace excalc {

//------------------------------------------------------------------------------
// RadialField
//------------------------------------------------------------------------------

RadialField RadialField::full(Mode mode, std::vector<GaussRat> base) {
  return {mode, std::move(base), ContractPart::Full};
}

RadialField RadialField::holomorphic(std::vector<GaussRat> base) {
  return {Mode::Complex, std::move(base), ContractPart::Holomorphic};
}

RadialField RadialField::antiholomorphic(std::vector<GaussRat> base) {
  return {Mode::Complex, std::move(base), ContractPart::Antiholomorphic};
}

namespace {

void check_same_space(const Form& a, const Form& b) {
  if (a.mode() != b.mode() || a.dim() != b.dim()) throw DomainError("form mode/dimension mismatch");
  if (a.base() != b.base()) throw DomainError("form base point mismatch");
}

}  // namespace

//------------------------------------------------------------------------------
// Form
//------------------------------------------------------------------------------

Form Form::zero(Mode mode, int dim, std::vector<GaussRat> base, int degree) {
  if (dim < 1) throw DomainError("dimension must be at least 1");
  if (static_cast<int>(base.size()) != dim) throw DomainError("base point arity mismatch");
  if (mode == Mode::Real) {
    for (const auto& b : base) {
      if (!b.is_real()) throw DomainError("real-mode base point must have real entries");
    }
  }
  // nominal degree above the slot count is allowed; such forms are zero
  if (degree < 0) throw DomainError("negative degree");
  Form f;
  f.mode_ = mode;
  f.dim_ = dim;
  f.base_ = std::move(base);
  f.degree_ = degree;
  return f;
}

std::size_t Form::monomial_count() const {
  std::size_t n = 0;
  for (const auto& [t, p] : terms_) n += p.monomials().size();
  return n;
}

void Form::add_term(const BasisTerm& t, const Poly& coeff) {
  if (coeff.mode() != mode_ || coeff.dim() != dim_)
    throw DomainError("coefficient mode/dimension mismatch");
  if (t.degree() != degree_) throw DomainError("mixed-degree term rejected");
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (t.labels[i] < 0 || t.labels[i] >= slots()) throw DomainError("basis label out of range");
    if (i > 0 && t.labels[i - 1] >= t.labels[i])
      throw DomainError("basis labels must increase strictly");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form out = Form::zero(mode_, dim_, base_, degree_);
  for (const auto& [t, p] : terms_) out.terms_.emplace(t, -p);
  return out;
}

Form operator+(const Form& a, const Form& b) {
  check_same_space(a, b);
  if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_)
    throw DomainError("cannot add forms of different degrees");
  Form out = a.is_zero() ? Form::zero(b.mode_, b.dim_, b.base_, b.degree_) : a;
  for (const auto& [t, p] : b.terms_) out.add_term(t, p);
  return out;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form Form::scaled(const GaussRat& c) const {
  Form out = Form::zero(mode_, dim_, base_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [t, p] : terms_) out.terms_.emplace(t, p.scaled(c));
  return out;
}

std::pair<int, int> Form::term_bidegree(const BasisTerm& t) const {
  if (mode_ != Mode::Complex) throw DomainError("bidegree requires complex mode");
  int p = 0;
  for (Label l : t.labels) {
    if (l < dim_) ++p;
  }
  return {p, t.degree() - p};
}

std::optional<std::pair<int, int>> Form::pure_bidegree() const {
  if (mode_ != Mode::Complex) throw DomainError("bidegree requires complex mode");
  if (terms_.empty()) return std::make_pair(degree_, 0);
  auto bd = term_bidegree(terms_.begin()->first);
  for (const auto& [t, p] : terms_) {
    if (term_bidegree(t) != bd) return std::nullopt;
  }
  return bd;
}

bool operator==(const Form& a, const Form& b) {
  // nominal degree intentionally ignored: every zero form is one zero
  return a.mode_ == b.mode_ && a.dim_ == b.dim_ && a.base_ == b.base_ && a.terms_ == b.terms_;
}

//------------------------------------------------------------------------------
// Operators
//------------------------------------------------------------------------------

Form wedge(const Form& a, const Form& b) {
  check_same_space(a, b);
  Form out = Form::zero(a.mode(), a.dim(), a.base(), a.degree() + b.degree());
  for (const auto& [ta, pa] : a.terms()) {
    for (const auto& [tb, pb] : b.terms()) {
      auto [sign, merged] = wedge_merge(ta, tb);
      if (sign == 0) continue;
      Poly coeff = pa * pb;
      if (sign < 0) coeff = -coeff;
      out.add_term(merged, coeff);
    }
  }
  return out;
}

Form ext_d(const Form& w) {
  Form out = Form::zero(w.mode(), w.dim(), w.base(), w.degree() + 1);
  for (const auto& [t, p] : w.terms()) {
    for (Label s = 0; s < w.slots(); ++s) {
      Poly dp = p.partial(s);
      if (dp.is_zero()) continue;
      auto [sign, merged] = wedge_merge(BasisTerm({s}), t);
      if (sign == 0) continue;
      out.add_term(merged, sign < 0 ? -dp : dp);
    }
  }
  return out;
}

Form interior(const RadialField& k, const Form& w) {
  if (k.mode != w.mode()) throw DomainError("radial field mode mismatch");
  if (k.base != w.base()) throw DomainError("radial field base point mismatch");
  if (k.part != ContractPart::Full && k.mode != Mode::Complex)
    throw DomainError("split radial field requires complex mode");
  Form out = Form::zero(w.mode(), w.dim(), w.base(), w.degree() > 0 ? w.degree() - 1 : 0);
  if (w.degree() == 0) return out;
  for (const auto& [t, p] : w.terms()) {
    for (std::size_t j = 0; j < t.labels.size(); ++j) {
      Label l = t.labels[j];
      if (!part_contains(k.part, l, w.dim())) continue;
      Poly coeff = Poly::variable(w.mode(), w.dim(), l) * p;
      if (j % 2 == 1) coeff = -coeff;
      out.add_term(erase_index(t, j), coeff);
    }
  }
  return out;
}

Form eval_at_base(const Form& w) {
  Form out = Form::zero(w.mode(), w.dim(), w.base(), w.degree());
  if (w.degree() != 0) return out;
  auto it = w.terms().find(BasisTerm{});
  if (it == w.terms().end()) return out;
  out.add_term(BasisTerm{}, Poly::constant(w.mode(), w.dim(), it->second.constant_term()));
  return out;
}

Form evaluate_form(const Form& w, std::span<const GaussRat> point) {
  auto u = shifted_slot_values(w.mode(), w.dim(), point, w.base());
  Form out = Form::zero(w.mode(), w.dim(), w.base(), w.degree());
  for (const auto& [t, p] : w.terms()) {
    out.add_term(t, Poly::constant(w.mode(), w.dim(), p.eval_shifted(u)));
  }
  return out;
}

Form conj_form(const Form& w) {
  if (w.mode() != Mode::Complex) throw DomainError("conjugation requires complex mode");
  const int n = w.dim();
  Form out = Form::zero(Mode::Complex, n, w.base(), w.degree());
  for (const auto& [t, p] : w.terms()) {
    std::vector<Label> mapped;
    mapped.reserve(t.labels.size());
    for (Label l : t.labels) mapped.push_back(l < n ? l + n : l - n);
    auto [sign, sorted] = sort_labels(std::move(mapped));
    Poly coeff = conj_poly(p);
    if (sign < 0) coeff = -coeff;
    out.add_term(sorted, coeff);
  }
  return out;
}

}  // namespace excalc
