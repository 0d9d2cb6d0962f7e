#include "excalc/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace excalc {

Poly Poly::constant(Mode mode, int dim, GaussRat c) {
  Poly p(mode, dim);
  if (!c.is_zero()) p.terms_.emplace(Exponents(slot_count(mode, dim), 0), std::move(c));
  return p;
}

Poly Poly::variable(Mode mode, int dim, Label slot) {
  if (slot < 0 || slot >= slot_count(mode, dim)) throw DomainError("variable slot out of range");
  Poly p(mode, dim);
  Exponents e(slot_count(mode, dim), 0);
  e[slot] = 1;
  p.terms_.emplace(std::move(e), GaussRat(1));
  return p;
}

GaussRat Poly::constant_term() const {
  auto it = terms_.find(Exponents(slots(), 0));
  return it == terms_.end() ? GaussRat(0) : it->second;
}

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

void Poly::add_monomial(const Exponents& e, const GaussRat& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != slots()) throw DomainError("exponent arity mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (mode_ != o.mode_ || dim_ != o.dim_) throw DomainError("polynomial mode/dimension mismatch");
}

Poly Poly::operator-() const {
  Poly out(mode_, dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_monomial(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_monomial(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.mode_, a.dim_);
  Exponents e(a.slots());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_monomial(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const GaussRat& c) const {
  Poly out(mode_, dim_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

Poly Poly::partial(Label slot) const {
  if (slot < 0 || slot >= slots()) throw DomainError("derivative direction out of range");
  Poly out(mode_, dim_);
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    --d[slot];
    out.add_monomial(d, c * GaussRat(e[slot]));
  }
  return out;
}

std::vector<std::pair<int, Poly>> Poly::homogeneous_split() const {
  std::map<int, Poly> buckets;
  for (const auto& [e, c] : terms_) {
    int deg = std::accumulate(e.begin(), e.end(), 0);
    auto [it, inserted] = buckets.try_emplace(deg, Poly(mode_, dim_));
    it->second.terms_.emplace(e, c);
  }
  std::vector<std::pair<int, Poly>> out;
  out.reserve(buckets.size());
  for (auto& [deg, part] : buckets) out.emplace_back(deg, std::move(part));
  return out;
}

GaussRat Poly::eval_shifted(std::span<const GaussRat> u) const {
  if (static_cast<int>(u.size()) != slots()) throw DomainError("evaluation arity mismatch");
  GaussRat acc(0);
  for (const auto& [e, c] : terms_) {
    GaussRat term = c;
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * u[i];
    }
    acc += term;
  }
  return acc;
}

std::complex<double> Poly::eval_shifted(std::span<const std::complex<double>> u) const {
  if (static_cast<int>(u.size()) != slots()) throw DomainError("evaluation arity mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= u[i];
    }
    acc += term;
  }
  return acc;
}

Poly poly_pow(const Poly& p, int e) {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly out = Poly::constant(p.mode(), p.dim(), GaussRat(1));
  for (int k = 0; k < e; ++k) out = out * p;
  return out;
}

Poly substitute(const Poly& p, Mode target_mode, int target_dim, const std::vector<Poly>& images) {
  if (static_cast<int>(images.size()) != p.slots())
    throw DomainError("substitution needs one image per source slot");
  // memoized powers per slot
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t slot, int e) -> const Poly& {
    auto& cache = powers[slot];
    if (cache.empty()) cache.push_back(Poly::constant(target_mode, target_dim, GaussRat(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[slot]);
    return cache[e];
  };
  Poly out(target_mode, target_dim);
  for (const auto& [e, c] : p.monomials()) {
    Poly term = Poly::constant(target_mode, target_dim, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Poly conj_poly(const Poly& p) {
  if (p.mode() != Mode::Complex) throw DomainError("conjugation requires complex mode");
  const int n = p.dim();
  Poly out(Mode::Complex, n);
  for (const auto& [e, c] : p.monomials()) {
    Exponents swapped(e.size());
    for (int mu = 0; mu < n; ++mu) {
      swapped[mu] = e[n + mu];
      swapped[n + mu] = e[mu];
    }
    out.add_monomial(swapped, c.conj());
  }
  return out;
}

std::vector<GaussRat> shifted_slot_values(Mode mode, int dim, std::span<const GaussRat> point,
                                          std::span<const GaussRat> base) {
  if (static_cast<int>(point.size()) != dim || static_cast<int>(base.size()) != dim)
    throw DomainError("point arity mismatch");
  std::vector<GaussRat> u;
  u.reserve(slot_count(mode, dim));
  for (int i = 0; i < dim; ++i) u.push_back(point[i] - base[i]);
  if (mode == Mode::Complex) {
    for (int i = 0; i < dim; ++i) u.push_back(point[i].conj() - base[i].conj());
  }
  return u;
}

Poly rebase(const Poly& p, std::span<const GaussRat> from, std::span<const GaussRat> to) {
  const int dim = p.dim();
  if (static_cast<int>(from.size()) != dim || static_cast<int>(to.size()) != dim)
    throw DomainError("base point arity mismatch");
  // u_from = u_to + (to - from), per slot (conjugated on the bar block)
  std::vector<Poly> images;
  images.reserve(p.slots());
  for (int i = 0; i < dim; ++i) {
    Poly img = Poly::variable(p.mode(), dim, i);
    img += Poly::constant(p.mode(), dim, to[i] - from[i]);
    images.push_back(std::move(img));
  }
  if (p.mode() == Mode::Complex) {
    for (int i = 0; i < dim; ++i) {
      Poly img = Poly::variable(Mode::Complex, dim, dim + i);
      img += Poly::constant(Mode::Complex, dim, to[i].conj() - from[i].conj());
      images.push_back(std::move(img));
    }
  }
  return substitute(p, p.mode(), dim, images);
}

GaussRat evaluate(const Poly& p, std::span<const GaussRat> point, std::span<const GaussRat> base) {
  auto u = shifted_slot_values(p.mode(), p.dim(), point, base);
  return p.eval_shifted(u);
}

}  // namespace excalc
