#include "excalc/randgen.hpp"

#include <algorithm>

#include "excalc/errors.hpp"

namespace excalc {

int Rng::range(int lo, int hi) {
  if (hi < lo) throw DomainError("empty range");
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Rng::rat(int num_mag, int den_max) {
  return Rat(Int(range(-num_mag, num_mag)), Int(range(1, den_max)));
}

Rat Rng::nonzero_rat(int num_mag, int den_max) {
  for (;;) {
    Rat r = rat(num_mag, den_max);
    if (r != 0) return r;
  }
}

GaussRat Rng::scalar(bool complex_ok) {
  if (!complex_ok || range(0, 1) == 0) return GaussRat(rat());
  return GaussRat(rat(), rat());
}

GaussRat Rng::nonzero_scalar(bool complex_ok) {
  for (;;) {
    GaussRat c = scalar(complex_ok);
    if (!c.is_zero()) return c;
  }
}

std::vector<GaussRat> Rng::base_point(Mode mode, int dim) {
  std::vector<GaussRat> base;
  base.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    base.push_back(mode == Mode::Complex ? GaussRat(rat(3, 2), rat(3, 2)) : GaussRat(rat(3, 2)));
  }
  return base;
}

std::vector<GaussRat> Rng::sample_point(Mode mode, int dim) {
  std::vector<GaussRat> pt;
  pt.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    pt.push_back(mode == Mode::Complex ? GaussRat(rat(2, 3), rat(2, 3)) : GaussRat(rat(2, 3)));
  }
  return pt;
}

namespace {

std::pair<int, int> slot_bounds(Mode mode, int dim, SlotRange slots) {
  const int all = slot_count(mode, dim);
  switch (slots) {
    case SlotRange::All: return {0, all};
    case SlotRange::Holomorphic: return {0, dim};
    case SlotRange::Antiholomorphic: return {dim, all};
  }
  return {0, all};
}

}  // namespace

Poly Rng::poly(Mode mode, int dim, int max_deg, int max_terms, bool complex_coeffs,
               SlotRange slots) {
  const auto [lo, hi] = slot_bounds(mode, dim, slots);
  Poly p(mode, dim);
  const int terms = range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(slot_count(mode, dim), 0);
    int budget = range(0, max_deg);
    while (budget > 0) {
      e[range(lo, hi - 1)] += 1;
      --budget;
    }
    p.add_monomial(e, nonzero_scalar(complex_coeffs));
  }
  return p;
}

Poly Rng::nonzero_poly(Mode mode, int dim, int max_deg, int max_terms, bool complex_coeffs,
                       SlotRange slots) {
  for (;;) {
    Poly p = poly(mode, dim, max_deg, std::max(1, max_terms), complex_coeffs, slots);
    if (!p.is_zero()) return p;
  }
}

Form Rng::form(Mode mode, int dim, const std::vector<GaussRat>& base, int degree, int max_deg,
               int max_terms, SlotRange slots) {
  const auto [lo, hi] = slot_bounds(mode, dim, slots);
  Form f = Form::zero(mode, dim, base, degree);
  if (degree > hi - lo) return f;
  const bool complex_coeffs = mode == Mode::Complex;
  const int term_count = range(degree == 0 ? 0 : 1, 2);
  for (int t = 0; t < term_count || (degree == 0 && t == 0); ++t) {
    std::vector<Label> labels;
    for (Label l = lo; l < hi; ++l) labels.push_back(l);
    // random strictly increasing label subset of the requested size
    for (int j = 0; j < degree; ++j) {
      const int pick = range(j, static_cast<int>(labels.size()) - 1);
      std::swap(labels[j], labels[pick]);
    }
    labels.resize(degree);
    std::sort(labels.begin(), labels.end());
    f.add_term(BasisTerm(std::move(labels)), poly(mode, dim, max_deg, max_terms, complex_coeffs, slots));
  }
  return f;
}

Form Rng::nonzero_form(Mode mode, int dim, const std::vector<GaussRat>& base, int degree,
                       int max_deg, int max_terms, SlotRange slots) {
  for (;;) {
    Form f = form(mode, dim, base, degree, max_deg, std::max(1, max_terms), slots);
    if (!f.is_zero()) return f;
  }
}

}  // namespace excalc
