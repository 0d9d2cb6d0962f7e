#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "excalc/basis.hpp"
#include "excalc/polynomial.hpp"

namespace excalc {

/// Which half of the radial field takes part in a contraction. Real mode
/// admits only Full; in complex mode Holomorphic is (z-z0)^mu d/dz^mu and
/// Antiholomorphic its conjugate.
enum class ContractPart { Full, Holomorphic, Antiholomorphic };

inline bool part_contains(ContractPart part, Label slot, int dim) {
  switch (part) {
    case ContractPart::Full: return true;
    case ContractPart::Holomorphic: return slot < dim;
    case ContractPart::Antiholomorphic: return slot >= dim;
  }
  return false;
}

/// The radial vector field (x - x0)^i d_i anchored at a base point, or one
/// of its holomorphic / antiholomorphic halves in complex mode.
struct RadialField {
  Mode mode = Mode::Real;
  std::vector<GaussRat> base;
  ContractPart part = ContractPart::Full;

  static RadialField full(Mode mode, std::vector<GaussRat> base);
  static RadialField holomorphic(std::vector<GaussRat> base);
  static RadialField antiholomorphic(std::vector<GaussRat> base);
};

/// Degree-homogeneous differential form with exact polynomial coefficients,
/// anchored at a base point. The base point is part of the form's identity:
/// binary operations on forms with different bases are rejected. A form
/// with no stored terms is the zero form; it carries a nominal degree for
/// bookkeeping but compares equal to the zero form of every degree.
class Form {
 public:
  Form() = default;

  static Form zero(Mode mode, int dim, std::vector<GaussRat> base, int degree);

  Mode mode() const { return mode_; }
  int dim() const { return dim_; }
  int slots() const { return slot_count(mode_, dim_); }
  const std::vector<GaussRat>& base() const { return base_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisTerm, Poly>& terms() const { return terms_; }
  std::size_t monomial_count() const;

  /// Accumulates a coefficient onto a basis term. The term's degree must
  /// match the form's; mixed-degree input is rejected here.
  void add_term(const BasisTerm& t, const Poly& coeff);

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  Form scaled(const GaussRat& c) const;

  /// Bidegree (p, q) of one basis term (complex mode).
  std::pair<int, int> term_bidegree(const BasisTerm& t) const;
  /// The common bidegree of all terms, if they agree (complex mode).
  /// The zero form reports its nominal degree as (degree, 0).
  std::optional<std::pair<int, int>> pure_bidegree() const;

  friend bool operator==(const Form& a, const Form& b);

 private:
  Mode mode_ = Mode::Real;
  int dim_ = 0;
  std::vector<GaussRat> base_;
  int degree_ = 0;
  std::map<BasisTerm, Poly> terms_;
};

Form wedge(const Form& a, const Form& b);

/// Exterior derivative. In complex mode this sums the Dolbeault pieces.
Form ext_d(const Form& w);

/// Interior product with the radial field (or one of its halves).
/// Contraction of a 0-form is the zero form.
Form interior(const RadialField& k, const Form& w);

/// Pullback along the constant map to the base point: the value at the
/// base for 0-forms, zero for positive degree.
Form eval_at_base(const Form& w);

/// The form with every coefficient evaluated at a point (constant form).
Form evaluate_form(const Form& w, std::span<const GaussRat> point);

/// Complex conjugate of a complex-mode form.
Form conj_form(const Form& w);

}  // namespace excalc
