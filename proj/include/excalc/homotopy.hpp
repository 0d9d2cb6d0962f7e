#pragma once

#include <optional>
#include <utility>

#include "excalc/form.hpp"

namespace excalc {

/// The degree-lowering homotopy operator along the straight-line
/// contraction onto the base point. Exact per homogeneous component: a
/// coefficient monomial of total degree m in a k-form contributes
/// 1/(m+k) times its radial contraction. 0-forms map to zero.
Form homotopy_H(const Form& w);

/// Same integral with only one half of the radial field contracted;
/// the complex-mode split operators are the Holomorphic/Antiholomorphic
/// instances. Full reproduces homotopy_H.
Form homotopy_part(const Form& w, ContractPart part);

/// The direct-sum split of a form at its base point.
struct DecompResult {
  Form exact;      ///< d(H w)
  Form antiexact;  ///< H(d w)
  Form constant;   ///< value at the base point; nonzero only for 0-forms
};

/// Splits w into exact + antiexact + constant parts; the three re-sum to w
/// exactly.
DecompResult decompose(const Form& w);

/// Antiexactness test: the radial contraction vanishes identically and the
/// form vanishes at the base point (for 0-forms, just the latter). The
/// zero form is antiexact at every degree.
bool is_antiexact(const Form& w);

/// Raised by potential() when the input is not closed; carries d(input).
struct NotClosedError : PreconditionError {
  Form residual;
  explicit NotClosedError(Form r)
      : PreconditionError("form is not closed"), residual(std::move(r)) {}
};

/// A primitive for a closed form of positive degree: returns H w, whose
/// exterior derivative reproduces w. Throws NotClosedError with the
/// nonzero residual d w otherwise; degree 0 input is a precondition error.
Form potential(const Form& w);

/// The oscillator operator H(d w) - d(H w).
Form oscillator_apply(const Form& w);

/// Eigen-classification of a form under the oscillator operator. Only the
/// eigenvalues -1 (exact side) and +1 (antiexact side) occur; nonzero
/// constant 0-forms are not eigenvectors, and the zero form gets its own
/// verdict. For non-eigenvectors the witness is the residual H̄w - λw for
/// whichever λ in {−1,+1} leaves fewer monomials (ties prefer +1).
struct OscillatorVerdict {
  enum class Kind { Zero, Eigenvector, NotEigenvector };
  Kind kind = Kind::Zero;
  int lambda = 0;  ///< ±1; for NotEigenvector the witness' λ
  std::optional<Form> witness;
};

OscillatorVerdict oscillator_classify(const Form& w);

}  // namespace excalc
