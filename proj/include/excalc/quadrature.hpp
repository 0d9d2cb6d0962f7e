#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "excalc/form.hpp"

namespace excalc {

/// The quadrature rule cannot integrate the requested integrand exactly.
struct UnderResolvedError : DomainError {
  using DomainError::DomainError;
};

/// Gauss-Legendre rule on [0,1]: exact for polynomial integrands of degree
/// <= 2*order - 1, up to rounding.
class QuadratureRule {
 public:
  explicit QuadratureRule(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Minimum rule order that resolves the homotopy integrand of w exactly.
int required_order(const Form& w);

/// Floating-point transcription of the homotopy integral at one point:
/// integrates the radial contraction of w pulled along the line to the
/// base, by quadrature, returning the (k-1)-form coefficients at `point`.
/// Throws UnderResolvedError if the rule order is too small.
std::map<BasisTerm, std::complex<double>> quad_H_at(const Form& w,
                                                    std::span<const GaussRat> point,
                                                    const QuadratureRule& rule,
                                                    ContractPart part = ContractPart::Full);

/// Central finite-difference check of the formal partials behind ext_d
/// (real mode): the largest deviation between difference quotients and the
/// evaluated symbolic partials over all coefficients and directions.
double fd_d_at(const Form& w, std::span<const GaussRat> point, double step);

}  // namespace excalc
