#pragma once

#include <string>
#include <utility>
#include <vector>

#include "excalc/form.hpp"

namespace excalc {

/// Dolbeault operators: del maps (p,q) to (p+1,q), delbar to (p,q+1), and
/// del + delbar is the exterior derivative. Complex mode only.
Form del(const Form& w);
Form delbar(const Form& w);

/// Split homotopy operators: h_plus lowers p, h_minus lowers q, both with
/// the total degree in the integral weight. Complex mode only.
Form h_plus(const Form& w);
Form h_minus(const Form& w);

/// The full operator next to its two halves; total == plus + minus.
struct HomotopySplit {
  Form total;
  Form plus;
  Form minus;
};
HomotopySplit split_check(const Form& w);

/// The eight operator compositions whose sum realizes I - s* on complex
/// forms, in fixed order. Generic forms need all eight; only special
/// bidegrees collapse to a two-term identity.
struct InvarianceResult {
  std::vector<std::pair<std::string, Form>> terms;
  Form sum;
  Form expected;  ///< w - s* w
  bool holds = false;
};
InvarianceResult invariance_terms(const Form& w);

/// Checks the boundary two-term identity on a pure-bidegree form:
/// (p,0) with delbar w = 0 pairs del with h_plus; (0,q) with del w = 0
/// pairs delbar with h_minus. A failed hypothesis is reported, not thrown.
struct SubcomplexReport {
  bool precondition_ok = false;
  std::string failed_hypothesis;
  bool holomorphic_side = true;
  bool identity_holds = false;
  /// The opposite-half homotopy annihilates the form (H∓ w == 0).
  bool complementary_h_vanishes = false;
  /// The opposite derivative of the same-side homotopy vanishes.
  bool mixed_derivative_vanishes = false;
};
SubcomplexReport subcomplex_check(const Form& w);

/// Coordinate conversions between a complex n-dimensional form and a real
/// 2n-dimensional one under z^mu = x^(2mu-1) + i x^(2mu), dz = dx + i dy.
/// Round trips are exact; the exterior derivative and the homotopy
/// operators commute with the conversion.
Form realify(const Form& w);
Form complexify(const Form& w);

}  // namespace excalc
