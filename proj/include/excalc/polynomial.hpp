#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "excalc/basis.hpp"
#include "excalc/errors.hpp"
#include "excalc/rational.hpp"

namespace excalc {

enum class Mode { Real, Complex };

/// Number of formal coordinate slots: n in real mode, 2n in complex mode
/// (the z block, then the z-bar block).
inline int slot_count(Mode mode, int dim) { return mode == Mode::Complex ? 2 * dim : dim; }

/// Exponent vector over the shifted coordinates; length == slot_count.
using Exponents = std::vector<int>;

/// Exact multivariate polynomial in base-point-shifted coordinates:
/// u^i = x^i - x0^i in real mode, v^mu = z^mu - z0^mu and
/// vb^mu = conj(z^mu) - conj(z0^mu) in complex mode. Canonical form: no
/// zero coefficients are stored, so equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(Mode mode, int dim) : mode_(mode), dim_(dim) {}

  static Poly constant(Mode mode, int dim, GaussRat c);
  /// The shifted coordinate function u_slot itself.
  static Poly variable(Mode mode, int dim, Label slot);

  Mode mode() const { return mode_; }
  int dim() const { return dim_; }
  int slots() const { return slot_count(mode_, dim_); }

  const std::map<Exponents, GaussRat>& monomials() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRat constant_term() const;
  /// Maximum total degree over stored monomials; 0 for the zero polynomial.
  int total_degree() const;

  /// Accumulates a monomial, dropping the entry if the sum cancels.
  void add_monomial(const Exponents& e, const GaussRat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GaussRat& c) const;

  /// Formal partial derivative in one shifted coordinate.
  Poly partial(Label slot) const;

  /// Splits into homogeneous components by total degree, ascending.
  /// The parts sum back to the polynomial; empty iff zero.
  std::vector<std::pair<int, Poly>> homogeneous_split() const;

  GaussRat eval_shifted(std::span<const GaussRat> u) const;
  std::complex<double> eval_shifted(std::span<const std::complex<double>> u) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Mode mode_ = Mode::Real;
  int dim_ = 0;
  std::map<Exponents, GaussRat> terms_;

  void check_compatible(const Poly& o) const;
};

Poly poly_pow(const Poly& p, int e);

/// Rewrites every source variable by its image polynomial (all images over
/// the target space). The workhorse behind rebase and the real/complex
/// coordinate conversions.
Poly substitute(const Poly& p, Mode target_mode, int target_dim, const std::vector<Poly>& images);

/// Conjugate polynomial (complex mode): conjugated coefficients with the
/// v and vb exponent blocks swapped.
Poly conj_poly(const Poly& p);

/// Slot values of the shifted coordinates for a user-facing point. Points
/// and bases carry dim entries; in complex mode the antiholomorphic block
/// is filled by conjugation.
std::vector<GaussRat> shifted_slot_values(Mode mode, int dim, std::span<const GaussRat> point,
                                          std::span<const GaussRat> base);

/// Re-expands a polynomial written in coordinates shifted to `from` into
/// coordinates shifted to `to`; the polynomial function is unchanged.
Poly rebase(const Poly& p, std::span<const GaussRat> from, std::span<const GaussRat> to);

/// Exact value at a point, given the base the polynomial is shifted to.
GaussRat evaluate(const Poly& p, std::span<const GaussRat> point, std::span<const GaussRat> base);

}  // namespace excalc
