#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "excalc/form.hpp"

namespace excalc {

/// Which slot block random monomials and basis labels may use.
enum class SlotRange { All, Holomorphic, Antiholomorphic };

/// Deterministic generator for random rationals, polynomials and forms.
/// Avoids the standard distributions so a seed pins the byte-exact stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform-ish integer in [lo, hi], inclusive.
  int range(int lo, int hi);

  Rat rat(int num_mag = 9, int den_max = 4);
  Rat nonzero_rat(int num_mag = 9, int den_max = 4);
  GaussRat scalar(bool complex_ok);
  GaussRat nonzero_scalar(bool complex_ok);

  std::vector<GaussRat> base_point(Mode mode, int dim);
  std::vector<GaussRat> sample_point(Mode mode, int dim);

  Poly poly(Mode mode, int dim, int max_deg, int max_terms, bool complex_coeffs,
            SlotRange slots = SlotRange::All);
  Poly nonzero_poly(Mode mode, int dim, int max_deg, int max_terms, bool complex_coeffs,
                    SlotRange slots = SlotRange::All);

  Form form(Mode mode, int dim, const std::vector<GaussRat>& base, int degree, int max_deg,
            int max_terms, SlotRange slots = SlotRange::All);
  Form nonzero_form(Mode mode, int dim, const std::vector<GaussRat>& base, int degree, int max_deg,
                    int max_terms, SlotRange slots = SlotRange::All);

 private:
  std::mt19937_64 eng_;
};

}  // namespace excalc
