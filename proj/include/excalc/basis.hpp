#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace excalc {

/// 0-based coordinate direction. Complex mode lays out the n holomorphic
/// slots first, followed by the n antiholomorphic ones, so the plain
/// integer order realizes the canonical label order.
using Label = int;

/// Normalized wedge monomial of coordinate differentials: a strictly
/// increasing label list. The empty list is the 0-form basis.
struct BasisTerm {
  std::vector<Label> labels;

  BasisTerm() = default;
  explicit BasisTerm(std::vector<Label> l) : labels(std::move(l)) {}

  int degree() const { return static_cast<int>(labels.size()); }
  bool empty() const { return labels.empty(); }

  auto operator<=>(const BasisTerm&) const = default;
};

/// Result of a sign-tracking basis operation. sign == 0 means the term was
/// annihilated (repeated label on merge, absent direction on contraction);
/// the term member is meaningless in that case.
struct SignedTerm {
  int sign = 0;
  BasisTerm term;
};

/// Sorted union of two wedge monomials with the parity of the merging
/// permutation; sign 0 iff the terms share a label.
SignedTerm wedge_merge(const BasisTerm& a, const BasisTerm& b);

/// Contraction of a single direction into a wedge monomial: removes the
/// label at position j with sign (-1)^(j-1), or annihilates when absent.
SignedTerm contract_basis(Label direction, const BasisTerm& t);

/// Normalizes an arbitrary label list, counting the permutation parity.
SignedTerm sort_labels(std::vector<Label> raw);

/// Copy of t with the label at position j removed.
BasisTerm erase_index(const BasisTerm& t, std::size_t j);

}  // namespace excalc
