#include "excalc/basis.hpp"

#include <algorithm>
#include <utility>

namespace excalc {

SignedTerm wedge_merge(const BasisTerm& a, const BasisTerm& b) {
  BasisTerm out;
  out.labels.reserve(a.labels.size() + b.labels.size());
  std::size_t i = 0, j = 0;
  long crossings = 0;
  while (i < a.labels.size() && j < b.labels.size()) {
    if (a.labels[i] == b.labels[j]) return {0, {}};
    if (a.labels[i] < b.labels[j]) {
      out.labels.push_back(a.labels[i++]);
    } else {
      // b[j] jumps over everything left in a
      crossings += static_cast<long>(a.labels.size() - i);
      out.labels.push_back(b.labels[j++]);
    }
  }
  out.labels.insert(out.labels.end(), a.labels.begin() + i, a.labels.end());
  out.labels.insert(out.labels.end(), b.labels.begin() + j, b.labels.end());
  return {crossings % 2 == 0 ? 1 : -1, std::move(out)};
}

SignedTerm contract_basis(Label direction, const BasisTerm& t) {
  for (std::size_t j = 0; j < t.labels.size(); ++j) {
    if (t.labels[j] == direction) return {j % 2 == 0 ? 1 : -1, erase_index(t, j)};
  }
  return {0, {}};
}

BasisTerm erase_index(const BasisTerm& t, std::size_t j) {
  BasisTerm out;
  out.labels.reserve(t.labels.size() - 1);
  out.labels.insert(out.labels.end(), t.labels.begin(), t.labels.begin() + j);
  out.labels.insert(out.labels.end(), t.labels.begin() + j + 1, t.labels.end());
  return out;
}

SignedTerm sort_labels(std::vector<Label> raw) {
  long swaps = 0;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && raw[j - 1] > raw[j]) {
      std::swap(raw[j - 1], raw[j]);
      ++swaps;
      --j;
    }
  }
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i - 1] == raw[i]) return {0, {}};
  }
  return {swaps % 2 == 0 ? 1 : -1, BasisTerm(std::move(raw))};
}

}  // namespace excalc
