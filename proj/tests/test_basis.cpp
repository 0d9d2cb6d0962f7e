#include <doctest.h>

#include <vector>

#include "excalc/basis.hpp"

using namespace excalc;

namespace {

// all wedge monomials over labels {0..n-1}
std::vector<BasisTerm> all_terms(int n) {
  std::vector<BasisTerm> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    BasisTerm t;
    for (int l = 0; l < n; ++l) {
      if (mask & (1 << l)) t.labels.push_back(l);
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_SUITE("basis") {
  TEST_CASE("wedge_merge on ordered, swapped and repeated labels") {
    auto [s1, t1] = wedge_merge(BasisTerm({0}), BasisTerm({1}));
    CHECK(s1 == 1);
    CHECK(t1 == BasisTerm({0, 1}));

    auto [s2, t2] = wedge_merge(BasisTerm({1}), BasisTerm({0}));
    CHECK(s2 == -1);
    CHECK(t2 == BasisTerm({0, 1}));

    auto [s3, t3] = wedge_merge(BasisTerm({0}), BasisTerm({0}));
    CHECK(s3 == 0);
  }

  TEST_CASE("contract_basis picks the slot sign") {
    auto [s1, t1] = contract_basis(1, BasisTerm({0, 1}));
    CHECK(s1 == -1);
    CHECK(t1 == BasisTerm({0}));

    auto [s2, t2] = contract_basis(0, BasisTerm({0, 1}));
    CHECK(s2 == 1);
    CHECK(t2 == BasisTerm({1}));

    auto [s3, t3] = contract_basis(2, BasisTerm({0, 1}));
    CHECK(s3 == 0);
  }

  TEST_CASE("merge associativity up to sign, exhaustive n <= 4") {
    const auto terms = all_terms(4);
    for (const auto& a : terms) {
      for (const auto& b : terms) {
        for (const auto& c : terms) {
          auto ab = wedge_merge(a, b);
          auto left_rest = ab.sign == 0 ? SignedTerm{0, {}} : wedge_merge(ab.term, c);
          const int left = ab.sign * left_rest.sign;
          auto bc = wedge_merge(b, c);
          auto right_rest = bc.sign == 0 ? SignedTerm{0, {}} : wedge_merge(a, bc.term);
          const int right = bc.sign * right_rest.sign;
          REQUIRE(left == right);
          if (left != 0) REQUIRE(left_rest.term == right_rest.term);
        }
      }
    }
  }

  TEST_CASE("graded anticommutativity of the merge sign") {
    const auto terms = all_terms(4);
    for (const auto& a : terms) {
      for (const auto& b : terms) {
        auto ab = wedge_merge(a, b);
        auto ba = wedge_merge(b, a);
        REQUIRE((ab.sign == 0) == (ba.sign == 0));
        if (ab.sign != 0) {
          const int parity = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
          REQUIRE(ab.sign == parity * ba.sign);
          REQUIRE(ab.term == ba.term);
        }
      }
    }
  }

  TEST_CASE("contract then wedge the same direction recovers the term") {
    for (const auto& t : all_terms(4)) {
      for (Label l : t.labels) {
        auto contracted = contract_basis(l, t);
        REQUIRE(contracted.sign != 0);
        auto back = wedge_merge(BasisTerm({l}), contracted.term);
        REQUIRE(back.sign * contracted.sign == 1);
        REQUIRE(back.term == t);
      }
    }
  }

  TEST_CASE("sort_labels counts parity and kills repeats") {
    auto [s1, t1] = sort_labels({2, 0, 1});
    CHECK(s1 == 1);
    CHECK(t1 == BasisTerm({0, 1, 2}));
    auto [s2, t2] = sort_labels({1, 0});
    CHECK(s2 == -1);
    CHECK(t2 == BasisTerm({0, 1}));
    auto [s3, t3] = sort_labels({1, 1});
    CHECK(s3 == 0);
  }
}
