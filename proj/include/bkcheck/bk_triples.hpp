#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bkcheck/weyl_group.hpp"

namespace bkcheck {

/// (u, v, w) with Phi(u) & Phi(v) = Phi(w) and Phi(u) | Phi(v) = all positive roots.
struct BKTriple {
  WeylElement u = 0, v = 0, w = 0;
  friend bool operator==(const BKTriple&, const BKTriple&) = default;
};

/// (w1, w2, w3) = (w0 w, u, v): the three dual inversion sets partition the positive roots.
struct SymmetricTriple {
  WeylElement w1 = 0, w2 = 0, w3 = 0;
};

SymmetricTriple symmetric_form(const WeylGroup& W, const BKTriple& t);
/// Inverse of symmetric_form.
BKTriple from_symmetric(const WeylGroup& W, const SymmetricTriple& s);

/// Returns the w completing (u, v) to a BK triple, if any.
std::optional<WeylElement> bk_complete(const WeylGroup& W, WeylElement u, WeylElement v);

/// Visits BK triples with u in [u_begin, u_end) in (u, v) order.
template <typename F>
void for_each_bk_triple(const WeylGroup& W, F&& visit, int u_begin = 0, int u_end = -1) {
  if (u_end < 0) u_end = W.size();
  const int n = W.roots().num_positive();
  const RootSubset all = W.roots().all_positive();
  for (WeylElement u = u_begin; u < u_end; ++u) {
    const RootSubset& iu = W.inversions(u);
    const int lu = W.length(u);
    for (WeylElement v = 0; v < W.size(); ++v) {
      if (lu + W.length(v) < n) continue;
      const RootSubset& iv = W.inversions(v);
      if ((iu | iv) != all) continue;
      if (auto w = W.find_by_inversions(iu & iv)) visit(BKTriple{u, v, *w});
    }
  }
}

std::vector<BKTriple> enumerate_bk_triples(const WeylGroup& W, int jobs = 1);
/// k triples drawn without replacement by a seeded shuffle, kept in enumeration order.
/// Returns all of them when k is 0 or at least the list size.
std::vector<BKTriple> sample_triples(const std::vector<BKTriple>& triples, std::size_t k, std::uint64_t seed);

using CupProvider = std::function<Rational(WeylElement, WeylElement, WeylElement)>;
/// c_uv^w on BK triples, 0 elsewhere.
Rational bk_constant(const WeylGroup& W, WeylElement u, WeylElement v, WeylElement w, const CupProvider& cup);

/// The only x with w_i x <= w_i for all i is the identity.
bool check_bruhat_corollary(const WeylGroup& W, const BKTriple& t);
/// d(w1)+d(w2)+d(w3) = 2 rank and d(w1^v)+d(w2^v)+d(w3^v) = rank.
bool check_descent_identities(const WeylGroup& W, const BKTriple& t);

struct DescentQuestionOutcome {
  /// For the pairs (1,2), (1,3), (2,3) of the symmetric form.
  std::array<bool, 3> pair_holds{};
  bool holds() const { return pair_holds[0] && pair_holds[1] && pair_holds[2]; }
};
DescentQuestionOutcome descent_question(const WeylGroup& W, const BKTriple& t);
bool check_descent_question(const WeylGroup& W, const BKTriple& t);

/// Product of (rho, alpha) over the inversion set of w^{-1}.
Rational rho_product(const WeylGroup& W, WeylElement w);
/// Requires Phi(w) = Phi(w1) disjoint-union Phi(w2).
bool check_rho_product(const WeylGroup& W, WeylElement w, WeylElement w1, WeylElement w2);

/// Weights in the fundamental-weight basis.
struct WeightTriple {
  RationalVector lambda1, lambda2, lambda3;
};
/// Strictly dominant weights with w1^{-1} l1 + w2^{-1} l2 + w3^{-1} l3 = 0.
std::optional<WeightTriple> face_witness(const WeylGroup& W, const BKTriple& t);
bool verify_face_witness(const WeylGroup& W, const BKTriple& t, const WeightTriple& lambda);

}  // namespace bkcheck
