#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bkcheck/linalg.hpp"
#include "bkcheck/root_subset.hpp"
#include "bkcheck/root_system.hpp"

namespace bkcheck {

inline constexpr std::size_t kDefaultWeylCap = 200000;

/// Index of an element inside its WeylGroup. Index 0 is the identity.
using WeylElement = int;

/// Images of the simple roots, one root index per column: the integer matrix of w
/// in compressed form.
using ColumnKey = std::array<std::uint16_t, kMaxRank>;

struct ColumnKeyHash {
  std::size_t operator()(const ColumnKey& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : k) h = (h ^ c) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

/// Fully enumerated Weyl group with per-element length, inversion set, descents and
/// left/right multiplication tables by simple reflections.
///
/// Words are read left to right as matrix products: the word [i, j] is s_i s_j.
class WeylGroup {
 public:
  static WeylGroup enumerate(std::shared_ptr<const RootSystem> roots, std::size_t cap = kDefaultWeylCap);
  /// Rebuilds from stored column keys (cache layer); verifies closure.
  static WeylGroup from_columns(std::shared_ptr<const RootSystem> roots, const std::vector<ColumnKey>& elements);

  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
  int size() const { return static_cast<int>(columns_.size()); }
  int rank() const { return rank_; }
  WeylElement identity() const { return 0; }
  WeylElement longest() const { return longest_; }

  IntMatrix matrix(WeylElement w) const;
  const ColumnKey& columns(WeylElement w) const { return columns_[static_cast<std::size_t>(w)]; }
  int length(WeylElement w) const { return lengths_[static_cast<std::size_t>(w)]; }
  int sign(WeylElement w) const { return (length(w) & 1) ? -1 : 1; }
  const RootSubset& inversions(WeylElement w) const { return inversions_[static_cast<std::size_t>(w)]; }
  std::uint32_t left_descent_mask(WeylElement w) const { return descents_[static_cast<std::size_t>(w)]; }
  int descent_count(WeylElement w) const;

  WeylElement left_mult(int i, WeylElement w) const { return left_[static_cast<std::size_t>(w * rank_ + i)]; }
  WeylElement right_mult(WeylElement w, int i) const { return right_[static_cast<std::size_t>(w * rank_ + i)]; }
  WeylElement inverse(WeylElement w) const { return inverse_[static_cast<std::size_t>(w)]; }
  WeylElement multiply(WeylElement a, WeylElement b) const;
  /// w0 w, the Poincare dual.
  WeylElement dual(WeylElement w) const { return multiply(longest_, w); }

  /// Root index of w(r).
  int act(WeylElement w, int r) const;
  /// Element s_beta for a positive root beta.
  WeylElement reflection(int beta) const { return reflections_[static_cast<std::size_t>(beta)]; }

  /// Reduced word, 0-based generator indices.
  std::vector<int> reduced_word(WeylElement w) const;
  WeylElement from_word(const std::vector<int>& word) const;

  std::optional<WeylElement> find(const IntMatrix& m) const;
  std::optional<WeylElement> find(const ColumnKey& k) const;
  std::optional<WeylElement> find_by_inversions(const RootSubset& s) const;

 private:
  WeylGroup() = default;
  void finish();

  std::shared_ptr<const RootSystem> roots_;
  int rank_ = 0;
  WeylElement longest_ = 0;
  std::vector<ColumnKey> columns_;
  std::unordered_map<ColumnKey, WeylElement, ColumnKeyHash> index_;
  std::unordered_map<RootSubset, WeylElement, RootSubsetHash> by_inversions_;
  std::vector<int> lengths_;
  std::vector<RootSubset> inversions_;
  std::vector<std::uint32_t> descents_;
  std::vector<WeylElement> left_;
  std::vector<WeylElement> right_;
  std::vector<WeylElement> inverse_;
  std::vector<WeylElement> parent_;
  std::vector<int> parent_generator_;
  std::vector<WeylElement> reflections_;
  std::vector<std::uint16_t> root_perms_;
};

RootSubset inversion_set(const WeylGroup& W, WeylElement w);
/// Bitmask of simple roots alpha_i with l(s_i w) < l(w).
std::uint32_t left_descents(const WeylGroup& W, WeylElement w);

/// Strong Bruhat order via the lifting property; linear in l(w).
bool bruhat_leq(const WeylGroup& W, WeylElement u, WeylElement w);
bool left_weak_leq(const WeylGroup& W, WeylElement u, WeylElement w);
/// v is covered by w in Bruhat order.
bool bruhat_covers(const WeylGroup& W, WeylElement v, WeylElement w);

/// S and its complement in the positive roots are both closed under root addition.
bool is_biconvex(const RootSystem& R, const RootSubset& s);
/// The unique w with inversion set S via greedy peeling of simple roots.
std::optional<WeylElement> biconvex_to_weyl(const WeylGroup& W, RootSubset s);

struct ConeWitness {
  /// f(x) = coefficients . x in root coordinates.
  RationalVector functional;
  bool verified = false;
};
/// f(x) = (rho, w x), negative on S and positive on its complement.
ConeWitness cone_disjointness(const WeylGroup& W, const RootSubset& s);

struct Decomposition {
  WeylElement w, x, y;
};
/// Visits every (x, y) with disjoint inversion sets whose union is the inversion set of some w.
template <typename F>
void for_each_decomposition(const WeylGroup& W, F&& visit) {
  const int n = W.roots().num_positive();
  for (WeylElement x = 0; x < W.size(); ++x) {
    const RootSubset& ix = W.inversions(x);
    const int lx = W.length(x);
    for (WeylElement y = 0; y < W.size(); ++y) {
      if (lx + W.length(y) > n) continue;
      const RootSubset& iy = W.inversions(y);
      if (ix.intersects(iy)) continue;
      if (auto w = W.find_by_inversions(ix | iy)) visit(Decomposition{*w, x, y});
    }
  }
}

/// Classical Weyl group order of an irreducible type.
std::uint64_t classical_weyl_order(const CartanType& t);

}  // namespace bkcheck
