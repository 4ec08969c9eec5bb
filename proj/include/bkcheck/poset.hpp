#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bkcheck/linalg.hpp"
#include "bkcheck/weyl_group.hpp"

namespace bkcheck {

/// Finite poset on elements 0..n-1 with a reflexive order relation and a fixed linear
/// extension (a stable topological sort: among minimal elements the smallest id goes first).
class FinitePoset {
 public:
  /// leq[a][b] true iff a <= b. Throws ValidationError unless it is a partial order.
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  const std::vector<int>& linear_extension() const { return order_; }
  /// {c : a <= c <= b} listed along the linear extension.
  std::vector<int> interval(int a, int b) const;
  /// Induced subposet; element i of the result is elements[i].
  FinitePoset subposet(const std::vector<int>& elements) const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<int> order_;
};

/// Transitive closure of a random DAG on n nodes (edge probability per mille), with
/// node labels shuffled so the identity is usually not a linear extension.
FinitePoset random_poset(int n, std::mt19937_64& rng, int edge_per_mille = 300);

/// Bruhat interval [u, w] as a poset; element i is the i-th group element of the interval in index order.
FinitePoset bruhat_interval_poset(const WeylGroup& W, WeylElement u, WeylElement w, std::vector<WeylElement>* elements = nullptr);

/// k x k matrix for the chain phi_0 < ... < phi_k (a poset listed along a linear
/// extension): row i is phi_i (0..k-1), column j is phi_{j+1}.
struct ChainMatrix {
  RationalMatrix m;
  /// Entry at row phi_i and column phi_j.
  const Rational& at(int i, int j) const { return m(i, j - 1); }
};

/// Unit entries m_ii, zero unless phi_i <= phi_j; throws PreconditionError otherwise.
void check_chain_matrix(const FinitePoset& P, const ChainMatrix& M);

/// Random entries (numerator in [-9, 9], denominator in [1, 4]) on the allowed pattern.
ChainMatrix random_chain_matrix(const FinitePoset& P, std::mt19937_64& rng);

/// det M = (-1)^{k+1} sum over chains phi_0 < phi_j1 < ... < phi_jt < phi_k of
/// (-1)^t m_{0 j1} m_{j1 j2} ... m_{jt k}, including the chain with no interior element.
/// P must be listed along its linear extension (element i is phi_i). Also computes the
/// determinant by elimination and throws std::logic_error if the two disagree.
Rational chain_expansion_det(const FinitePoset& P, const ChainMatrix& M);

/// Recursion mu(a, a) = 1, sum_{a <= c <= b} mu(a, c) = 0. Throws PreconditionError unless a <= b.
std::int64_t mobius_bruteforce(const FinitePoset& P, int a, int b);

/// (-1)^k det M with m_ij = 1 iff phi_i <= phi_j on the interval [a, b] = {phi_0..phi_k}.
/// Throws PreconditionError unless a < b.
std::int64_t mobius_via_det(const FinitePoset& P, int a, int b);

struct MobiusReport {
  std::size_t posets = 0;
  std::size_t intervals = 0;
  std::size_t det_mismatches = 0;
  std::size_t mobius_mismatches = 0;
  bool ok() const { return det_mismatches == 0 && mobius_mismatches == 0; }
};
/// Both identities on every interval with at least two elements.
void check_poset(const FinitePoset& P, std::mt19937_64& rng, MobiusReport& report);
/// `count` random posets on at most max_size elements.
MobiusReport mobius_selftest(int count, std::uint64_t seed, int max_size = 8);
/// All Bruhat intervals [u, w] of W with u < w.
MobiusReport check_bruhat_intervals(const WeylGroup& W, std::uint64_t seed);

}  // namespace bkcheck
