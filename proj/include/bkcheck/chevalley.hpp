#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "bkcheck/linalg.hpp"
#include "bkcheck/root_system.hpp"

namespace bkcheck {

/// Sparse integral element of the Lie algebra in the Chevalley basis.
using SparseElement = std::vector<std::pair<int, std::int64_t>>;

/// Chevalley basis {e_phi : phi in Phi} and {h_i} (simple coroots) with
///   [h_i, e_phi] = <phi, alpha_i^vee> e_phi,  [e_phi, e_-phi] = h_phi,
///   [e_phi, e_psi] = N_{phi,psi} e_{phi+psi}.
///
/// Signs follow extraspecial pairs in the root order: for every non-simple positive
/// xi, the pair (r, xi - r) with r the first positive root such that xi - r is a
/// positive root gets N = +(p + 1). Every other constant is then forced.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(std::shared_ptr<const RootSystem> roots);

  const RootSystem& roots() const { return *roots_; }
  int dimension() const { return roots_->num_roots() + roots_->rank(); }
  /// Basis index of e_phi is the root index; h_i comes after all roots.
  int cartan_index(int i) const { return roots_->num_roots() + i; }
  bool is_root_index(int k) const { return k < roots_->num_roots(); }

  /// N_{a,b}; zero when a + b is not a root.
  int structure_constant(int a, int b) const { return n_[static_cast<std::size_t>(a * roots_->num_roots() + b)]; }
  /// The extraspecial pair of a non-simple positive root, or (-1, -1).
  std::pair<int, int> extraspecial_pair(int xi) const { return extraspecial_[static_cast<std::size_t>(xi)]; }

  SparseElement bracket_basis(int a, int b) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  /// Matrix of ad(x) in the basis order above.
  RationalMatrix ad(const RationalVector& x) const;

  /// Copy with N_{a,b} and N_{b,a} negated (breaks the relations; used as a negative control).
  ChevalleyAlgebra with_flipped_sign(int a, int b) const;

 private:
  std::shared_ptr<const RootSystem> roots_;
  std::vector<int> n_;
  std::vector<std::pair<int, int>> extraspecial_;
};

ChevalleyAlgebra build_chevalley(std::shared_ptr<const RootSystem> roots);

/// Largest p with psi - p phi a root (phi, psi roots with phi != +-psi).
int string_below(const RootSystem& R, int phi, int psi);

struct AlgebraCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};
/// |N_{phi,psi}| = p + 1 and N_{phi,psi} = -N_{psi,phi} = -N_{-phi,-psi} on every summable pair.
AlgebraCheck check_structure_constants(const ChevalleyAlgebra& A);
/// Jacobi identity on every triple of basis elements.
AlgebraCheck check_jacobi(const ChevalleyAlgebra& A);

/// exp(m) for a nilpotent matrix; throws std::logic_error if m is not nilpotent.
RationalMatrix exp_nilpotent(const RationalMatrix& m);

}  // namespace bkcheck
