#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bkcheck/chevalley.hpp"
#include "bkcheck/weyl_group.hpp"

namespace bkcheck {

/// x = sum_{phi > 0} c_phi e_phi, standing for g = exp(x) in the unipotent group U.
struct UnipotentElement {
  RationalVector coefficients;  // indexed by positive root
  static UnipotentElement identity(const RootSystem& R);
};

/// Coefficients with numerator in [-9, 9] and denominator in [1, 4].
UnipotentElement random_unipotent(const RootSystem& R, std::mt19937_64& rng);
/// Deterministic stream for one instance: the generator is seeded by hashing (instance, seed).
std::mt19937_64 instance_rng(std::uint64_t instance, std::uint64_t seed);

/// The n^- block of Ad(g^{-1}) = exp(-ad x): entry (beta, gamma) is the coefficient of
/// e_{-beta} in Ad(g^{-1}) e_{-gamma}, for positive roots beta, gamma. Weights only
/// increase under ad x, so this block is the exponential of the n^- block of -ad x.
RationalMatrix negative_block_action(const ChevalleyAlgebra& A, const UnipotentElement& g);
Rational adjoint_coefficient(const ChevalleyAlgebra& A, const UnipotentElement& g, int beta, int gamma);
/// Ad(exp x) on the whole algebra.
RationalMatrix adjoint_action(const ChevalleyAlgebra& A, const UnipotentElement& g);

struct RamificationMatrix {
  RationalMatrix m;
  std::vector<int> rows;  // Phi(w), by height
  std::vector<int> cols;  // Phi(v), by height
  WeylElement v = 0, w = 0, x = 0, y = 0;
  int row_of(int root) const;
  int col_of(int root) const;
};

/// Checks Phi(w) = Phi(x) disjoint-union Phi(y), v covered by w, and Phi(v) not inside
/// Phi(w); throws PreconditionError naming the failed hypothesis.
void check_ramification_hypotheses(const WeylGroup& W, WeylElement v, WeylElement w, WeylElement x, WeylElement y);

/// Row beta uses g_x when beta lies in Phi(x), g_y otherwise.
RamificationMatrix build_M(const ChevalleyAlgebra& A, const WeylGroup& W, WeylElement v, WeylElement w, WeylElement x,
                           WeylElement y, const UnipotentElement& gx, const UnipotentElement& gy);
/// Same, from precomputed negative_block_action matrices.
RamificationMatrix build_M(const WeylGroup& W, WeylElement v, WeylElement w, WeylElement x, WeylElement y,
                           const RationalMatrix& act_x, const RationalMatrix& act_y);

enum class ProfileCase { Triangular, Interleaved };

struct CoverProfile {
  int beta0 = -1;               // w = v s_{beta0}
  std::vector<int> betas;       // Phi(w) - Phi(v), by height
  std::vector<int> gammas;      // Phi(v) - Phi(w), by height
  std::vector<int> multipliers; // k_i with beta_{i+1} = gamma_i + k_i beta_0
  bool h1 = false;
  bool h2 = false;
  ProfileCase kind = ProfileCase::Triangular;
  /// For the interleaved case: blocks Phi_i^- and Phi_i^+, i = 0..s.
  std::vector<std::vector<int>> minus_blocks;
  std::vector<std::vector<int>> plus_blocks;
  /// Interleaving, s = t + 1, positive multipliers, first difference is beta0.
  bool invariants_hold = false;
  int s() const { return static_cast<int>(betas.size()) - 1; }
};

/// Throws PreconditionError unless v is covered by w.
CoverProfile cover_profile(const WeylGroup& W, WeylElement v, WeylElement w);

struct BlockMatrices {
  std::vector<RationalMatrix> minus;  // M_i^-, i = 0..s
  std::vector<RationalMatrix> plus;   // M_i^+, i = 0..s (the last one is not square)
};
BlockMatrices extract_blocks(const RamificationMatrix& M, const CoverProfile& p);

/// M is block upper triangular with diagonal blocks M_0^-, M_0^+, ..., M_s^+ and
/// every M_i^- is unit upper triangular.
bool check_block_structure(const RamificationMatrix& M, const CoverProfile& p);

struct KernelCriterion {
  bool kernel_nonzero = false;
  bool some_block_singular = false;
  std::optional<int> singular_block;  // first i < s with det M_i^+ = 0
  bool equivalent() const { return kernel_nonzero == some_block_singular; }
};
/// Both sides of the block criterion, each by exact rank computation.
KernelCriterion block_kernel_criterion(const RamificationMatrix& M, const CoverProfile& p);

/// dim ker M.
int kernel_dimension(const RamificationMatrix& M);

struct RamificationRecord {
  WeylElement v = 0, w = 0, x = 0, y = 0;
  int sample = 0;
  int kernel_dim = 0;
  ProfileCase kind = ProfileCase::Triangular;
  std::vector<Rational> plus_determinants;  // det M_i^+ for i < s (interleaved only)
  bool criterion_holds = true;
  bool blocks_ok = true;
};
struct KernelReport {
  std::size_t instances = 0;
  std::size_t matrices = 0;
  std::size_t kernel_zero = 0;
  std::size_t criterion_failures = 0;
  std::size_t block_failures = 0;
  std::size_t profile_failures = 0;
  std::vector<RamificationRecord> records;  // kept when requested
  bool ok() const { return kernel_zero == 0 && criterion_failures == 0 && block_failures == 0 && profile_failures == 0; }
};
/// Every (v, w, x, y) satisfying the hypotheses, with `samples` random pairs (g_x, g_y) each.
KernelReport verify_kernel_nonzero(const ChevalleyAlgebra& A, const WeylGroup& W, int samples, std::uint64_t seed,
                                   bool keep_records = false, int jobs = 1);

/// All (v, w) with v covered by w and Phi(v) not inside Phi(w).
std::vector<std::pair<WeylElement, WeylElement>> eligible_covers(const WeylGroup& W);

struct ProfileReport {
  std::size_t covers = 0;
  std::size_t interleaved = 0;
  std::size_t triangular = 0;
  std::vector<std::pair<WeylElement, WeylElement>> failures;
  bool ok() const { return failures.empty(); }
};
/// cover_profile on every eligible cover; failures are interleaved profiles whose
/// invariants do not hold.
ProfileReport check_cover_profiles(const WeylGroup& W);

struct TransferReport {
  std::size_t covers = 0;           // interleaved eligible covers
  std::size_t missing_block = 0;    // no block singular on all Poincare samples
  std::size_t one_sided = 0;        // (x, y) whose block rows in [beta_i0; gamma_i0] lie on one side
  std::size_t two_sided = 0;
  std::size_t transfer_failures = 0;  // one-sided but det M_i0^+ != 0
  bool ok() const { return missing_block == 0 && transfer_failures == 0; }
};
/// For each interleaved eligible cover, finds a block i0 whose determinant vanishes on
/// `samples` random g in the Poincare case (x, y) = (w, e), then checks that
/// det M_i0^+ vanishes for every decomposition (x, y) whose relevant rows lie on one side.
TransferReport check_poincare_transfer(const ChevalleyAlgebra& A, const WeylGroup& W, int samples, std::uint64_t seed);

/// #((theta + Z beta) cap Phi(w)) = #((theta + Z beta) cap Phi(w s_beta)) for every
/// positive theta != beta. Throws PreconditionError unless w s_beta is covered by w.
bool inversions_cover_check(const WeylGroup& W, WeylElement w, int beta);

}  // namespace bkcheck
