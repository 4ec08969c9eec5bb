#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkcheck/root_system.hpp"
#include "bkcheck/weyl_group.hpp"

namespace bkcheck {

/// beta < phi < gamma in dominance order, with the three pairwise-sum flags.
struct Triple {
  int beta = -1;
  int phi = -1;
  int gamma = -1;
  bool gamma_plus_beta = false;
  bool gamma_plus_phi = false;
  bool phi_plus_beta = false;
  friend bool operator==(const Triple& a, const Triple& b) {
    return a.beta == b.beta && a.phi == b.phi && a.gamma == b.gamma;
  }
};

enum class SumCondition { GammaPlusBeta, GammaPlusPhi };
std::string to_string(SumCondition c);
SumCondition parse_sum_condition(const std::string& text);

Triple make_triple(const RootSystem& R, int beta, int phi, int gamma);

/// All chains beta < phi < gamma of positive roots whose selected sum is a root,
/// ordered by (beta, phi, gamma) index.
std::vector<Triple> candidate_triples(const RootSystem& R, SumCondition cond);

/// Proper subspace F, given by the simple system of the subsystem F cap Phi, and
/// non-negative coordinates of phi - beta and gamma - phi on that system.
struct ReductionWitness {
  std::vector<int> basis;
  RationalVector phi_minus_beta;
  RationalVector gamma_minus_phi;
};

/// Re-substitution check of a witness: the coefficients are non-negative, the basis
/// roots are positive and span a proper subspace containing beta, and the two
/// combinations reproduce phi - beta and gamma - phi.
bool verify_witness(const RootSystem& R, const Triple& t, const ReductionWitness& w);

/// A flat of the root arrangement: the positive roots of a subspace spanned by roots.
struct RootFlat {
  RootSubset positive;
  std::vector<int> simple;  // simple system of the subsystem, increasing index
  /// coordinates[r * simple.size() + j]: coefficient of simple[j] in root r (members only).
  std::vector<std::int8_t> coordinates;
  int coordinate(int r, int j) const { return coordinates[static_cast<std::size_t>(r) * simple.size() + static_cast<std::size_t>(j)]; }
};

/// All flats of a fixed rank, generated as W-orbits of the standard parabolic
/// subsystems. Every flat of smaller rank lies in one of them, so searching the
/// flats of rank maxdim decides reducibility up to that dimension.
class ReductionSearch {
 public:
  /// Throws ResourceError when more than flat_budget flats are generated.
  ReductionSearch(const RootSystem& R, int maxdim, std::size_t flat_budget = 2'000'000);

  std::optional<ReductionWitness> find(const Triple& t) const;
  const std::vector<RootFlat>& flats() const { return flats_; }
  int maxdim() const { return maxdim_; }

 private:
  const RootSystem* roots_;
  int maxdim_;
  std::vector<RootFlat> flats_;
  std::vector<std::vector<int>> flats_of_root_;
};

std::optional<ReductionWitness> is_reducible(const RootSystem& R, const Triple& t, int maxdim);

/// Candidates without a reduction witness of dimension rank - 1. With up_to_aut, one
/// representative per diagram-automorphism orbit: the one with the lexicographically
/// smallest concatenated coordinates.
std::vector<Triple> enumerate_irreducible(const RootSystem& R, SumCondition cond, bool up_to_aut);

/// Lexicographically smallest image of the triple under the diagram automorphisms.
Triple aut_representative(const RootSystem& R, const Triple& t);

struct CombiViolation {
  WeylElement x = 0;  // Phi_1 = Phi(x)
  WeylElement y = 0;  // Phi_2 = Phi(y)
  int beta = -1;
  int gamma = -1;
  int witness = -1;  // a root of Phi_2 in [beta; gamma]
};
struct CombiReport {
  std::size_t decompositions = 0;
  std::size_t instances = 0;
  std::size_t thetax_failures = 0;
  std::vector<CombiViolation> violations;
  bool ok() const { return violations.empty() && thetax_failures == 0; }
};
/// For every disjoint biconvex pair with biconvex union and every (beta, gamma) with
/// beta in Phi_1, gamma outside Phi_3 and gamma + beta in Phi_3, checks that Phi_2
/// misses [beta; gamma] and that gamma + beta already lies in Phi_1.
CombiReport verify_combi(const WeylGroup& W, int jobs = 1);

/// gamma + beta in Phi_1; throws PreconditionError unless the hypotheses hold.
bool check_thetax(const RootSystem& R, const RootSubset& phi1, const RootSubset& phi2, const RootSubset& phi3, int beta,
                  int gamma);

/// (beta, alpha) in {-1, 0, 1} for distinct non-opposite roots of a simply laced system.
struct KillingCase {
  int value = 0;
  bool verified = false;  // membership of beta - alpha and beta + alpha matches value
};
KillingCase killing_trichotomy(const RootSystem& R, int alpha, int beta);

/// gamma - beta is a sum of at most 2 - (gamma, beta) positive roots.
bool decomposition_bound(const RootSystem& R, int beta, int gamma);

}  // namespace bkcheck
