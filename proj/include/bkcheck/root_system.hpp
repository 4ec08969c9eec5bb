#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "bkcheck/linalg.hpp"
#include "bkcheck/root_subset.hpp"

namespace bkcheck {

struct CartanType {
  char series = 'A';
  int rank = 1;
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Parses "F4", "B3", "A1xA2" (also "A1+A2") into irreducible components.
std::vector<CartanType> parse_cartan_type(std::string_view text);

struct Root {
  int index = -1;
  IntVector coords;
};

/// Immutable finite crystallographic root system.
///
/// Roots are indexed with the positive roots first, ordered by height and then by
/// decreasing coordinate vector, so simple root i has index i. The negative of
/// positive root k has index num_positive() + k.
class RootSystem {
 public:
  explicit RootSystem(std::vector<CartanType> components);

  const std::string& label() const { return label_; }
  const std::vector<CartanType>& components() const { return components_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(coords_.size()); }
  int num_positive() const { return num_positive_; }

  /// a_ij = <alpha_i^vee, alpha_j>
  const IntMatrix& cartan() const { return cartan_; }
  /// (alpha_i, alpha_j), long roots of each component have squared length 2.
  const RationalMatrix& gram() const { return gram_; }

  const IntVector& coords(int r) const { return coords_[static_cast<std::size_t>(r)]; }
  Root root(int r) const { return Root{r, coords(r)}; }
  std::optional<int> find(const IntVector& v) const;
  int find_or_throw(const IntVector& v) const;

  bool is_positive(int r) const { return r < num_positive_; }
  int negative(int r) const { return r < num_positive_ ? r + num_positive_ : r - num_positive_; }
  /// Positive root of the pair {r, -r}.
  int absolute(int r) const { return r < num_positive_ ? r : r - num_positive_; }
  int height(int r) const { return heights_[static_cast<std::size_t>(r)]; }
  int max_height() const { return heights_[static_cast<std::size_t>(num_positive_ - 1)]; }

  /// Index of a+b when it is a root, -1 otherwise.
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * num_roots() + b)]; }
  /// All (a, b, a+b) with a < b positive and a+b a root.
  const std::vector<std::array<int, 3>>& positive_sums() const { return positive_sums_; }

  /// Coroot of r in the simple-coroot basis.
  const IntVector& coroot(int r) const { return coroots_[static_cast<std::size_t>(r)]; }
  /// <alpha_r, alpha_i^vee>
  int pair_with_simple_coroot(int r, int i) const;

  Rational form(int a, int b) const;
  const Rational& norm2(int r) const { return norms_[static_cast<std::size_t>(r)]; }
  Rational form(const RationalVector& x, const RationalVector& y) const { return x.dot(gram_ * y); }

  const RationalVector& rho() const { return rho_; }
  /// Column i is omega_i in root coordinates.
  const RationalMatrix& fundamental_weights() const { return weights_; }

  /// Image of every root index under s_i.
  const std::vector<int>& simple_reflection(int i) const { return reflections_[static_cast<std::size_t>(i)]; }

  /// Permutations of the simple roots preserving the Cartan matrix (includes identity).
  const std::vector<std::vector<int>>& automorphisms() const { return automorphisms_; }
  /// Image of root r under a diagram automorphism.
  int apply_automorphism(const std::vector<int>& perm, int r) const;

  /// Dominance order: b - a has non-negative coordinates.
  bool dominance_leq(int a, int b) const;
  bool simply_laced() const;
  bool irreducible() const { return components_.size() == 1; }
  /// Component index of each simple root.
  int component_of_simple(int i) const { return simple_component_[static_cast<std::size_t>(i)]; }
  /// Positive roots as a RootSubset.
  RootSubset all_positive() const { return RootSubset::full(num_positive_); }

  std::string format_root(int r) const;

 private:
  void build_gram();
  void generate_roots();
  void build_tables();
  void find_automorphisms();

  std::vector<CartanType> components_;
  std::string label_;
  int rank_ = 0;
  int num_positive_ = 0;
  IntMatrix cartan_;
  RationalMatrix gram_;
  std::vector<int> simple_component_;
  std::vector<IntVector> coords_;
  std::unordered_map<std::uint64_t, int> lookup_;
  std::vector<int> heights_;
  std::vector<int> add_;
  std::vector<std::array<int, 3>> positive_sums_;
  std::vector<IntVector> coroots_;
  std::vector<Rational> norms_;
  RationalVector rho_;
  RationalMatrix weights_;
  std::vector<std::vector<int>> reflections_;
  std::vector<std::vector<int>> automorphisms_;
};

RootSystem build_root_system(char series, int rank);
RootSystem build_root_system(std::string_view type);

std::optional<Root> root_sum(const RootSystem& R, const Root& phi, const Root& psi);

enum class IntervalKind { Closed, Open };
/// {gamma : phi <= gamma <= psi} over positive roots; empty unless phi <= psi.
RootSubset interval(const RootSystem& R, int phi, int psi, IntervalKind kind = IntervalKind::Closed);

/// Normalized invariant form (x, phi) with x in root coordinates.
Rational pairing(const RootSystem& R, const RationalVector& x, int phi);
/// <x, phi^vee> = 2 (x, phi) / (phi, phi)
Rational coroot_pairing(const RootSystem& R, const RationalVector& x, int phi);

/// Classical number of positive roots of an irreducible type.
int classical_positive_count(const CartanType& t);

nlohmann::json to_json(const RootSystem& R);
RootSystem root_system_from_json(const nlohmann::json& doc);

}  // namespace bkcheck
