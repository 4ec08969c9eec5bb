#include <cstdlib>
#include <random>

#include "doctest.h"

#include "bkcheck/chevalley.hpp"
#include "bkcheck/ramification.hpp"

using namespace bkcheck;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

ChevalleyAlgebra algebra(const char* type) { return build_chevalley(std::make_shared<const RootSystem>(build_root_system(type))); }

RationalVector basis_vector(const ChevalleyAlgebra& A, int k) {
  RationalVector v = RationalVector::Zero(A.dimension());
  v(k) = 1;
  return v;
}

}  // namespace

TEST_SUITE("chevalley") {
  TEST_CASE("root strings") {
    const RootSystem A2 = build_root_system("A2");
    CHECK(string_below(A2, 0, A2.find_or_throw(vec({1, 1}))) == 1);
    CHECK(string_below(A2, 0, 1) == 0);
    const RootSystem G2 = build_root_system("G2");
    CHECK(string_below(G2, 0, G2.find_or_throw(vec({3, 1}))) == 3);
  }

  TEST_CASE("structure constant magnitudes") {
    const ChevalleyAlgebra A2 = algebra("A2");
    for (int a = 0; a < A2.roots().num_roots(); ++a)
      for (int b = 0; b < A2.roots().num_roots(); ++b)
        CHECK(std::abs(A2.structure_constant(a, b)) == (A2.roots().add(a, b) >= 0 ? 1 : 0));
    const ChevalleyAlgebra G2 = algebra("G2");
    int largest = 0;
    for (int a = 0; a < G2.roots().num_roots(); ++a)
      for (int b = 0; b < G2.roots().num_roots(); ++b) largest = std::max(largest, std::abs(G2.structure_constant(a, b)));
    CHECK(largest == 3);
  }

  TEST_CASE("extraspecial pairs are positive") {
    const ChevalleyAlgebra B3 = algebra("B3");
    const RootSystem& R = B3.roots();
    for (int xi = R.rank(); xi < R.num_positive(); ++xi) {
      const auto [r, s] = B3.extraspecial_pair(xi);
      REQUIRE(r >= 0);
      CHECK(R.add(r, s) == xi);
      CHECK(B3.structure_constant(r, s) == string_below(R, r, s) + 1);
    }
    CHECK(B3.extraspecial_pair(0).first == -1);
  }

  TEST_CASE("opposite root vectors bracket to the coroot") {
    for (const char* t : {"A3", "B2", "G2", "C3"}) {
      const ChevalleyAlgebra A = algebra(t);
      const RootSystem& R = A.roots();
      for (int a = 0; a < R.num_roots(); ++a) {
        SparseElement expected;
        // phi^vee = sum_i c_i alpha_i^vee with c_i = coeff_i(phi) (alpha_i, alpha_i) / (phi, phi).
        for (int i = 0; i < R.rank(); ++i) {
          const Rational c = Rational(R.coords(a)(i)) * R.gram()(i, i) / R.norm2(a);
          REQUIRE(is_integer(c));
          if (c != 0) expected.emplace_back(A.cartan_index(i), static_cast<std::int64_t>(c));
        }
        CHECK(A.bracket_basis(a, R.negative(a)) == expected);
      }
      const int h0 = A.cartan_index(0);
      for (int a = 0; a < R.num_roots(); ++a) {
        const int p = R.pair_with_simple_coroot(a, 0);
        CHECK(A.bracket_basis(h0, a) == (p == 0 ? SparseElement{} : SparseElement{{a, p}}));
      }
    }
  }

  TEST_CASE("relations through rank 4") {
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
      const ChevalleyAlgebra A = algebra(t);
      const AlgebraCheck s = check_structure_constants(A);
      const AlgebraCheck j = check_jacobi(A);
      CHECK_MESSAGE(s.ok(), t);
      CHECK_MESSAGE(j.ok(), t);
      CHECK(j.checked > 0);
    }
  }

  TEST_CASE("a flipped sign breaks Jacobi") {
    const ChevalleyAlgebra B3 = algebra("B3");
    const RootSystem& R = B3.roots();
    const int a = 0, b = 1;
    REQUIRE(R.add(a, b) >= 0);
    const ChevalleyAlgebra broken = B3.with_flipped_sign(a, b);
    CHECK(broken.structure_constant(a, b) == -B3.structure_constant(a, b));
    CHECK_FALSE(check_jacobi(broken).ok());
  }

  TEST_CASE("ad matches the bracket") {
    const ChevalleyAlgebra A = algebra("B2");
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      RationalVector x(A.dimension()), y(A.dimension());
      for (int k = 0; k < A.dimension(); ++k) {
        x(k) = Rational(static_cast<long>(rng() % 7) - 3, 1);
        y(k) = Rational(static_cast<long>(rng() % 7) - 3, 2);
      }
      CHECK(RationalVector(A.ad(x) * y) == A.bracket(x, y));
      CHECK(A.bracket(x, y) == RationalVector(-A.bracket(y, x)));
    }
  }

  TEST_CASE("exponential of a nilpotent matrix") {
    RationalMatrix n = RationalMatrix::Zero(3, 3);
    n(0, 1) = 1;
    n(1, 2) = 1;
    RationalMatrix expected = RationalMatrix::Identity(3, 3);
    expected(0, 1) = 1;
    expected(1, 2) = 1;
    expected(0, 2) = Rational(1, 2);
    CHECK(exp_nilpotent(n) == expected);
    CHECK(exp_nilpotent(RationalMatrix::Zero(2, 2)) == RationalMatrix::Identity(2, 2));
    RationalMatrix m = RationalMatrix::Identity(2, 2);
    CHECK_THROWS_AS(exp_nilpotent(m), std::logic_error);
  }

  TEST_CASE("Ad(exp x) preserves brackets") {
    for (const char* t : {"A2", "B3", "G2", "C3"}) {
      const ChevalleyAlgebra A = algebra(t);
      std::mt19937_64 rng(11);
      for (int sample = 0; sample < 50; ++sample) {
        const UnipotentElement g = random_unipotent(A.roots(), rng);
        const RationalMatrix ad_g = adjoint_action(A, g);
        const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(A.dimension()));
        const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(A.dimension()));
        const RationalVector ea = basis_vector(A, a), eb = basis_vector(A, b);
        const RationalVector lhs = ad_g * A.bracket(ea, eb);
        const RationalVector rhs = A.bracket(ad_g * ea, ad_g * eb);
        CHECK_MESSAGE(lhs == rhs, t);
      }
    }
  }
}
