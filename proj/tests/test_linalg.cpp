#include <random>

#include "doctest.h"

#include "bkcheck/linalg.hpp"
#include "bkcheck/lp.hpp"

using namespace bkcheck;

namespace {

RationalMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
  return m;
}

/// Leibniz expansion over all permutations.
Rational leibniz(const RationalMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("determinant agrees with the permutation expansion") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 10; ++rep) {
        const RationalMatrix m = random_matrix(n, n, rng);
        CHECK(exact_determinant(m) == leibniz(m));
      }
  }

  TEST_CASE("kernel basis is annihilated and has the complementary dimension") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
      RationalMatrix m = random_matrix(3, 5, rng);
      m.row(2) = m.row(0) + m.row(1) * Rational(2);
      const RationalMatrix k = kernel_basis(m);
      CHECK(k.cols() == 5 - exact_rank(m));
      CHECK((m * k).isZero());
    }
  }

  TEST_CASE("inverse times matrix is the identity") {
    RationalMatrix m(2, 2);
    m << 2, 1, 1, 1;
    CHECK((exact_inverse(m) * m).eval() == RationalMatrix::Identity(2, 2));
  }

  TEST_CASE("rational parsing round trips") {
    for (const char* text : {"0", "-3", "7/4", "-22/9"}) CHECK(to_string(parse_rational(text)) == text);
    CHECK(is_integer(Rational(6, 3)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
  }

  TEST_CASE("non-negative solutions") {
    RationalMatrix a(2, 3);
    a << 1, 0, 1, 0, 1, 1;
    RationalVector b(2);
    b << 2, 3;
    const auto z = find_nonnegative_solution(a, b);
    REQUIRE(z);
    CHECK((a * *z).eval() == b);
    CHECK((z->array() >= 0).all());
    b << -1, 3;
    CHECK_FALSE(find_nonnegative_solution(a, b));
  }
}
