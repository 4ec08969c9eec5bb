#include <random>

#include "doctest.h"

#include "bkcheck/errors.hpp"
#include "bkcheck/ramification.hpp"

using namespace bkcheck;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

struct Setup {
  std::shared_ptr<const RootSystem> roots;
  WeylGroup W;
  ChevalleyAlgebra A;
  explicit Setup(const char* type)
      : roots(std::make_shared<const RootSystem>(build_root_system(type))), W(WeylGroup::enumerate(roots)), A(build_chevalley(roots)) {}
};

std::vector<std::pair<WeylElement, WeylElement>> decompositions_of(const WeylGroup& W, WeylElement w) {
  std::vector<std::pair<WeylElement, WeylElement>> out;
  for_each_decomposition(W, [&](const Decomposition& d) {
    if (d.w == w) out.emplace_back(d.x, d.y);
  });
  return out;
}

}  // namespace

TEST_SUITE("ramification") {
  TEST_CASE("adjoint coefficients") {
    const Setup s("B3");
    const RootSystem& R = *s.roots;
    const UnipotentElement e = UnipotentElement::identity(R);
    std::mt19937_64 rng(5);
    const UnipotentElement g = random_unipotent(R, rng);
    for (int b = 0; b < R.num_positive(); ++b)
      for (int c = 0; c < R.num_positive(); ++c) {
        CHECK(adjoint_coefficient(s.A, e, b, c) == (b == c ? 1 : 0));
        if (b == c) CHECK(adjoint_coefficient(s.A, g, b, c) == 1);
        if (!R.dominance_leq(b, c)) CHECK(adjoint_coefficient(s.A, g, b, c) == 0);
      }
  }

  TEST_CASE("negative block is a block of the inverse adjoint action") {
    for (const char* t : {"A3", "G2"}) {
      const Setup s(t);
      const RootSystem& R = *s.roots;
      std::mt19937_64 rng(9);
      const UnipotentElement g = random_unipotent(R, rng);
      const RationalMatrix inv = exact_inverse(adjoint_action(s.A, g));
      const RationalMatrix block = negative_block_action(s.A, g);
      for (int b = 0; b < R.num_positive(); ++b)
        for (int c = 0; c < R.num_positive(); ++c) CHECK(block(b, c) == inv(R.negative(b), R.negative(c)));
    }
  }

  TEST_CASE("seeded instance streams") {
    std::mt19937_64 a = instance_rng(3, 42), b = instance_rng(3, 42), c = instance_rng(4, 42);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }

  TEST_CASE("D4 displayed instance") {
    const Setup s("D4");
    const RootSystem& R = *s.roots;
    const WeylElement w = s.W.from_word({1, 2, 0, 1, 3, 1});
    const WeylElement v = s.W.right_mult(w, 1);
    REQUIRE(bruhat_covers(s.W, v, w));
    REQUIRE_FALSE(s.W.inversions(v).is_subset_of(s.W.inversions(w)));

    const CoverProfile p = cover_profile(s.W, v, w);
    CHECK(p.kind == ProfileCase::Interleaved);
    CHECK(p.s() == 1);
    CHECK(p.beta0 == 1);
    REQUIRE(p.gammas.size() == 1);
    CHECK(R.coords(p.gammas[0]) == vec({1, 1, 1, 1}));
    REQUIRE(p.multipliers.size() == 1);
    CHECK(p.multipliers[0] == 1);
    CHECK(R.coords(p.betas[1]) == vec({1, 2, 1, 1}));
    CHECK(p.invariants_hold);

    const int top = R.find_or_throw(vec({1, 2, 1, 1}));
    const auto decs = decompositions_of(s.W, w);
    REQUIRE(decs.size() >= 2);
    std::mt19937_64 rng(2024);
    for (const auto& [x, y] : decs) {
      const UnipotentElement gx = random_unipotent(R, rng), gy = random_unipotent(R, rng);
      const RamificationMatrix M = build_M(s.A, s.W, v, w, x, y, gx, gy);
      CHECK(M.rows.back() == top);
      CHECK(M.m.row(M.row_of(top)).isZero());
      CHECK(kernel_dimension(M) >= 1);
      const BlockMatrices blocks = extract_blocks(M, p);
      CHECK(blocks.minus[0] == RationalMatrix::Identity(1, 1));
      const KernelCriterion k = block_kernel_criterion(M, p);
      CHECK(k.equivalent());
      CHECK(k.some_block_singular);
      CHECK(check_block_structure(M, p));
    }
  }

  TEST_CASE("identity elements give a kernel") {
    const Setup s("B3");
    const UnipotentElement e = UnipotentElement::identity(*s.roots);
    for (const auto& [v, w] : eligible_covers(s.W)) {
      const CoverProfile p = cover_profile(s.W, v, w);
      for (const auto& [x, y] : decompositions_of(s.W, w)) {
        const RamificationMatrix M = build_M(s.A, s.W, v, w, x, y, e, e);
        CHECK(kernel_dimension(M) >= 1);
        for (int g : p.gammas) CHECK(M.m.col(M.col_of(g)).isZero());
        if (p.kind == ProfileCase::Interleaved) {
          const KernelCriterion k = block_kernel_criterion(M, p);
          CHECK(k.kernel_nonzero);
          CHECK(k.some_block_singular);
        }
      }
    }
  }

  TEST_CASE("hypotheses are enforced") {
    const Setup s("A3");
    const WeylElement w = s.W.from_word({0, 1, 2});
    CHECK_THROWS_AS(check_ramification_hypotheses(s.W, s.W.identity(), w, w, s.W.identity()), PreconditionError);
    const auto covers = eligible_covers(s.W);
    REQUIRE_FALSE(covers.empty());
    const auto [v, w2] = covers.front();
    CHECK_NOTHROW(check_ramification_hypotheses(s.W, v, w2, w2, s.W.identity()));
    CHECK_THROWS_AS(check_ramification_hypotheses(s.W, v, w2, s.W.identity(), s.W.identity()), PreconditionError);
    CHECK_THROWS_AS(cover_profile(s.W, s.W.identity(), s.W.longest()), PreconditionError);
  }

  TEST_CASE("block criterion on seeded B3 samples") {
    const Setup s("B3");
    struct Instance {
      WeylElement v, w, x, y;
      CoverProfile p;
    };
    std::vector<Instance> instances;
    for (const auto& [v, w] : eligible_covers(s.W)) {
      const CoverProfile p = cover_profile(s.W, v, w);
      if (p.kind != ProfileCase::Interleaved) continue;
      for (const auto& [x, y] : decompositions_of(s.W, w)) instances.push_back({v, w, x, y, p});
    }
    REQUIRE_FALSE(instances.empty());
    std::mt19937_64 rng(77);
    for (std::size_t k = 0; k < 200; ++k) {
      const Instance& in = instances[k % instances.size()];
      const UnipotentElement gx = random_unipotent(*s.roots, rng), gy = random_unipotent(*s.roots, rng);
      const RamificationMatrix M = build_M(s.A, s.W, in.v, in.w, in.x, in.y, gx, gy);
      const KernelCriterion c = block_kernel_criterion(M, in.p);
      CHECK(c.equivalent());
      CHECK(c.kernel_nonzero);
      CHECK(check_block_structure(M, in.p));
    }
  }

  TEST_CASE("kernel sweeps") {
    for (const char* t : {"B2", "A3"}) {
      const Setup s(t);
      const KernelReport r = verify_kernel_nonzero(s.A, s.W, 5, 42);
      CHECK_MESSAGE(r.ok(), t);
      CHECK(r.matrices == r.instances * 5);
    }
  }

  TEST_CASE("cover profiles") {
    const Setup s("B3");
    const ProfileReport r = check_cover_profiles(s.W);
    CHECK(r.ok());
    CHECK(r.covers == eligible_covers(s.W).size());
    CHECK(r.interleaved + r.triangular == r.covers);
    CHECK(r.interleaved > 0);
    for (WeylElement w = 0; w < s.W.size(); ++w)
      for (int i = 0; i < s.W.rank(); ++i) {
        const WeylElement v = s.W.right_mult(w, i);
        if (s.W.length(v) > s.W.length(w) || !s.W.inversions(v).is_subset_of(s.W.inversions(w))) continue;
        CHECK(cover_profile(s.W, v, w).gammas.empty());
      }
  }

  TEST_CASE("inversion counts along root strings") {
    const Setup a2("A2");
    const WeylElement w = a2.W.from_word({0, 1});
    CHECK(inversions_cover_check(a2.W, w, 1));
    const RootSubset phi_w = a2.W.inversions(w), phi_v = a2.W.inversions(a2.W.right_mult(w, 1));
    const int a12 = a2.roots->find_or_throw(vec({1, 1}));
    CHECK(static_cast<int>(phi_w.test(0)) + static_cast<int>(phi_w.test(a12)) == 1);
    CHECK(static_cast<int>(phi_v.test(0)) + static_cast<int>(phi_v.test(a12)) == 1);
    CHECK_THROWS_AS(inversions_cover_check(a2.W, a2.W.identity(), 0), PreconditionError);
    for (const char* t : {"B3", "D4"}) {
      const Setup s(t);
      std::size_t covers = 0;
      for (WeylElement x = 0; x < s.W.size(); ++x)
        for (int beta = 0; beta < s.roots->num_positive(); ++beta) {
          if (!bruhat_covers(s.W, s.W.multiply(x, s.W.reflection(beta)), x)) continue;
          ++covers;
          CHECK(inversions_cover_check(s.W, x, beta));
        }
      CHECK(covers > 0);
    }
  }
}
