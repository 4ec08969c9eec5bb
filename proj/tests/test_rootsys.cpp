#include "doctest.h"

#include "bkcheck/errors.hpp"
#include "bkcheck/root_system.hpp"

using namespace bkcheck;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

const char* kAllTypes[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B5", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8", "A1xA2", "B2+G2"};

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("positive root counts match the classical values") {
    for (const char* t : kAllTypes) {
      const RootSystem R = build_root_system(t);
      int expected = 0;
      for (const auto& c : R.components()) expected += classical_positive_count(c);
      CHECK_MESSAGE(R.num_positive() == expected, t);
      CHECK(R.num_roots() == 2 * R.num_positive());
    }
    CHECK(build_root_system('F', 4).num_positive() == 24);
    CHECK(build_root_system('A', 1).num_positive() == 1);
  }

  TEST_CASE("G2 highest root is 3a1 + 2a2") {
    const RootSystem R = build_root_system("G2");
    CHECK(R.num_positive() == 6);
    CHECK(R.coords(R.num_positive() - 1) == vec({3, 2}));
  }

  TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_AS(build_root_system("D3"), ValidationError);
    CHECK_THROWS_AS(build_root_system("E9"), ValidationError);
    CHECK_THROWS_AS(build_root_system("B1"), ValidationError);
    CHECK_THROWS_AS(build_root_system("X2"), ValidationError);
    CHECK_THROWS_AS(build_root_system('G', 3), ValidationError);
  }

  TEST_CASE("root sums") {
    const RootSystem A2 = build_root_system("A2");
    const int a1 = 0, a2 = 1, a12 = A2.find_or_throw(vec({1, 1}));
    auto s = root_sum(A2, A2.root(a1), A2.root(a2));
    REQUIRE(s);
    CHECK(s->index == a12);
    CHECK_FALSE(root_sum(A2, A2.root(a12), A2.root(a1)));
    const RootSystem G2 = build_root_system("G2");
    auto g = root_sum(G2, G2.root(G2.find_or_throw(vec({1, 1}))), G2.root(0));
    REQUIRE(g);
    CHECK(g->coords == vec({2, 1}));
  }

  TEST_CASE("addition table agrees with coordinate lookup") {
    for (const char* t : kAllTypes) {
      const RootSystem R = build_root_system(t);
      for (int a = 0; a < R.num_roots(); ++a)
        for (int b = 0; b < R.num_roots(); ++b) {
          const IntVector sum = R.coords(a) + R.coords(b);
          const auto found = R.find(sum);
          REQUIRE(R.add(a, b) == (found ? *found : -1));
          if (found) CHECK(R.height(*found) == R.height(a) + R.height(b));
        }
    }
  }

  TEST_CASE("intervals in the dominance order") {
    const RootSystem A1 = build_root_system("A1");
    CHECK(interval(A1, 0, 0) == RootSubset::singleton(0));
    const RootSystem G2 = build_root_system("G2");
    const RootSubset iv = interval(G2, 1, G2.num_positive() - 1);
    CHECK(iv.count() == 5);
    CHECK_FALSE(iv.test(0));
    const RootSystem D4 = build_root_system("D4");
    const int b = 1, g = D4.find_or_throw(vec({1, 1, 1, 1}));
    CHECK(interval(D4, b, g, IntervalKind::Open).test(D4.find_or_throw(vec({1, 1, 0, 0}))));
    CHECK(interval(D4, g, b).empty());
  }

  TEST_CASE("form, rho and fundamental weights") {
    for (const char* t : kAllTypes) {
      const RootSystem R = build_root_system(t);
      for (int i = 0; i < R.rank(); ++i) {
        CHECK(coroot_pairing(R, R.rho(), i) == 1);
        for (int j = 0; j < R.rank(); ++j)
          CHECK(coroot_pairing(R, R.fundamental_weights().col(j), i) == (i == j ? 1 : 0));
      }
      for (int r = 0; r < R.num_roots(); ++r) {
        const Rational n = R.norm2(r);
        CHECK((n == 2 || n == 1 || n == Rational(2, 3)));
      }
    }
    const RootSystem A2 = build_root_system("A2");
    CHECK(A2.form(0, 1) == -1);
    const RootSystem D4 = build_root_system("D4");
    CHECK(D4.form(0, 2) == 0);
  }

  TEST_CASE("simple reflections permute the roots") {
    for (const char* t : kAllTypes) {
      const RootSystem R = build_root_system(t);
      for (int i = 0; i < R.rank(); ++i) {
        std::vector<int> seen(static_cast<std::size_t>(R.num_roots()), 0);
        for (int r = 0; r < R.num_roots(); ++r) {
          const int image = R.simple_reflection(i)[static_cast<std::size_t>(r)];
          ++seen[static_cast<std::size_t>(image)];
          // s_i(r) = r - <r, a_i^v> a_i
          IntVector expected = R.coords(r);
          expected(i) -= R.pair_with_simple_coroot(r, i);
          CHECK(R.coords(image) == expected);
        }
        for (int c : seen) CHECK(c == 1);
      }
    }
  }

  TEST_CASE("dominance order is graded by height") {
    const RootSystem R = build_root_system("F4");
    for (int a = 0; a < R.num_positive(); ++a)
      for (int b = 0; b < R.num_positive(); ++b)
        if (a != b && R.dominance_leq(a, b)) CHECK(R.height(a) < R.height(b));
  }

  TEST_CASE("diagram automorphisms preserve addition and the form") {
    for (const char* t : {"A3", "D4", "E6", "D5"}) {
      const RootSystem R = build_root_system(t);
      CHECK(R.automorphisms().size() >= 2);
      for (const auto& p : R.automorphisms())
        for (int a = 0; a < R.num_roots(); ++a)
          for (int b = 0; b < R.num_roots(); ++b) {
            const int pa = R.apply_automorphism(p, a), pb = R.apply_automorphism(p, b);
            CHECK(R.form(pa, pb) == R.form(a, b));
            const int s = R.add(a, b);
            CHECK(R.add(pa, pb) == (s < 0 ? -1 : R.apply_automorphism(p, s)));
          }
    }
    CHECK(build_root_system("D4").automorphisms().size() == 6);
  }

  TEST_CASE("dominance never crosses components of a reducible system") {
    const RootSystem R = build_root_system("A2xB2");
    CHECK(R.components().size() == 2);
    for (int a = 0; a < R.num_positive(); ++a)
      for (int b = 0; b < R.num_positive(); ++b) {
        if (!R.dominance_leq(a, b)) continue;
        int ca = -1, cb = -1;
        for (int i = 0; i < R.rank(); ++i) {
          if (R.coords(a)(i) != 0) ca = R.component_of_simple(i);
          if (R.coords(b)(i) != 0) cb = R.component_of_simple(i);
        }
        CHECK(ca == cb);
      }
  }

  TEST_CASE("json round trip") {
    const RootSystem R = build_root_system("F4");
    const RootSystem S = root_system_from_json(to_json(R));
    CHECK(S.label() == R.label());
    CHECK(to_json(S) == to_json(R));
    nlohmann::json bad = to_json(R);
    bad["format_version"] = 2;
    CHECK_THROWS_AS(root_system_from_json(bad), ValidationError);
  }
}
