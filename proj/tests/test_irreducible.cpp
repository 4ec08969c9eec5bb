#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "doctest.h"

#include "bkcheck/errors.hpp"
#include "bkcheck/irreducible.hpp"
#include "bkcheck/lp.hpp"

using namespace bkcheck;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

WeylGroup group(const char* type) {
  return WeylGroup::enumerate(std::make_shared<const RootSystem>(build_root_system(type)));
}

RationalVector rational(const IntVector& v) { return v.cast<Rational>(); }

/// Positive roots of a subspace spanned by roots, and a cone-membership test over them.
struct SpanFlat {
  std::vector<int> members;
  bool contains(int r) const { return std::binary_search(members.begin(), members.end(), r); }
  bool in_cone(const RootSystem& R, const IntVector& target) const {
    RationalMatrix gens(R.rank(), static_cast<Eigen::Index>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) gens.col(static_cast<Eigen::Index>(k)) = rational(R.coords(members[k]));
    return cone_membership(gens, rational(target)).has_value();
  }
};

SpanFlat flat_of(const RootSystem& R, const std::vector<int>& spanning) {
  RationalMatrix basis(static_cast<Eigen::Index>(spanning.size()), R.rank());
  for (std::size_t k = 0; k < spanning.size(); ++k) basis.row(static_cast<Eigen::Index>(k)) = rational(R.coords(spanning[k])).transpose();
  const auto dim = exact_rank(basis);
  SpanFlat f;
  for (int r = 0; r < R.num_positive(); ++r) {
    RationalMatrix ext(basis.rows() + 1, R.rank());
    ext << basis, rational(R.coords(r)).transpose();
    if (exact_rank(ext) == dim) f.members.push_back(r);
  }
  return f;
}

/// Every proper subspace spanned by positive roots, up to dimension rank - 1, generated
/// from subsets of rank - 1 roots and deduplicated by their root content.
std::vector<SpanFlat> all_proper_flats(const RootSystem& R) {
  std::set<std::vector<int>> seen;
  std::vector<SpanFlat> out;
  const int n = R.num_positive(), k = R.rank() - 1;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      SpanFlat f = flat_of(R, pick);
      RationalMatrix check(static_cast<Eigen::Index>(f.members.size()), R.rank());
      for (std::size_t i = 0; i < f.members.size(); ++i) check.row(static_cast<Eigen::Index>(i)) = rational(R.coords(f.members[i])).transpose();
      if (exact_rank(check) < R.rank() && seen.insert(f.members).second) out.push_back(std::move(f));
      return;
    }
    for (int r = start; r < n; ++r) {
      pick[static_cast<std::size_t>(depth)] = r;
      rec(r + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

bool oracle_reducible(const RootSystem& R, const std::vector<SpanFlat>& flats, const Triple& t) {
  const IntVector a = R.coords(t.phi) - R.coords(t.beta);
  const IntVector b = R.coords(t.gamma) - R.coords(t.phi);
  for (const auto& f : flats)
    if (f.contains(t.beta) && f.in_cone(R, a) && f.in_cone(R, b)) return true;
  return false;
}

struct NaiveCombi {
  std::size_t instances = 0;
  std::size_t violations = 0;
};

template <typename Filter>
NaiveCombi naive_combi(const WeylGroup& W, Filter&& keep) {
  const RootSystem& R = W.roots();
  NaiveCombi out;
  for (WeylElement x = 0; x < W.size(); ++x) {
    if (!keep(x)) continue;
    for (WeylElement y = 0; y < W.size(); ++y) {
      if (!keep(y) || W.inversions(x).intersects(W.inversions(y))) continue;
      const RootSubset p1 = W.inversions(x), p2 = W.inversions(y), p3 = p1 | p2;
      if (!is_biconvex(R, p3)) continue;
      for (int beta : p1.indices())
        for (int gamma = 0; gamma < R.num_positive(); ++gamma) {
          if (p3.test(gamma)) continue;
          const int s = R.add(gamma, beta);
          if (s < 0 || !p3.test(s)) continue;
          ++out.instances;
          if (p2.intersects(interval(R, beta, gamma))) ++out.violations;
        }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("irreducible") {
  TEST_CASE("candidates") {
    for (int n = 1; n <= 6; ++n) {
      const RootSystem R = build_root_system('A', n);
      CHECK(candidate_triples(R, SumCondition::GammaPlusBeta).empty());
      CHECK(candidate_triples(R, SumCondition::GammaPlusPhi).empty());
    }
    CHECK(candidate_triples(build_root_system("B2"), SumCondition::GammaPlusBeta).empty());
    const RootSystem G2 = build_root_system("G2");
    const Triple t = make_triple(G2, 1, G2.find_or_throw(vec({1, 1})), G2.find_or_throw(vec({3, 1})));
    const auto c = candidate_triples(G2, SumCondition::GammaPlusBeta);
    CHECK(std::find(c.begin(), c.end(), t) != c.end());
    for (const Triple& x : c) {
      CHECK(x.gamma_plus_beta);
      CHECK(G2.dominance_leq(x.beta, x.phi));
      CHECK(G2.dominance_leq(x.phi, x.gamma));
      CHECK(x.phi_plus_beta == (G2.add(x.phi, x.beta) >= 0));
    }
    CHECK_THROWS_AS(make_triple(G2, 0, 1, 2), PreconditionError);
    CHECK(parse_sum_condition("gamma+phi") == SumCondition::GammaPlusPhi);
    CHECK_THROWS_AS(parse_sum_condition("phi+beta"), ValidationError);
  }

  TEST_CASE("reductions named in the classification") {
    const RootSystem B4 = build_root_system("B4");
    const Triple b4 = make_triple(B4, 2, B4.find_or_throw(vec({1, 1, 1, 1})), B4.find_or_throw(vec({1, 1, 1, 2})));
    const auto w = is_reducible(B4, b4, 3);
    REQUIRE(w);
    CHECK(verify_witness(B4, b4, *w));
    const SpanFlat f = flat_of(B4, {2, B4.find_or_throw(vec({1, 1, 0, 0})), 3});
    CHECK(f.in_cone(B4, B4.coords(b4.phi) - B4.coords(b4.beta)));
    CHECK(f.in_cone(B4, B4.coords(b4.gamma) - B4.coords(b4.phi)));

    const RootSystem D5 = build_root_system("D5");
    const Triple d5 = make_triple(D5, 2, D5.find_or_throw(vec({0, 0, 1, 1, 1})), D5.find_or_throw(vec({1, 1, 1, 1, 1})));
    const auto wd = is_reducible(D5, d5, 4);
    REQUIRE(wd);
    CHECK(verify_witness(D5, d5, *wd));
    const SpanFlat g = flat_of(D5, {D5.find_or_throw(vec({1, 1, 0, 0, 0})), 2, 3, 4});
    CHECK(g.in_cone(D5, D5.coords(d5.phi) - D5.coords(d5.beta)));
    CHECK(g.in_cone(D5, D5.coords(d5.gamma) - D5.coords(d5.phi)));

    const RootSystem G2 = build_root_system("G2");
    CHECK_FALSE(is_reducible(G2, make_triple(G2, 1, G2.find_or_throw(vec({1, 1})), G2.find_or_throw(vec({3, 1}))), 1));
  }

  TEST_CASE("reduction search agrees with the span and cone oracle") {
    for (const char* t : {"G2", "B3", "C3", "B4", "C4", "D4", "F4", "B5", "D5"}) {
      const RootSystem R = build_root_system(t);
      const auto flats = all_proper_flats(R);
      const ReductionSearch search(R, R.rank() - 1);
      for (SumCondition cond : {SumCondition::GammaPlusBeta, SumCondition::GammaPlusPhi})
        for (const Triple& x : candidate_triples(R, cond)) {
          const auto w = search.find(x);
          REQUIRE_MESSAGE(w.has_value() == oracle_reducible(R, flats, x), t);
          if (w) CHECK(verify_witness(R, x, *w));
        }
    }
  }

  TEST_CASE("tampered witnesses are rejected") {
    const RootSystem B4 = build_root_system("B4");
    const Triple t = make_triple(B4, 2, B4.find_or_throw(vec({1, 1, 1, 1})), B4.find_or_throw(vec({1, 1, 1, 2})));
    auto w = is_reducible(B4, t, 3);
    REQUIRE(w);
    ReductionWitness bad = *w;
    bad.phi_minus_beta(0) += 1;
    CHECK_FALSE(verify_witness(B4, t, bad));
    bad = *w;
    bad.gamma_minus_phi(0) = -bad.gamma_minus_phi(0) - 1;
    CHECK_FALSE(verify_witness(B4, t, bad));
  }

  TEST_CASE("G2 and E6 lists") {
    const RootSystem G2 = build_root_system("G2");
    const auto g = enumerate_irreducible(G2, SumCondition::GammaPlusBeta, false);
    std::set<std::array<int, 3>> got;
    for (const Triple& t : g) got.insert({t.beta, t.phi, t.gamma});
    const int a1 = 0, a2 = 1, a12 = G2.find_or_throw(vec({1, 1})), a212 = G2.find_or_throw(vec({2, 1})),
              a312 = G2.find_or_throw(vec({3, 1}));
    CHECK(got == std::set<std::array<int, 3>>{{a1, a12, a212}, {a2, a12, a312}, {a2, a212, a312}});

    const RootSystem E6 = build_root_system("E6");
    const auto e = enumerate_irreducible(E6, SumCondition::GammaPlusBeta, false);
    REQUIRE(e.size() == 2);
    for (const Triple& t : e) CHECK(t.beta == 3);
  }

  TEST_CASE("automorphism quotient") {
    const RootSystem D5 = build_root_system("D5");
    CHECK(enumerate_irreducible(D5, SumCondition::GammaPlusBeta, true).size() == 3);
    CHECK(enumerate_irreducible(D5, SumCondition::GammaPlusBeta, false).size() == 4);
    const RootSystem D4 = build_root_system("D4");
    for (const Triple& t : candidate_triples(D4, SumCondition::GammaPlusBeta)) {
      const Triple r = aut_representative(D4, t);
      CHECK(aut_representative(D4, r) == r);
    }
  }

  TEST_CASE("rank limits") {
    CHECK(enumerate_irreducible(build_root_system("A1"), SumCondition::GammaPlusBeta, false).empty());
    CHECK_THROWS_AS(enumerate_irreducible(build_root_system("E8"), SumCondition::GammaPlusBeta, false), ResourceError);
  }

  TEST_CASE("biconvex decompositions against the naive scan") {
    for (const char* t : {"A3", "B3", "C3", "G2", "B2"}) {
      const WeylGroup W = group(t);
      const CombiReport r = verify_combi(W, 2);
      const NaiveCombi n = naive_combi(W, [](WeylElement) { return true; });
      CHECK(r.ok());
      CHECK(n.violations == 0);
      CHECK_MESSAGE(r.instances == n.instances, t);
    }
  }

  TEST_CASE("restriction to a parabolic subsystem matches the subsystem itself") {
    const WeylGroup B3 = group("B3");
    const RootSystem& R = B3.roots();
    // Elements of the parabolic subgroup on {a2, a3}: inversions avoid a1 support.
    auto in_parabolic = [&](WeylElement x) {
      bool ok = true;
      B3.inversions(x).for_each([&](int r) { ok = ok && R.coords(r)(0) == 0; });
      return ok;
    };
    const NaiveCombi restricted = naive_combi(B3, in_parabolic);
    CHECK(restricted.instances > 0);
    CHECK(restricted.violations == 0);
    CHECK(restricted.instances == verify_combi(group("B2")).instances);
  }

  TEST_CASE("gamma + beta already lies in the first set") {
    for (const char* t : {"B3", "D4"}) {
      const WeylGroup W = group(t);
      const RootSystem& R = W.roots();
      std::size_t checked = 0;
      for_each_decomposition(W, [&](const Decomposition& d) {
        const RootSubset p1 = W.inversions(d.x), p2 = W.inversions(d.y), p3 = W.inversions(d.w);
        for (int beta : p1.indices())
          for (int gamma = 0; gamma < R.num_positive(); ++gamma) {
            const int s = R.add(gamma, beta);
            if (p3.test(gamma) || s < 0 || !p3.test(s)) continue;
            ++checked;
            CHECK(check_thetax(R, p1, p2, p3, beta, gamma));
          }
      });
      CHECK(checked > 0);
    }
    const WeylGroup B3 = group("B3");
    const RootSubset all = B3.roots().all_positive();
    CHECK_THROWS_AS(check_thetax(B3.roots(), all, all, all, 0, 1), PreconditionError);
  }

  TEST_CASE("Killing form trichotomy") {
    const RootSystem A2 = build_root_system("A2");
    const int a12 = A2.find_or_throw(vec({1, 1}));
    CHECK(killing_trichotomy(A2, 0, 1).value == -1);
    CHECK(A2.add(0, 1) == a12);
    const KillingCase k = killing_trichotomy(A2, 0, a12);
    CHECK(k.value == 1);
    CHECK(k.verified);
    const RootSystem D4 = build_root_system("D4");
    CHECK(killing_trichotomy(D4, 0, 2).value == 0);
    for (const char* t : {"D4", "E6", "A4"}) {
      const RootSystem R = build_root_system(t);
      for (int a = 0; a < R.num_roots(); ++a)
        for (int b = 0; b < R.num_roots(); ++b)
          if (a != b && a != R.negative(b)) CHECK(killing_trichotomy(R, a, b).verified);
    }
    CHECK_THROWS_AS(killing_trichotomy(build_root_system("B3"), 0, 1), PreconditionError);
  }

  TEST_CASE("decomposition bound") {
    const RootSystem A2 = build_root_system("A2");
    CHECK(decomposition_bound(A2, 0, 0));
    CHECK(decomposition_bound(A2, 0, A2.find_or_throw(vec({1, 1}))));
    for (const char* t : {"D5", "E6"}) {
      const RootSystem R = build_root_system(t);
      for (int b = 0; b < R.num_positive(); ++b)
        for (int g = 0; g < R.num_positive(); ++g)
          if (R.dominance_leq(b, g)) CHECK(decomposition_bound(R, b, g));
    }
  }
}
