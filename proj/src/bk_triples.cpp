#include "bkcheck/bk_triples.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bkcheck/errors.hpp"
#include "bkcheck/lp.hpp"
#include "bkcheck/parallel.hpp"

namespace bkcheck {

SymmetricTriple symmetric_form(const WeylGroup& W, const BKTriple& t) { return {W.dual(t.w), t.u, t.v}; }

BKTriple from_symmetric(const WeylGroup& W, const SymmetricTriple& s) {
  // w0 is an involution, so w = w0 w1.
  return {s.w2, s.w3, W.dual(s.w1)};
}

std::optional<WeylElement> bk_complete(const WeylGroup& W, WeylElement u, WeylElement v) {
  if ((W.inversions(u) | W.inversions(v)) != W.roots().all_positive()) return std::nullopt;
  return W.find_by_inversions(W.inversions(u) & W.inversions(v));
}

std::vector<BKTriple> enumerate_bk_triples(const WeylGroup& W, int jobs) {
  return parallel_collect<BKTriple>(W.size(), jobs, [&](int begin, int end) {
    std::vector<BKTriple> out;
    for_each_bk_triple(W, [&](const BKTriple& t) { out.push_back(t); }, begin, end);
    return out;
  });
}

std::vector<BKTriple> sample_triples(const std::vector<BKTriple>& triples, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k >= triples.size()) return triples;
  std::vector<std::size_t> index(triples.size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) std::swap(index[i], index[i + rng() % (index.size() - i)]);
  index.resize(k);
  std::sort(index.begin(), index.end());
  std::vector<BKTriple> out;
  out.reserve(k);
  for (std::size_t i : index) out.push_back(triples[i]);
  return out;
}

Rational bk_constant(const WeylGroup& W, WeylElement u, WeylElement v, WeylElement w, const CupProvider& cup) {
  const auto completed = bk_complete(W, u, v);
  if (!completed || *completed != w) return Rational(0);
  return cup(u, v, w);
}

bool check_bruhat_corollary(const WeylGroup& W, const BKTriple& t) {
  const SymmetricTriple s = symmetric_form(W, t);
  const WeylElement ws[3] = {s.w1, s.w2, s.w3};
  for (WeylElement x = 0; x < W.size(); ++x) {
    bool below_all = true;
    for (WeylElement wi : ws) {
      if (W.length(x) > W.length(wi) || !bruhat_leq(W, W.multiply(wi, x), wi)) {
        below_all = false;
        break;
      }
    }
    if (below_all && x != W.identity()) return false;
    if (!below_all && x == W.identity()) return false;
  }
  return true;
}

bool check_descent_identities(const WeylGroup& W, const BKTriple& t) {
  const SymmetricTriple s = symmetric_form(W, t);
  const int r = W.rank();
  const int d = W.descent_count(s.w1) + W.descent_count(s.w2) + W.descent_count(s.w3);
  const int dual = W.descent_count(W.dual(s.w1)) + W.descent_count(W.dual(s.w2)) + W.descent_count(W.dual(s.w3));
  return d == 2 * r && dual == r;
}

DescentQuestionOutcome descent_question(const WeylGroup& W, const BKTriple& t) {
  const SymmetricTriple s = symmetric_form(W, t);
  const WeylElement ws[3] = {s.w1, s.w2, s.w3};
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  DescentQuestionOutcome out;
  for (int p = 0; p < 3; ++p) {
    const WeylElement a = ws[kPairs[p][0]];
    const WeylElement b = ws[kPairs[p][1]];
    const int lhs = W.descent_count(W.dual(a)) + W.descent_count(W.dual(b));
    const int ab = W.descent_count(W.multiply(a, W.inverse(b)));
    const int ba = W.descent_count(W.multiply(b, W.inverse(a)));
    out.pair_holds[static_cast<std::size_t>(p)] = lhs == ab || lhs == ba;
  }
  return out;
}

bool check_descent_question(const WeylGroup& W, const BKTriple& t) { return descent_question(W, t).holds(); }

Rational rho_product(const WeylGroup& W, WeylElement w) {
  const RootSystem& R = W.roots();
  Rational p = 1;
  W.inversions(W.inverse(w)).for_each([&](int a) { p *= pairing(R, R.rho(), a); });
  return p;
}

bool check_rho_product(const WeylGroup& W, WeylElement w, WeylElement w1, WeylElement w2) {
  const RootSubset &i = W.inversions(w), &i1 = W.inversions(w1), &i2 = W.inversions(w2);
  if (i1.intersects(i2) || (i1 | i2) != i) throw PreconditionError("check_rho_product needs Phi(w) = Phi(w1) disjoint-union Phi(w2)");
  return rho_product(W, w) == rho_product(W, w1) * rho_product(W, w2);
}

namespace {

/// Root-coordinate image of the fundamental weights under w^{-1}.
RationalMatrix inverse_on_weights(const WeylGroup& W, WeylElement w) {
  return W.matrix(W.inverse(w)).cast<Rational>() * W.roots().fundamental_weights();
}

}  // namespace

std::optional<WeightTriple> face_witness(const WeylGroup& W, const BKTriple& t) {
  const SymmetricTriple s = symmetric_form(W, t);
  const int r = W.rank();
  RationalMatrix b(r, 3 * r);
  b.block(0, 0, r, r) = inverse_on_weights(W, s.w1);
  b.block(0, r, r, r) = inverse_on_weights(W, s.w2);
  b.block(0, 2 * r, r, r) = inverse_on_weights(W, s.w3);
  // lambda = 1 + z with z >= 0; the system is homogeneous so this loses no generality.
  const RationalVector ones = RationalVector::Constant(3 * r, Rational(1));
  const RationalVector rhs = -(b * ones);
  const auto z = find_nonnegative_solution(b, rhs);
  if (!z) return std::nullopt;
  const RationalVector lambda = ones + *z;
  WeightTriple out{lambda.segment(0, r), lambda.segment(r, r), lambda.segment(2 * r, r)};
  if (!verify_face_witness(W, t, out)) throw std::logic_error("face witness failed re-substitution");
  return out;
}

bool verify_face_witness(const WeylGroup& W, const BKTriple& t, const WeightTriple& lambda) {
  const SymmetricTriple s = symmetric_form(W, t);
  for (const RationalVector* l : {&lambda.lambda1, &lambda.lambda2, &lambda.lambda3})
    for (Eigen::Index k = 0; k < l->size(); ++k)
      if ((*l)(k) <= 0) return false;
  const RationalVector sum = inverse_on_weights(W, s.w1) * lambda.lambda1 + inverse_on_weights(W, s.w2) * lambda.lambda2 +
                             inverse_on_weights(W, s.w3) * lambda.lambda3;
  for (Eigen::Index k = 0; k < sum.size(); ++k)
    if (sum(k) != 0) return false;
  return true;
}

}  // namespace bkcheck
