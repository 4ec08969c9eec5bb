#include "bkcheck/poset.hpp"

#include <algorithm>
#include <numeric>

#include "bkcheck/errors.hpp"

namespace bkcheck {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const int n = size();
  for (const auto& row : leq_)
    if (static_cast<int>(row.size()) != n) throw ValidationError("poset relation is not square");
  for (int a = 0; a < n; ++a) {
    if (!this->leq(a, a)) throw ValidationError("poset relation is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a)) throw ValidationError("poset relation is not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c)) throw ValidationError("poset relation is not transitive");
    }
  }
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  while (static_cast<int>(order_.size()) < n) {
    for (int a = 0; a < n; ++a) {
      if (placed[static_cast<std::size_t>(a)]) continue;
      bool minimal = true;
      for (int b = 0; b < n && minimal; ++b)
        if (!placed[static_cast<std::size_t>(b)] && lt(b, a)) minimal = false;
      if (minimal) {
        placed[static_cast<std::size_t>(a)] = true;
        order_.push_back(a);
        break;
      }
    }
  }
}

std::vector<int> FinitePoset::interval(int a, int b) const {
  std::vector<int> out;
  for (int c : order_)
    if (leq(a, c) && leq(c, b)) out.push_back(c);
  return out;
}

FinitePoset FinitePoset::subposet(const std::vector<int>& elements) const {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = leq(elements[i], elements[j]);
  return FinitePoset(std::move(rel));
}

FinitePoset random_poset(int n, std::mt19937_64& rng, int edge_per_mille) {
  if (n < 1) throw ValidationError("random_poset needs n >= 1");
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(label[static_cast<std::size_t>(i)], label[rng() % static_cast<std::uint64_t>(i + 1)]);
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])][static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 1000) < edge_per_mille)
        rel[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])][static_cast<std::size_t>(label[static_cast<std::size_t>(j)])] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return FinitePoset(std::move(rel));
}

FinitePoset bruhat_interval_poset(const WeylGroup& W, WeylElement u, WeylElement w, std::vector<WeylElement>* elements) {
  if (!bruhat_leq(W, u, w)) throw PreconditionError("bruhat_interval_poset needs u <= w");
  std::vector<WeylElement> members;
  for (WeylElement x = 0; x < W.size(); ++x)
    if (bruhat_leq(W, u, x) && bruhat_leq(W, x, w)) members.push_back(x);
  const std::size_t n = members.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = bruhat_leq(W, members[i], members[j]);
  if (elements) *elements = members;
  return FinitePoset(std::move(rel));
}

namespace {

void require_listed_order(const FinitePoset& P) {
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (P.lt(i, j)) throw PreconditionError("chain matrix poset must be numbered along a linear extension");
}

}  // namespace

void check_chain_matrix(const FinitePoset& P, const ChainMatrix& M) {
  const int k = P.size() - 1;
  if (k < 1 || M.m.rows() != k || M.m.cols() != k) throw PreconditionError("chain matrix must be k x k for k + 1 elements");
  require_listed_order(P);
  for (int i = 0; i < k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j && M.at(i, j) != 1) throw PreconditionError("chain matrix needs unit diagonal entries m_ii");
      if (M.at(i, j) != 0 && !P.leq(i, j)) throw PreconditionError("chain matrix has a nonzero entry off the order");
    }
}

ChainMatrix random_chain_matrix(const FinitePoset& P, std::mt19937_64& rng) {
  const int k = P.size() - 1;
  ChainMatrix M{RationalMatrix::Zero(k, k)};
  for (int i = 0; i < k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) {
        M.m(i, j - 1) = 1;
      } else if (P.leq(i, j)) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 4) + 1;
        M.m(i, j - 1) = Rational(num, den);
      }
    }
  return M;
}

Rational chain_expansion_det(const FinitePoset& P, const ChainMatrix& M) {
  check_chain_matrix(P, M);
  const int k = P.size() - 1;
  // f[j]: signed sum over chains phi_0 < ... < phi_j, each interior element contributing -1.
  std::vector<Rational> f(static_cast<std::size_t>(k + 1));
  f[0] = 1;
  for (int j = 1; j <= k; ++j) {
    Rational sum = 0;
    for (int i = 0; i < j; ++i) {
      if (!P.lt(i, j) || (i > 0 && !P.lt(0, i))) continue;
      const Rational weight = i == 0 ? Rational(1) : Rational(-f[static_cast<std::size_t>(i)]);
      sum += weight * M.at(i, j);
    }
    f[static_cast<std::size_t>(j)] = sum;
  }
  const Rational chains = (k % 2 == 0 ? -1 : 1) * f[static_cast<std::size_t>(k)];
  const Rational direct = exact_determinant(M.m);
  if (chains != direct) throw std::logic_error("chain expansion disagrees with the determinant: " + chains.str() + " vs " + direct.str());
  return chains;
}

std::int64_t mobius_bruteforce(const FinitePoset& P, int a, int b) {
  if (!P.leq(a, b)) throw PreconditionError("mobius_bruteforce needs a <= b");
  const std::vector<int> elems = P.interval(a, b);
  std::vector<std::int64_t> mu(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == a) {
      mu[i] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (P.lt(elems[j], elems[i])) sum += mu[j];
    mu[i] = -sum;
  }
  return mu.back();
}

std::int64_t mobius_via_det(const FinitePoset& P, int a, int b) {
  if (!P.lt(a, b)) throw PreconditionError("mobius_via_det needs a < b");
  const std::vector<int> elems = P.interval(a, b);
  const int k = static_cast<int>(elems.size()) - 1;
  RationalMatrix m = RationalMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 1; j <= k; ++j)
      if (P.leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])) m(i, j - 1) = 1;
  const Rational det = exact_determinant(m);
  return static_cast<std::int64_t>(k % 2 == 0 ? det : Rational(-det));
}

void check_poset(const FinitePoset& P, std::mt19937_64& rng, MobiusReport& report) {
  ++report.posets;
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < P.size(); ++b) {
      if (!P.lt(a, b)) continue;
      ++report.intervals;
      if (mobius_via_det(P, a, b) != mobius_bruteforce(P, a, b)) ++report.mobius_mismatches;
      const FinitePoset sub = P.subposet(P.interval(a, b));
      try {
        chain_expansion_det(sub, random_chain_matrix(sub, rng));
      } catch (const std::logic_error&) {
        ++report.det_mismatches;
      }
    }
}

MobiusReport mobius_selftest(int count, std::uint64_t seed, int max_size) {
  std::mt19937_64 rng(seed);
  MobiusReport report;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - 1));
    check_poset(random_poset(n, rng), rng, report);
  }
  return report;
}

MobiusReport check_bruhat_intervals(const WeylGroup& W, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(W.size()), std::vector<bool>(static_cast<std::size_t>(W.size())));
  for (WeylElement u = 0; u < W.size(); ++u)
    for (WeylElement w = 0; w < W.size(); ++w) rel[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = bruhat_leq(W, u, w);
  const FinitePoset P(std::move(rel));
  MobiusReport report;
  check_poset(P, rng, report);
  report.posets = 1;
  return report;
}

}  // namespace bkcheck
