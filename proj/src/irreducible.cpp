#include "bkcheck/irreducible.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "bkcheck/errors.hpp"
#include "bkcheck/parallel.hpp"

namespace bkcheck {

std::string to_string(SumCondition c) { return c == SumCondition::GammaPlusBeta ? "gamma+beta" : "gamma+phi"; }

SumCondition parse_sum_condition(const std::string& text) {
  if (text == "gamma+beta") return SumCondition::GammaPlusBeta;
  if (text == "gamma+phi") return SumCondition::GammaPlusPhi;
  throw ValidationError("unknown sum condition '" + text + "' (expected gamma+beta or gamma+phi)");
}

Triple make_triple(const RootSystem& R, int beta, int phi, int gamma) {
  const int n = R.num_positive();
  if (beta < 0 || phi < 0 || gamma < 0 || beta >= n || phi >= n || gamma >= n)
    throw PreconditionError("triple roots must be positive");
  if (beta == phi || phi == gamma || !R.dominance_leq(beta, phi) || !R.dominance_leq(phi, gamma))
    throw PreconditionError("triple is not a strict dominance chain");
  return Triple{beta, phi, gamma, R.add(gamma, beta) >= 0, R.add(gamma, phi) >= 0, R.add(phi, beta) >= 0};
}

std::vector<Triple> candidate_triples(const RootSystem& R, SumCondition cond) {
  const int n = R.num_positive();
  std::vector<Triple> out;
  for (int b = 0; b < n; ++b)
    for (int p = b + 1; p < n; ++p) {
      if (!R.dominance_leq(b, p)) continue;
      for (int g = p + 1; g < n; ++g) {
        if (!R.dominance_leq(p, g)) continue;
        const bool selected = cond == SumCondition::GammaPlusBeta ? R.add(g, b) >= 0 : R.add(g, p) >= 0;
        if (selected) out.push_back(make_triple(R, b, p, g));
      }
    }
  return out;
}

bool verify_witness(const RootSystem& R, const Triple& t, const ReductionWitness& w) {
  const int r = R.rank();
  const auto k = static_cast<Eigen::Index>(w.basis.size());
  if (w.phi_minus_beta.size() != k || w.gamma_minus_phi.size() != k) return false;
  RationalMatrix basis(r, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const int root = w.basis[static_cast<std::size_t>(j)];
    if (root < 0 || !R.is_positive(root)) return false;
    basis.col(j) = R.coords(root).cast<Rational>();
  }
  const Eigen::Index dim = exact_rank(basis);
  if (dim >= r) return false;
  RationalMatrix with_beta(r, k + 1);
  with_beta << basis, R.coords(t.beta).cast<Rational>();
  if (exact_rank(with_beta) != dim) return false;
  for (const RationalVector* c : {&w.phi_minus_beta, &w.gamma_minus_phi})
    for (Eigen::Index j = 0; j < k; ++j)
      if ((*c)(j) < 0) return false;
  const RationalVector d1 = (R.coords(t.phi) - R.coords(t.beta)).cast<Rational>();
  const RationalVector d2 = (R.coords(t.gamma) - R.coords(t.phi)).cast<Rational>();
  return basis * w.phi_minus_beta == d1 && basis * w.gamma_minus_phi == d2;
}

namespace {

/// Simple system and integer coordinates of a positive subsystem closed under the
/// linear span. Every non-simple member is a member plus a simple member, and roots
/// are indexed by height, so a single increasing pass fills the coordinates.
RootFlat describe_flat(const RootSystem& R, const RootSubset& positive) {
  RootFlat f;
  f.positive = positive;
  const std::vector<int> members = positive.indices();
  std::vector<char> decomposable(static_cast<std::size_t>(R.num_positive()), 0);
  for (int a : members)
    for (int b : members)
      if (a < b)
        if (const int c = R.add(a, b); c >= 0 && positive.test(c)) decomposable[static_cast<std::size_t>(c)] = 1;
  for (int a : members)
    if (!decomposable[static_cast<std::size_t>(a)]) f.simple.push_back(a);
  const std::size_t k = f.simple.size();
  f.coordinates.assign(static_cast<std::size_t>(R.num_positive()) * k, 0);
  for (int a : members) {
    const auto pos = std::find(f.simple.begin(), f.simple.end(), a);
    if (pos != f.simple.end()) {
      f.coordinates[static_cast<std::size_t>(a) * k + static_cast<std::size_t>(pos - f.simple.begin())] = 1;
      continue;
    }
    bool done = false;
    for (std::size_t j = 0; j < k && !done; ++j) {
      const int rest = R.add(a, R.negative(f.simple[j]));
      if (rest < 0 || !R.is_positive(rest) || !positive.test(rest)) continue;
      for (std::size_t i = 0; i < k; ++i)
        f.coordinates[static_cast<std::size_t>(a) * k + i] = f.coordinates[static_cast<std::size_t>(rest) * k + i];
      ++f.coordinates[static_cast<std::size_t>(a) * k + j];
      done = true;
    }
    if (!done) throw std::logic_error("flat is not a closed positive subsystem");
  }
  return f;
}

RootSubset reflect_positive(const RootSystem& R, const RootSubset& s, int i) {
  const std::vector<int>& perm = R.simple_reflection(i);
  RootSubset out;
  s.for_each([&](int a) { out.set(R.absolute(perm[static_cast<std::size_t>(a)])); });
  return out;
}

}  // namespace

ReductionSearch::ReductionSearch(const RootSystem& R, int maxdim, std::size_t flat_budget) : roots_(&R), maxdim_(maxdim) {
  const int r = R.rank();
  if (maxdim < 0 || maxdim >= r) throw PreconditionError("reduction search needs 0 <= maxdim < rank");
  std::unordered_set<RootSubset, RootSubsetHash> seen;
  std::vector<RootSubset> order;
  for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
    if (std::popcount(mask) != maxdim) continue;
    RootSubset start;
    for (int a = 0; a < R.num_positive(); ++a) {
      bool inside = true;
      for (int i = 0; i < r; ++i)
        if (R.coords(a)(i) != 0 && !(mask >> i & 1U)) inside = false;
      if (inside) start.set(a);
    }
    if (!seen.insert(start).second) continue;
    // Breadth-first orbit under the simple reflections.
    std::size_t head = order.size();
    order.push_back(start);
    while (head < order.size()) {
      const RootSubset cur = order[head++];
      for (int i = 0; i < r; ++i) {
        RootSubset next = reflect_positive(R, cur, i);
        if (seen.insert(next).second) {
          order.push_back(next);
          if (order.size() > flat_budget)
            throw ResourceError("flat enumeration for " + R.label() + " exceeds " + std::to_string(flat_budget));
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  flats_of_root_.resize(static_cast<std::size_t>(R.num_positive()));
  for (const RootSubset& s : order) {
    const int id = static_cast<int>(flats_.size());
    flats_.push_back(describe_flat(R, s));
    s.for_each([&](int a) { flats_of_root_[static_cast<std::size_t>(a)].push_back(id); });
  }
}

std::optional<ReductionWitness> ReductionSearch::find(const Triple& t) const {
  const RootSystem& R = *roots_;
  if (maxdim_ == 0) return std::nullopt;
  for (int id : flats_of_root_[static_cast<std::size_t>(t.gamma)]) {
    const RootFlat& f = flats_[static_cast<std::size_t>(id)];
    if (!f.positive.test(t.beta) || !f.positive.test(t.phi)) continue;
    const int k = static_cast<int>(f.simple.size());
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      ok = f.coordinate(t.phi, j) >= f.coordinate(t.beta, j) && f.coordinate(t.gamma, j) >= f.coordinate(t.phi, j);
    if (!ok) continue;
    ReductionWitness w{f.simple, RationalVector(k), RationalVector(k)};
    for (int j = 0; j < k; ++j) {
      w.phi_minus_beta(j) = f.coordinate(t.phi, j) - f.coordinate(t.beta, j);
      w.gamma_minus_phi(j) = f.coordinate(t.gamma, j) - f.coordinate(t.phi, j);
    }
    if (!verify_witness(R, t, w)) throw std::logic_error("reduction witness failed re-substitution");
    return w;
  }
  return std::nullopt;
}

std::optional<ReductionWitness> is_reducible(const RootSystem& R, const Triple& t, int maxdim) {
  return ReductionSearch(R, maxdim).find(t);
}

Triple aut_representative(const RootSystem& R, const Triple& t) {
  auto key = [&](const Triple& x) {
    std::vector<int> k;
    for (int a : {x.beta, x.phi, x.gamma})
      for (int i = 0; i < R.rank(); ++i) k.push_back(R.coords(a)(i));
    return k;
  };
  Triple best = t;
  std::vector<int> best_key = key(t);
  for (const auto& perm : R.automorphisms()) {
    const Triple image = make_triple(R, R.apply_automorphism(perm, t.beta), R.apply_automorphism(perm, t.phi),
                                     R.apply_automorphism(perm, t.gamma));
    std::vector<int> k = key(image);
    if (k < best_key) {
      best = image;
      best_key = std::move(k);
    }
  }
  return best;
}

std::vector<Triple> enumerate_irreducible(const RootSystem& R, SumCondition cond, bool up_to_aut) {
  if (R.rank() > 7) throw ResourceError("irreducible-triple search is limited to rank 7");
  if (R.rank() < 2) return {};
  const ReductionSearch search(R, R.rank() - 1);
  std::vector<Triple> out;
  for (const Triple& t : candidate_triples(R, cond)) {
    if (search.find(t)) continue;
    if (up_to_aut) {
      const Triple rep = aut_representative(R, t);
      if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

namespace {

struct CombiPair {
  int gamma;
  int sum;
  RootSubset closed_interval;
};

}  // namespace

CombiReport verify_combi(const WeylGroup& W, int jobs) {
  const RootSystem& R = W.roots();
  const int n = R.num_positive();
  std::vector<std::vector<CombiPair>> by_beta(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b)
    for (int g = 0; g < n; ++g)
      if (const int s = R.add(b, g); g != b && s >= 0)
        by_beta[static_cast<std::size_t>(b)].push_back({g, s, interval(R, b, g)});

  struct Partial {
    std::size_t decompositions = 0, instances = 0, thetax_failures = 0;
    std::vector<CombiViolation> violations;
  };
  auto parts = parallel_collect<Partial>(W.size(), jobs, [&](int begin, int end) {
    Partial p;
    for (WeylElement x = begin; x < end; ++x) {
      const RootSubset& phi1 = W.inversions(x);
      for (WeylElement y = 0; y < W.size(); ++y) {
        if (W.length(x) + W.length(y) > n) continue;
        const RootSubset& phi2 = W.inversions(y);
        if (phi1.intersects(phi2)) continue;
        const RootSubset phi3 = phi1 | phi2;
        if (!W.find_by_inversions(phi3)) continue;
        ++p.decompositions;
        phi1.for_each([&](int b) {
          for (const CombiPair& c : by_beta[static_cast<std::size_t>(b)]) {
            if (phi3.test(c.gamma) || !phi3.test(c.sum)) continue;
            ++p.instances;
            if (!phi1.test(c.sum)) ++p.thetax_failures;
            const RootSubset hit = phi2 & c.closed_interval;
            if (!hit.empty()) p.violations.push_back({x, y, b, c.gamma, hit.first()});
          }
        });
      }
    }
    return std::vector<Partial>{std::move(p)};
  });
  CombiReport report;
  for (Partial& p : parts) {
    report.decompositions += p.decompositions;
    report.instances += p.instances;
    report.thetax_failures += p.thetax_failures;
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  return report;
}

bool check_thetax(const RootSystem& R, const RootSubset& phi1, const RootSubset& phi2, const RootSubset& phi3, int beta,
                  int gamma) {
  if (phi1.intersects(phi2) || (phi1 | phi2) != phi3 || !is_biconvex(R, phi1) || !is_biconvex(R, phi2) ||
      !is_biconvex(R, phi3))
    throw PreconditionError("check_thetax: Phi_1, Phi_2 must be disjoint biconvex sets with biconvex union Phi_3");
  if (beta < 0 || gamma < 0 || !R.is_positive(beta) || !R.is_positive(gamma))
    throw PreconditionError("check_thetax: beta and gamma must be positive roots");
  const int sum = R.add(gamma, beta);
  if (!phi1.test(beta) || phi3.test(gamma) || sum < 0 || !phi3.test(sum))
    throw PreconditionError("check_thetax: need beta in Phi_1, gamma outside Phi_3 and gamma + beta in Phi_3");
  return phi1.test(sum);
}

KillingCase killing_trichotomy(const RootSystem& R, int alpha, int beta) {
  if (!R.simply_laced()) throw PreconditionError("killing_trichotomy needs a simply laced root system");
  if (alpha < 0 || beta < 0 || alpha >= R.num_roots() || beta >= R.num_roots())
    throw PreconditionError("killing_trichotomy: root index out of range");
  if (alpha == beta || alpha == R.negative(beta)) throw PreconditionError("killing_trichotomy needs alpha != +-beta");
  const Rational f = R.form(beta, alpha);
  if (!is_integer(f)) throw std::logic_error("non-integral form on a simply laced system");
  KillingCase out;
  out.value = static_cast<int>(f);
  const bool sum = R.add(beta, alpha) >= 0;
  const bool diff = R.add(beta, R.negative(alpha)) >= 0;
  switch (out.value) {
    case 1: out.verified = diff && !sum; break;
    case -1: out.verified = sum && !diff; break;
    case 0: out.verified = !sum && !diff; break;
    default: out.verified = false;
  }
  return out;
}

namespace {

bool decompose(const RootSystem& R, IntVector& rest, int max_root, int budget) {
  if (rest.isZero()) return true;
  if (budget == 0) return false;
  for (int a = max_root; a >= 0; --a) {
    const IntVector& c = R.coords(a);
    if (((rest - c).array() < 0).any()) continue;
    rest -= c;
    const bool found = decompose(R, rest, a, budget - 1);
    rest += c;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool decomposition_bound(const RootSystem& R, int beta, int gamma) {
  if (!R.simply_laced()) throw PreconditionError("decomposition_bound needs a simply laced root system");
  if (beta < 0 || gamma < 0 || !R.is_positive(beta) || !R.is_positive(gamma) || !R.dominance_leq(beta, gamma))
    throw PreconditionError("decomposition_bound needs positive roots beta <= gamma");
  const int bound = 2 - static_cast<int>(R.form(gamma, beta));
  IntVector rest = R.coords(gamma) - R.coords(beta);
  return decompose(R, rest, R.num_positive() - 1, bound);
}

}  // namespace bkcheck
