#include "bkcheck/schubert.hpp"

#include <algorithm>

#include "bkcheck/errors.hpp"
#include "bkcheck/parallel.hpp"

namespace bkcheck {

RationalVector root_form(const RootSystem& R, int r) {
  // <alpha, alpha_j^vee> is the coefficient of omega_j.
  RationalVector out(R.rank());
  for (int j = 0; j < R.rank(); ++j) out(j) = R.pair_with_simple_coroot(r, j);
  return out;
}

SchubertPoly reflect(const RootSystem& R, int i, const SchubertPoly& f) {
  RationalVector image = -root_form(R, i);
  image(i) += 1;  // s_i omega_i = omega_i - alpha_i
  return substitute_variable(f, i, image);
}

SchubertPoly divided_difference(const RootSystem& R, int i, const SchubertPoly& f) {
  if (f.is_zero()) return f;
  SchubertPoly g = f - reflect(R, i, f);
  if (g.is_zero()) return SchubertPoly(f.num_vars());
  return divide_exact_linear(std::move(g), root_form(R, i), i);
}

SchubertPoly divided_difference(const RootSystem& R, const std::vector<int>& word, SchubertPoly f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(R, *it, f);
  return f;
}

SchubertPoly top_schubert_poly(const WeylGroup& W) {
  const RootSystem& R = W.roots();
  SchubertPoly p = SchubertPoly::constant(R.rank(), Rational(1, W.size()));
  for (int a = 0; a < R.num_positive(); ++a) p = p * SchubertPoly::linear(root_form(R, a));
  return p;
}

SchubertPoly schubert_poly(const WeylGroup& W, WeylElement w, const std::vector<int>& word_of_complement) {
  if (W.from_word(word_of_complement) != W.multiply(W.inverse(w), W.longest()) ||
      static_cast<int>(word_of_complement.size()) != W.length(W.longest()) - W.length(w))
    throw PreconditionError("schubert_poly: not a reduced word of w^{-1} w0");
  return divided_difference(W.roots(), word_of_complement, top_schubert_poly(W));
}

SchubertPoly schubert_poly(const WeylGroup& W, WeylElement w) {
  return schubert_poly(W, w, W.reduced_word(W.multiply(W.inverse(w), W.longest())));
}

Rational top_pairing(const WeylGroup& W, const SchubertPoly& f) {
  const SchubertPoly c = divided_difference(W.roots(), W.reduced_word(W.longest()), f);
  if (c.degree() > 0) throw PreconditionError("top_pairing: polynomial degree exceeds l(w0)");
  return c.constant_term();
}

namespace {

/// First i with l(w s_i) > l(w), or -1 for w0.
int first_right_ascent(const WeylGroup& W, WeylElement w) {
  for (int i = 0; i < W.rank(); ++i)
    if (W.length(W.right_mult(w, i)) > W.length(w)) return i;
  return -1;
}

std::vector<WeylElement> by_decreasing_length(const WeylGroup& W) {
  std::vector<WeylElement> order(static_cast<std::size_t>(W.size()));
  for (int w = 0; w < W.size(); ++w) order[static_cast<std::size_t>(w)] = w;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return W.length(a) > W.length(b); });
  return order;
}

}  // namespace

SchubertPolyTable::SchubertPolyTable(const WeylGroup& W) : group_(&W), polys_(static_cast<std::size_t>(W.size())) {
  for (WeylElement w : by_decreasing_length(W)) {
    const int i = first_right_ascent(W, w);
    polys_[static_cast<std::size_t>(w)] =
        i < 0 ? top_schubert_poly(W) : divided_difference(W.roots(), i, polys_[static_cast<std::size_t>(W.right_mult(w, i))]);
  }
}

SchubertPolyTable::SchubertPolyTable(const WeylGroup& W, std::vector<SchubertPoly> polys)
    : group_(&W), polys_(std::move(polys)) {
  if (static_cast<int>(polys_.size()) != W.size()) throw ValidationError("stored Schubert table has the wrong size");
}

Rational SchubertPolyTable::cup_constant(WeylElement u, WeylElement v, WeylElement w) const {
  const WeylGroup& W = *group_;
  const int n = W.length(W.longest());
  if (W.length(u) + W.length(v) != W.length(w) + n) return Rational(0);
  const SchubertPoly product = poly(W.dual(u)) * poly(W.dual(v)) * poly(w);
  return top_pairing(W, product);
}

OrbitSchubertTable::OrbitSchubertTable(const WeylGroup& W, std::size_t max_rows)
    : group_(&W), max_rows_(max_rows), rows_(static_cast<std::size_t>(W.size())) {
  const RootSystem& R = W.roots();
  const int r = W.rank();
  heights_.resize(static_cast<std::size_t>(W.size() * r));
  for (WeylElement u = 0; u < W.size(); ++u) {
    const WeylElement inv = W.inverse(u);
    for (int i = 0; i < r; ++i) heights_[static_cast<std::size_t>(u * r + i)] = R.height(W.act(inv, i));
  }
  // kappa normalizes the signed orbit sum so that it returns the constant P_e on P_{w0}.
  const std::vector<Rational>& identity_row = values(W.identity());
  for (const Rational& x : identity_row)
    if (x != identity_row.front()) throw std::logic_error("P_e is not constant on the orbit");
  Rational sum = 0;
  const std::vector<Rational>& top = values(W.longest());
  for (WeylElement u = 0; u < W.size(); ++u) sum += W.sign(u) * top[static_cast<std::size_t>(u)];
  kappa_ = identity_row.front() / sum;
}

const std::vector<Rational>& OrbitSchubertTable::values(WeylElement w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return build(w);
}

const std::vector<Rational>& OrbitSchubertTable::build(WeylElement w) const {
  const WeylGroup& W = *group_;
  const RootSystem& R = W.roots();
  if (rows_[static_cast<std::size_t>(w)]) return *rows_[static_cast<std::size_t>(w)];
  // Walk up by right ascents to a row that is already known (or w0).
  std::vector<std::pair<WeylElement, int>> chain;
  WeylElement cur = w;
  while (!rows_[static_cast<std::size_t>(cur)]) {
    const int i = first_right_ascent(W, cur);
    chain.emplace_back(cur, i);
    if (i < 0) break;
    cur = W.right_mult(cur, i);
  }
  const int r = W.rank();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto [x, i] = *it;
    if (max_rows_ && built_ >= max_rows_)
      throw ResourceError("Schubert evaluation table for " + R.label() + " exceeds its row budget " + std::to_string(max_rows_));
    auto row = std::make_unique<std::vector<Rational>>(static_cast<std::size_t>(W.size()));
    if (i < 0) {
      Rational base = Rational(1, W.size());
      for (int a = 0; a < R.num_positive(); ++a) base *= R.height(a);
      for (WeylElement u = 0; u < W.size(); ++u) (*row)[static_cast<std::size_t>(u)] = W.sign(u) * base;
    } else {
      const std::vector<Rational>& parent = *rows_[static_cast<std::size_t>(W.right_mult(x, i))];
      for (WeylElement u = 0; u < W.size(); ++u) {
        const Rational diff = parent[static_cast<std::size_t>(u)] - parent[static_cast<std::size_t>(W.left_mult(i, u))];
        if (diff != 0) (*row)[static_cast<std::size_t>(u)] = diff / heights_[static_cast<std::size_t>(u * r + i)];
      }
    }
    rows_[static_cast<std::size_t>(x)] = std::move(row);
    ++built_;
  }
  return *rows_[static_cast<std::size_t>(w)];
}

std::size_t OrbitSchubertTable::rows_built() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return built_;
}

Rational OrbitSchubertTable::top_pairing(const std::vector<Rational>& f) const {
  const WeylGroup& W = *group_;
  Rational sum = 0;
  for (WeylElement u = 0; u < W.size(); ++u) {
    if (f[static_cast<std::size_t>(u)] == 0) continue;
    if (W.sign(u) > 0) sum += f[static_cast<std::size_t>(u)];
    else sum -= f[static_cast<std::size_t>(u)];
  }
  return kappa_ * sum;
}

Rational OrbitSchubertTable::cup_constant(WeylElement u, WeylElement v, WeylElement w) const {
  Rational out = cup_value(u, v, w);
  if (!is_integer(out) || out < 0) throw std::logic_error("cup constant is not a non-negative integer: " + out.str());
  return out;
}

Rational OrbitSchubertTable::cup_value(WeylElement u, WeylElement v, WeylElement w) const {
  const WeylGroup& W = *group_;
  if (W.length(u) + W.length(v) != W.length(w) + W.length(W.longest())) return Rational(0);
  const std::vector<Rational>& a = values(W.dual(u));
  const std::vector<Rational>& b = values(W.dual(v));
  const std::vector<Rational>& c = values(w);
  Rational sum = 0;
  for (WeylElement x = 0; x < W.size(); ++x) {
    const auto k = static_cast<std::size_t>(x);
    if (a[k] == 0 || b[k] == 0 || c[k] == 0) continue;
    const Rational t = a[k] * b[k] * c[k];
    if (W.sign(x) > 0) sum += t;
    else sum -= t;
  }
  return kappa_ * sum;
}

RationalVector OrbitSchubertTable::orbit_point(WeylElement u) const {
  // omega_j(u rho^vee) = <u^{-1} omega_j, rho^vee> = coordinate sum of u^{-1} omega_j.
  const WeylGroup& W = *group_;
  const RationalMatrix images = W.matrix(W.inverse(u)).cast<Rational>() * W.roots().fundamental_weights();
  RationalVector out(W.rank());
  for (int j = 0; j < W.rank(); ++j) out(j) = images.col(j).sum();
  return out;
}

CohomologyClass chevalley_multiply(const WeylGroup& W, int i, const CohomologyClass& c) {
  const RootSystem& R = W.roots();
  CohomologyClass out;
  for (const auto& [w, coeff] : c) {
    if (coeff == 0) continue;
    for (int beta = 0; beta < R.num_positive(); ++beta) {
      const int pairing = R.coroot(beta)(i);
      if (pairing == 0) continue;
      const WeylElement next = W.multiply(w, W.reflection(beta));
      if (W.length(next) != W.length(w) + 1) continue;
      out[next] += coeff * pairing;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MainReport verify_main(const WeylGroup& W, const std::vector<BKTriple>& triples, const OrbitSchubertTable& table, int jobs) {
  auto violations = parallel_collect<MainViolation>(static_cast<int>(triples.size()), jobs, [&](int begin, int end) {
    std::vector<MainViolation> out;
    for (int k = begin; k < end; ++k) {
      const BKTriple& t = triples[static_cast<std::size_t>(k)];
      if (bk_complete(W, t.u, t.v) != std::optional<WeylElement>(t.w)) throw PreconditionError("verify_main: not a BK triple");
      const Rational c = table.cup_value(t.u, t.v, t.w);
      if (c != 1) out.push_back({t, c});
    }
    return out;
  });
  return MainReport{triples.size(), std::move(violations)};
}

}  // namespace bkcheck
