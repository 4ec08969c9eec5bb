#include "bkcheck/weyl_group.hpp"

#include <bit>
#include <deque>

#include "bkcheck/errors.hpp"

namespace bkcheck {

namespace {

ColumnKey identity_key(int rank) {
  ColumnKey k{};
  for (int j = 0; j < rank; ++j) k[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(j);
  return k;
}

ColumnKey reflect_key(const RootSystem& R, int i, const ColumnKey& k) {
  ColumnKey out{};
  const auto& s = R.simple_reflection(i);
  for (int j = 0; j < R.rank(); ++j)
    out[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(s[k[static_cast<std::size_t>(j)]]);
  return out;
}

}  // namespace

WeylGroup WeylGroup::enumerate(std::shared_ptr<const RootSystem> roots, std::size_t cap) {
  WeylGroup W;
  W.roots_ = std::move(roots);
  const RootSystem& R = *W.roots_;
  const int r = R.rank();
  W.rank_ = r;
  const ColumnKey id = identity_key(r);
  W.columns_.push_back(id);
  W.index_.emplace(id, 0);
  W.lengths_.push_back(0);
  W.parent_.push_back(-1);
  W.parent_generator_.push_back(-1);
  W.left_.assign(static_cast<std::size_t>(r), -1);
  for (std::size_t w = 0; w < W.columns_.size(); ++w) {
    for (int i = 0; i < r; ++i) {
      if (W.left_[w * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] >= 0) continue;
      const ColumnKey next = reflect_key(R, i, W.columns_[w]);
      auto [it, inserted] = W.index_.emplace(next, static_cast<int>(W.columns_.size()));
      if (inserted) {
        if (W.columns_.size() >= cap)
          throw ResourceError("Weyl group of " + R.label() + " exceeds the element cap " + std::to_string(cap));
        W.columns_.push_back(next);
        W.lengths_.push_back(W.lengths_[w] + 1);
        W.parent_.push_back(static_cast<int>(w));
        W.parent_generator_.push_back(i);
        W.left_.resize(W.left_.size() + static_cast<std::size_t>(r), -1);
      }
      const int v = it->second;
      W.left_[w * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] = v;
      W.left_[static_cast<std::size_t>(v * r + i)] = static_cast<int>(w);
    }
  }
  W.finish();
  return W;
}

WeylGroup WeylGroup::from_columns(std::shared_ptr<const RootSystem> roots, const std::vector<ColumnKey>& elements) {
  WeylGroup W;
  W.roots_ = std::move(roots);
  const RootSystem& R = *W.roots_;
  const int r = R.rank();
  W.rank_ = r;
  if (elements.empty() || elements.front() != identity_key(r)) throw ValidationError("stored group does not start at the identity");
  W.columns_ = elements;
  for (std::size_t w = 0; w < elements.size(); ++w)
    if (!W.index_.emplace(elements[w], static_cast<int>(w)).second) throw ValidationError("duplicate element in stored group");
  const std::size_t n = elements.size();
  W.left_.assign(n * static_cast<std::size_t>(r), -1);
  W.lengths_.assign(n, -1);
  W.parent_.assign(n, -1);
  W.parent_generator_.assign(n, -1);
  W.lengths_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      auto it = W.index_.find(reflect_key(R, i, W.columns_[static_cast<std::size_t>(w)]));
      if (it == W.index_.end()) throw ValidationError("stored group is not closed under simple reflections");
      const int v = it->second;
      W.left_[static_cast<std::size_t>(w * r + i)] = v;
      if (W.lengths_[static_cast<std::size_t>(v)] < 0) {
        W.lengths_[static_cast<std::size_t>(v)] = W.lengths_[static_cast<std::size_t>(w)] + 1;
        W.parent_[static_cast<std::size_t>(v)] = w;
        W.parent_generator_[static_cast<std::size_t>(v)] = i;
        queue.push_back(v);
      }
    }
  }
  for (int l : W.lengths_)
    if (l < 0) throw ValidationError("stored group is not generated by simple reflections");
  W.finish();
  return W;
}

void WeylGroup::finish() {
  const RootSystem& R = *roots_;
  const int n = size();
  const int npos = R.num_positive();
  const int nr = R.num_roots();

  // Root permutations along the BFS tree; parents always precede children.
  std::vector<std::uint16_t> perm(static_cast<std::size_t>(n) * static_cast<std::size_t>(nr));
  for (int x = 0; x < nr; ++x) perm[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(x);
  inversions_.assign(static_cast<std::size_t>(n), RootSubset{});
  descents_.assign(static_cast<std::size_t>(n), 0);
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int w = 0; w < n; ++w) {
    std::uint16_t* pw = &perm[static_cast<std::size_t>(w) * static_cast<std::size_t>(nr)];
    if (w > 0) {
      const std::uint16_t* pp = &perm[static_cast<std::size_t>(parent_[static_cast<std::size_t>(w)]) * static_cast<std::size_t>(nr)];
      const auto& s = R.simple_reflection(parent_generator_[static_cast<std::size_t>(w)]);
      for (int x = 0; x < nr; ++x) pw[x] = static_cast<std::uint16_t>(s[pp[x]]);
    }
    RootSubset inv;
    for (int x = 0; x < npos; ++x)
      if (pw[x] >= npos) inv.set(x);
    if (inv.count() != length(w)) throw std::logic_error("length does not match inversion count");
    inversions_[static_cast<std::size_t>(w)] = inv;
    std::uint32_t mask = 0;
    for (int i = 0; i < rank_; ++i)
      if (length(left_mult(i, w)) < length(w)) mask |= 1U << i;
    descents_[static_cast<std::size_t>(w)] = mask;
    ColumnKey inv_key{};
    for (int x = 0; x < nr; ++x)
      if (pw[x] < rank_) inv_key[pw[x]] = static_cast<std::uint16_t>(x);
    inverse_[static_cast<std::size_t>(w)] = index_.at(inv_key);
    if (length(w) == npos) longest_ = w;
  }
  root_perms_ = std::move(perm);

  right_.assign(static_cast<std::size_t>(n * rank_), -1);
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < rank_; ++i) right_[static_cast<std::size_t>(w * rank_ + i)] = inverse(left_mult(i, inverse(w)));

  by_inversions_.reserve(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) by_inversions_.emplace(inversions_[static_cast<std::size_t>(w)], w);

  reflections_.assign(static_cast<std::size_t>(npos), -1);
  for (int beta = 0; beta < npos; ++beta) {
    ColumnKey key{};
    for (int j = 0; j < rank_; ++j) {
      int c = 0;
      for (int i = 0; i < rank_; ++i) c += R.coroot(beta)(i) * R.cartan()(i, j);
      IntVector image = R.coords(j) - c * R.coords(beta);
      key[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(R.find_or_throw(image));
    }
    reflections_[static_cast<std::size_t>(beta)] = index_.at(key);
  }
}

int WeylGroup::act(WeylElement w, int r) const {
  return root_perms_[static_cast<std::size_t>(w) * static_cast<std::size_t>(roots_->num_roots()) + static_cast<std::size_t>(r)];
}

IntMatrix WeylGroup::matrix(WeylElement w) const {
  IntMatrix m(rank_, rank_);
  for (int j = 0; j < rank_; ++j) m.col(j) = roots_->coords(columns(w)[static_cast<std::size_t>(j)]);
  return m;
}

int WeylGroup::descent_count(WeylElement w) const { return std::popcount(left_descent_mask(w)); }

WeylElement WeylGroup::multiply(WeylElement a, WeylElement b) const {
  WeylElement out = a;
  for (int g : reduced_word(b)) out = right_mult(out, g);
  return out;
}

std::vector<int> WeylGroup::reduced_word(WeylElement w) const {
  std::vector<int> word;
  while (w != 0) {
    word.push_back(parent_generator_[static_cast<std::size_t>(w)]);
    w = parent_[static_cast<std::size_t>(w)];
  }
  return word;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement out = 0;
  for (int g : word) {
    if (g < 0 || g >= rank_) throw ValidationError("generator index out of range in word");
    out = right_mult(out, g);
  }
  return out;
}

std::optional<WeylElement> WeylGroup::find(const ColumnKey& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<WeylElement> WeylGroup::find(const IntMatrix& m) const {
  if (m.rows() != rank_ || m.cols() != rank_) return std::nullopt;
  ColumnKey key{};
  for (int j = 0; j < rank_; ++j) {
    auto r = roots_->find(m.col(j));
    if (!r) return std::nullopt;
    key[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(*r);
  }
  return find(key);
}

std::optional<WeylElement> WeylGroup::find_by_inversions(const RootSubset& s) const {
  auto it = by_inversions_.find(s);
  if (it == by_inversions_.end()) return std::nullopt;
  return it->second;
}

RootSubset inversion_set(const WeylGroup& W, WeylElement w) { return W.inversions(w); }

std::uint32_t left_descents(const WeylGroup& W, WeylElement w) { return W.left_descent_mask(w); }

bool bruhat_leq(const WeylGroup& W, WeylElement u, WeylElement w) {
  // With s a left descent of w: u <= w iff min(u, su) <= sw.
  while (true) {
    const int lu = W.length(u);
    const int lw = W.length(w);
    if (lu > lw) return false;
    if (lu == lw) return u == w;
    if (lu == 0) return true;
    const int s = std::countr_zero(W.left_descent_mask(w));
    if (W.left_descent_mask(u) & (1U << s)) u = W.left_mult(s, u);
    w = W.left_mult(s, w);
  }
}

bool left_weak_leq(const WeylGroup& W, WeylElement u, WeylElement w) {
  return W.inversions(u).is_subset_of(W.inversions(w));
}

bool bruhat_covers(const WeylGroup& W, WeylElement v, WeylElement w) {
  return W.length(w) == W.length(v) + 1 && bruhat_leq(W, v, w);
}

bool is_biconvex(const RootSystem& R, const RootSubset& s) {
  for (const auto& [a, b, c] : R.positive_sums()) {
    const bool in_a = s.test(a), in_b = s.test(b), in_c = s.test(c);
    if (in_a && in_b && !in_c) return false;
    if (!in_a && !in_b && in_c) return false;
  }
  return true;
}

std::optional<WeylElement> biconvex_to_weyl(const WeylGroup& W, RootSubset s) {
  const RootSystem& R = W.roots();
  const RootSubset original = s;
  std::vector<int> peeled;
  while (!s.empty()) {
    int simple = -1;
    for (int i = 0; i < R.rank(); ++i)
      if (s.test(i)) {
        simple = i;
        break;
      }
    if (simple < 0) return std::nullopt;
    s.reset(simple);
    RootSubset image;
    bool positive = true;
    const auto& refl = R.simple_reflection(simple);
    s.for_each([&](int x) {
      const int y = refl[static_cast<std::size_t>(x)];
      if (!R.is_positive(y)) positive = false;
      else image.set(y);
    });
    if (!positive) return std::nullopt;
    s = image;
    peeled.push_back(simple);
  }
  WeylElement w = W.identity();
  for (int i : peeled) w = W.left_mult(i, w);
  if (W.inversions(w) != original) return std::nullopt;
  return w;
}

ConeWitness cone_disjointness(const WeylGroup& W, const RootSubset& s) {
  const RootSystem& R = W.roots();
  const auto w = biconvex_to_weyl(W, s);
  if (!w) throw PreconditionError("cone_disjointness needs a biconvex set");
  ConeWitness out;
  out.functional = RationalVector(R.rank());
  for (int j = 0; j < R.rank(); ++j) out.functional(j) = pairing(R, R.rho(), W.columns(*w)[static_cast<std::size_t>(j)]);
  out.verified = true;
  for (int x = 0; x < R.num_positive(); ++x) {
    const Rational f = out.functional.dot(RationalVector(R.coords(x).cast<Rational>()));
    if (s.test(x) ? f >= 0 : f <= 0) out.verified = false;
  }
  return out;
}

std::uint64_t classical_weyl_order(const CartanType& t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int n = t.rank;
  switch (t.series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

}  // namespace bkcheck
