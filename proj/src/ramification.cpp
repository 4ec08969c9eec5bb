#include "bkcheck/ramification.hpp"

#include <algorithm>
#include <limits>

#include "bkcheck/errors.hpp"
#include "bkcheck/parallel.hpp"

namespace bkcheck {

UnipotentElement UnipotentElement::identity(const RootSystem& R) {
  return {RationalVector::Zero(R.num_positive())};
}

UnipotentElement random_unipotent(const RootSystem& R, std::mt19937_64& rng) {
  UnipotentElement g{RationalVector(R.num_positive())};
  for (int a = 0; a < R.num_positive(); ++a) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 4) + 1;
    g.coefficients(a) = Rational(num, den);
  }
  return g;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix(h ^ splitmix(v)); }

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t instance, std::uint64_t seed) {
  return std::mt19937_64(mix(splitmix(seed), instance));
}

RationalMatrix negative_block_action(const ChevalleyAlgebra& A, const UnipotentElement& g) {
  const RootSystem& R = A.roots();
  const int n = R.num_positive();
  // [x, e_{-gamma}] has e_{-beta} coefficient c_phi N_{phi,-gamma} with phi = gamma - beta.
  struct Entry {
    int beta, gamma;
    Rational value;
  };
  std::vector<Entry> entries;
  for (int gamma = 0; gamma < n; ++gamma)
    for (int phi = 0; phi < n; ++phi) {
      if (g.coefficients(phi) == 0) continue;
      const int neg = R.add(phi, R.negative(gamma));
      if (neg < 0 || R.is_positive(neg)) continue;
      entries.push_back({R.negative(neg), gamma, -g.coefficients(phi) * A.structure_constant(phi, R.negative(gamma))});
    }
  // exp of the strictly height-raising block, one column at a time.
  RationalMatrix out = RationalMatrix::Zero(n, n);
  std::vector<Rational> term(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    std::fill(term.begin(), term.end(), Rational(0));
    term[static_cast<std::size_t>(col)] = 1;
    out(col, col) = 1;
    for (int k = 1; k <= R.max_height(); ++k) {
      std::fill(next.begin(), next.end(), Rational(0));
      bool any = false;
      for (const Entry& e : entries) {
        const Rational& t = term[static_cast<std::size_t>(e.gamma)];
        if (t == 0) continue;
        next[static_cast<std::size_t>(e.beta)] += e.value * t;
        any = true;
      }
      if (!any) break;
      for (int b = 0; b < n; ++b) {
        Rational& v = next[static_cast<std::size_t>(b)];
        if (v == 0) continue;
        v /= k;
        out(b, col) += v;
      }
      term.swap(next);
    }
  }
  return out;
}

Rational adjoint_coefficient(const ChevalleyAlgebra& A, const UnipotentElement& g, int beta, int gamma) {
  const RootSystem& R = A.roots();
  if (beta < 0 || gamma < 0 || !R.is_positive(beta) || !R.is_positive(gamma))
    throw PreconditionError("adjoint_coefficient needs positive roots");
  return negative_block_action(A, g)(beta, gamma);
}

RationalMatrix adjoint_action(const ChevalleyAlgebra& A, const UnipotentElement& g) {
  RationalVector x = RationalVector::Zero(A.dimension());
  x.head(A.roots().num_positive()) = g.coefficients;
  return exp_nilpotent(A.ad(x));
}

int RamificationMatrix::row_of(int root) const {
  auto it = std::find(rows.begin(), rows.end(), root);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int RamificationMatrix::col_of(int root) const {
  auto it = std::find(cols.begin(), cols.end(), root);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

void check_ramification_hypotheses(const WeylGroup& W, WeylElement v, WeylElement w, WeylElement x, WeylElement y) {
  const RootSubset &iw = W.inversions(w), &ix = W.inversions(x), &iy = W.inversions(y), &iv = W.inversions(v);
  if (ix.intersects(iy) || (ix | iy) != iw)
    throw PreconditionError("ramification matrix: Phi(w) is not the disjoint union of Phi(x) and Phi(y)");
  if (!bruhat_covers(W, v, w)) throw PreconditionError("ramification matrix: v is not covered by w in the Bruhat order");
  if (iv.is_subset_of(iw)) throw PreconditionError("ramification matrix: Phi(v) is contained in Phi(w)");
}

RamificationMatrix build_M(const WeylGroup& W, WeylElement v, WeylElement w, WeylElement x, WeylElement y,
                           const RationalMatrix& act_x, const RationalMatrix& act_y) {
  check_ramification_hypotheses(W, v, w, x, y);
  RamificationMatrix M;
  M.v = v, M.w = w, M.x = x, M.y = y;
  M.rows = W.inversions(w).indices();
  M.cols = W.inversions(v).indices();
  M.m = RationalMatrix::Zero(static_cast<Eigen::Index>(M.rows.size()), static_cast<Eigen::Index>(M.cols.size()));
  for (std::size_t i = 0; i < M.rows.size(); ++i) {
    const int beta = M.rows[i];
    const RationalMatrix& act = W.inversions(x).test(beta) ? act_x : act_y;
    for (std::size_t j = 0; j < M.cols.size(); ++j)
      M.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = act(beta, M.cols[j]);
  }
  return M;
}

RamificationMatrix build_M(const ChevalleyAlgebra& A, const WeylGroup& W, WeylElement v, WeylElement w, WeylElement x,
                           WeylElement y, const UnipotentElement& gx, const UnipotentElement& gy) {
  return build_M(W, v, w, x, y, negative_block_action(A, gx), negative_block_action(A, gy));
}

namespace {

/// Positive root beta with s_beta = v^{-1} w.
int cover_root(const WeylGroup& W, WeylElement v, WeylElement w) {
  const WeylElement r = W.multiply(W.inverse(v), w);
  for (int beta = 0; beta < W.roots().num_positive(); ++beta)
    if (W.reflection(beta) == r) return beta;
  throw std::logic_error("Bruhat cover is not a reflection");
}

}  // namespace

CoverProfile cover_profile(const WeylGroup& W, WeylElement v, WeylElement w) {
  if (!bruhat_covers(W, v, w)) throw PreconditionError("cover_profile: v is not covered by w");
  const RootSystem& R = W.roots();
  const RootSubset &iv = W.inversions(v), &iw = W.inversions(w);
  CoverProfile p;
  p.beta0 = cover_root(W, v, w);
  p.betas = (iw - iv).indices();
  p.gammas = (iv - iw).indices();
  // (H1) and (H2), height by height. (H2) is taken in its "< h" form, which also
  // constrains the simple roots (h = 0 below).
  p.h1 = p.h2 = true;
  const int top = R.max_height();
  std::vector<int> count_v(static_cast<std::size_t>(top + 2), 0), count_w(static_cast<std::size_t>(top + 2), 0);
  iv.for_each([&](int a) { ++count_v[static_cast<std::size_t>(R.height(a))]; });
  iw.for_each([&](int a) { ++count_w[static_cast<std::size_t>(R.height(a))]; });
  int cv = 0, cw = 0;
  for (int h = 0; h <= top; ++h) {
    cv += count_v[static_cast<std::size_t>(h)];
    cw += count_w[static_cast<std::size_t>(h)];
    if (cv > cw) p.h1 = false;
    if (cv == cw && h < top) {
      bool inside = true;
      iv.for_each([&](int a) {
        if (R.height(a) == h + 1 && !iw.test(a)) inside = false;
      });
      if (!inside) p.h2 = false;
    }
  }
  if (!p.h1 || !p.h2) {
    p.kind = ProfileCase::Triangular;
    p.invariants_hold = true;  // nothing further is claimed
    return p;
  }
  p.kind = ProfileCase::Interleaved;
  const int s = static_cast<int>(p.betas.size()) - 1;
  const int t = static_cast<int>(p.gammas.size()) - 1;
  bool ok = s == t + 1 && !p.betas.empty() && p.betas.front() == p.beta0;
  if (ok) {
    for (int i = 0; i <= t; ++i) {
      const int hb = R.height(p.betas[static_cast<std::size_t>(i)]);
      const int hg = R.height(p.gammas[static_cast<std::size_t>(i)]);
      const int hn = R.height(p.betas[static_cast<std::size_t>(i + 1)]);
      if (!(hb < hg && hg < hn)) ok = false;
      // beta_{i+1} - gamma_i = k beta0 with k >= 1
      const IntVector diff = R.coords(p.betas[static_cast<std::size_t>(i + 1)]) - R.coords(p.gammas[static_cast<std::size_t>(i)]);
      const IntVector& b0 = R.coords(p.beta0);
      int k = 0;
      for (int j = 0; j < R.rank(); ++j)
        if (b0(j) != 0) {
          k = diff(j) / b0(j);
          break;
        }
      if (k < 1 || diff != k * b0) ok = false;
      p.multipliers.push_back(k);
    }
  }
  p.invariants_hold = ok;
  if (!ok) return p;
  // Blocks Phi_i^- and Phi_i^+ over Phi(v) minus the gammas.
  const RootSubset common = iv & iw;
  const int inf = std::numeric_limits<int>::max();
  for (int i = 0; i <= s; ++i) {
    const int lo = i == 0 ? 0 : R.height(p.gammas[static_cast<std::size_t>(i - 1)]);
    const int hb = R.height(p.betas[static_cast<std::size_t>(i)]);
    const int hi = i == s ? inf : R.height(p.gammas[static_cast<std::size_t>(i)]);
    std::vector<int> minus, plus;
    common.for_each([&](int a) {
      const int h = R.height(a);
      if (lo <= h && h <= hb) minus.push_back(a);
      if (hb < h && h < hi) plus.push_back(a);
    });
    p.minus_blocks.push_back(std::move(minus));
    p.plus_blocks.push_back(std::move(plus));
  }
  return p;
}

namespace {

struct BlockLayout {
  std::vector<std::vector<int>> row_groups;  // M_0^-, M_0^+, M_1^-, ...
  std::vector<std::vector<int>> col_groups;
};

BlockLayout layout(const CoverProfile& p) {
  if (p.kind != ProfileCase::Interleaved || !p.invariants_hold)
    throw PreconditionError("block decomposition needs an interleaved cover profile");
  BlockLayout out;
  const int s = p.s();
  for (int i = 0; i <= s; ++i) {
    const auto& minus = p.minus_blocks[static_cast<std::size_t>(i)];
    out.row_groups.push_back(minus);
    out.col_groups.push_back(minus);
    std::vector<int> rows = p.plus_blocks[static_cast<std::size_t>(i)];
    rows.push_back(p.betas[static_cast<std::size_t>(i)]);
    std::sort(rows.begin(), rows.end());
    std::vector<int> cols = p.plus_blocks[static_cast<std::size_t>(i)];
    if (i < s) cols.push_back(p.gammas[static_cast<std::size_t>(i)]);
    std::sort(cols.begin(), cols.end());
    out.row_groups.push_back(std::move(rows));
    out.col_groups.push_back(std::move(cols));
  }
  return out;
}

RationalMatrix submatrix(const RamificationMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  RationalMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const int r = M.row_of(rows[i]), c = M.col_of(cols[j]);
      if (r < 0 || c < 0) throw std::logic_error("block label is not a row or column of M");
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = M.m(r, c);
    }
  return out;
}

}  // namespace

BlockMatrices extract_blocks(const RamificationMatrix& M, const CoverProfile& p) {
  const BlockLayout l = layout(p);
  BlockMatrices out;
  for (std::size_t g = 0; g < l.row_groups.size(); ++g) {
    RationalMatrix block = submatrix(M, l.row_groups[g], l.col_groups[g]);
    (g % 2 == 0 ? out.minus : out.plus).push_back(std::move(block));
  }
  return out;
}

bool check_block_structure(const RamificationMatrix& M, const CoverProfile& p) {
  const BlockLayout l = layout(p);
  // The groups must partition the rows and the columns.
  std::vector<int> all_rows, all_cols;
  for (const auto& g : l.row_groups) all_rows.insert(all_rows.end(), g.begin(), g.end());
  for (const auto& g : l.col_groups) all_cols.insert(all_cols.end(), g.begin(), g.end());
  std::sort(all_rows.begin(), all_rows.end());
  std::sort(all_cols.begin(), all_cols.end());
  if (all_rows != M.rows || all_cols != M.cols) return false;
  for (std::size_t a = 0; a < l.row_groups.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (!submatrix(M, l.row_groups[a], l.col_groups[b]).isZero()) return false;
  for (std::size_t g = 0; g < l.row_groups.size(); g += 2) {
    const RationalMatrix block = submatrix(M, l.row_groups[g], l.col_groups[g]);
    for (Eigen::Index i = 0; i < block.rows(); ++i)
      for (Eigen::Index j = 0; j <= i; ++j)
        if (block(i, j) != (i == j ? 1 : 0)) return false;
  }
  return true;
}

int kernel_dimension(const RamificationMatrix& M) {
  return static_cast<int>(M.m.cols() - exact_rank(M.m));
}

KernelCriterion block_kernel_criterion(const RamificationMatrix& M, const CoverProfile& p) {
  KernelCriterion out;
  out.kernel_nonzero = kernel_dimension(M) > 0;
  const BlockMatrices blocks = extract_blocks(M, p);
  for (int i = 0; i < p.s(); ++i) {
    const RationalMatrix& b = blocks.plus[static_cast<std::size_t>(i)];
    if (exact_rank(b) < b.rows()) {
      out.some_block_singular = true;
      out.singular_block = i;
      break;
    }
  }
  return out;
}

std::vector<std::pair<WeylElement, WeylElement>> eligible_covers(const WeylGroup& W) {
  std::vector<std::pair<WeylElement, WeylElement>> out;
  for (WeylElement w = 0; w < W.size(); ++w)
    for (int beta = 0; beta < W.roots().num_positive(); ++beta) {
      const WeylElement v = W.multiply(w, W.reflection(beta));
      if (W.length(v) + 1 != W.length(w)) continue;
      if (W.inversions(v).is_subset_of(W.inversions(w))) continue;
      out.emplace_back(v, w);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// All x with Phi(x) inside Phi(w) such that the complement is again an inversion set.
std::vector<std::pair<WeylElement, WeylElement>> decompositions_of(const WeylGroup& W, WeylElement w) {
  std::vector<std::pair<WeylElement, WeylElement>> out;
  const RootSubset& iw = W.inversions(w);
  for (WeylElement x = 0; x < W.size(); ++x) {
    if (!W.inversions(x).is_subset_of(iw)) continue;
    if (auto y = W.find_by_inversions(iw - W.inversions(x))) out.emplace_back(x, *y);
  }
  return out;
}

struct Instance {
  WeylElement v, w, x, y;
};

std::uint64_t instance_key(const Instance& in, int sample) {
  std::uint64_t h = 0;
  for (std::uint64_t part : {std::uint64_t(in.v), std::uint64_t(in.w), std::uint64_t(in.x), std::uint64_t(in.y),
                             std::uint64_t(sample)})
    h = mix(h, part);
  return h;
}

}  // namespace

KernelReport verify_kernel_nonzero(const ChevalleyAlgebra& A, const WeylGroup& W, int samples, std::uint64_t seed,
                                   bool keep_records, int jobs) {
  const RootSystem& R = A.roots();
  std::vector<Instance> instances;
  std::vector<CoverProfile> profiles;
  std::vector<std::size_t> profile_of;
  for (const auto& [v, w] : eligible_covers(W)) {
    profiles.push_back(cover_profile(W, v, w));
    for (const auto& [x, y] : decompositions_of(W, w)) {
      instances.push_back({v, w, x, y});
      profile_of.push_back(profiles.size() - 1);
    }
  }
  KernelReport report;
  report.instances = instances.size();
  for (const CoverProfile& p : profiles)
    if (!p.invariants_hold) ++report.profile_failures;

  auto records = parallel_collect<RamificationRecord>(static_cast<int>(instances.size()), jobs, [&](int begin, int end) {
    std::vector<RamificationRecord> out;
    for (int k = begin; k < end; ++k) {
      const Instance& in = instances[static_cast<std::size_t>(k)];
      const CoverProfile& p = profiles[profile_of[static_cast<std::size_t>(k)]];
      for (int sample = 0; sample < samples; ++sample) {
        std::mt19937_64 rng = instance_rng(instance_key(in, sample), seed);
        const UnipotentElement gx = random_unipotent(R, rng);
        const UnipotentElement gy = random_unipotent(R, rng);
        const RamificationMatrix M = build_M(A, W, in.v, in.w, in.x, in.y, gx, gy);
        RamificationRecord rec{in.v, in.w, in.x, in.y, sample, kernel_dimension(M), p.kind, {}, true, true};
        if (p.kind == ProfileCase::Interleaved && p.invariants_hold) {
          const BlockMatrices blocks = extract_blocks(M, p);
          for (int i = 0; i < p.s(); ++i) rec.plus_determinants.push_back(exact_determinant(blocks.plus[static_cast<std::size_t>(i)]));
          const KernelCriterion c = block_kernel_criterion(M, p);
          rec.criterion_holds = c.equivalent() && c.kernel_nonzero == (rec.kernel_dim > 0);
          rec.blocks_ok = check_block_structure(M, p);
        }
        out.push_back(std::move(rec));
      }
    }
    return out;
  });
  for (const RamificationRecord& r : records) {
    ++report.matrices;
    if (r.kernel_dim == 0) ++report.kernel_zero;
    if (!r.criterion_holds) ++report.criterion_failures;
    if (!r.blocks_ok) ++report.block_failures;
  }
  if (keep_records) report.records = std::move(records);
  return report;
}

ProfileReport check_cover_profiles(const WeylGroup& W) {
  ProfileReport out;
  for (const auto& [v, w] : eligible_covers(W)) {
    ++out.covers;
    const CoverProfile p = cover_profile(W, v, w);
    (p.kind == ProfileCase::Interleaved ? out.interleaved : out.triangular)++;
    if (!p.invariants_hold) out.failures.emplace_back(v, w);
  }
  return out;
}

TransferReport check_poincare_transfer(const ChevalleyAlgebra& A, const WeylGroup& W, int samples, std::uint64_t seed) {
  const RootSystem& R = A.roots();
  TransferReport out;
  for (const auto& [v, w] : eligible_covers(W)) {
    const CoverProfile p = cover_profile(W, v, w);
    if (p.kind != ProfileCase::Interleaved || !p.invariants_hold) continue;
    ++out.covers;
    // Poincare case: x = w, y = e.
    std::vector<char> always_zero(static_cast<std::size_t>(p.s()), 1);
    for (int sample = 0; sample < samples; ++sample) {
      std::mt19937_64 rng = instance_rng(instance_key({v, w, w, W.identity()}, sample), seed);
      const RationalMatrix act = negative_block_action(A, random_unipotent(R, rng));
      const BlockMatrices blocks = extract_blocks(build_M(W, v, w, w, W.identity(), act, act), p);
      for (int i = 0; i < p.s(); ++i)
        if (exact_determinant(blocks.plus[static_cast<std::size_t>(i)]) != 0) always_zero[static_cast<std::size_t>(i)] = 0;
    }
    const auto found = std::find(always_zero.begin(), always_zero.end(), 1);
    if (found == always_zero.end()) {
      ++out.missing_block;
      continue;
    }
    const int i0 = static_cast<int>(found - always_zero.begin());
    std::vector<int> relevant = p.plus_blocks[static_cast<std::size_t>(i0)];
    relevant.push_back(p.betas[static_cast<std::size_t>(i0)]);
    const RootSubset span = interval(R, p.betas[static_cast<std::size_t>(i0)], p.gammas[static_cast<std::size_t>(i0)]);
    for (const auto& [x, y] : decompositions_of(W, w)) {
      bool in_x = false, in_y = false;
      for (int a : relevant) {
        if (!span.test(a)) continue;
        (W.inversions(x).test(a) ? in_x : in_y) = true;
      }
      if (in_x && in_y) {
        ++out.two_sided;
        continue;
      }
      ++out.one_sided;
      for (int sample = 0; sample < samples; ++sample) {
        std::mt19937_64 rng = instance_rng(instance_key({v, w, x, y}, sample), seed);
        const UnipotentElement gx = random_unipotent(R, rng);
        const UnipotentElement gy = random_unipotent(R, rng);
        const BlockMatrices blocks = extract_blocks(build_M(A, W, v, w, x, y, gx, gy), p);
        if (exact_determinant(blocks.plus[static_cast<std::size_t>(i0)]) != 0) {
          ++out.transfer_failures;
          break;
        }
      }
    }
  }
  return out;
}

bool inversions_cover_check(const WeylGroup& W, WeylElement w, int beta) {
  const RootSystem& R = W.roots();
  if (beta < 0 || !R.is_positive(beta)) throw PreconditionError("inversions_cover_check needs a positive root");
  const WeylElement v = W.multiply(w, W.reflection(beta));
  if (W.length(v) + 1 != W.length(w)) throw PreconditionError("inversions_cover_check: w s_beta is not covered by w");
  const RootSubset &iw = W.inversions(w), &iv = W.inversions(v);
  const int reach = 2 * R.max_height();
  for (int theta = 0; theta < R.num_positive(); ++theta) {
    if (theta == beta) continue;
    int cw = 0, cv = 0;
    for (int k = -reach; k <= reach; ++k) {
      const IntVector c = R.coords(theta) + k * R.coords(beta);
      const auto r = R.find(c);
      if (!r || !R.is_positive(*r)) continue;
      cw += iw.test(*r);
      cv += iv.test(*r);
    }
    if (cw != cv) return false;
  }
  return true;
}

}  // namespace bkcheck
