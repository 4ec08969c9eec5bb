#include "bkcheck/chevalley.hpp"

#include <cstdlib>
#include <map>

#include "bkcheck/errors.hpp"

namespace bkcheck {

int string_below(const RootSystem& R, int phi, int psi) {
  if (phi == psi || phi == R.negative(psi)) throw PreconditionError("string_below needs phi != +-psi");
  int p = 0;
  int cur = psi;
  while (true) {
    const int next = R.add(cur, R.negative(phi));
    if (next < 0) return p;
    cur = next;
    ++p;
  }
}

namespace {

class ConstantBuilder {
 public:
  explicit ConstantBuilder(const RootSystem& R)
      : R_(R), n_(static_cast<std::size_t>(R.num_roots() * R.num_roots()), 0),
        known_(static_cast<std::size_t>(R.num_roots() * R.num_roots()), 0),
        extraspecial_(static_cast<std::size_t>(R.num_positive()), {-1, -1}) {}

  void run() {
    const int np = R_.num_positive();
    for (int xi = 0; xi < np; ++xi) {
      std::vector<std::pair<int, int>> pairs;  // (r, s) with r < s, r + s = xi
      for (int r = 0; r < xi; ++r) {
        const int s = R_.add(xi, R_.negative(r));
        if (s >= 0 && R_.is_positive(s) && r < s) pairs.emplace_back(r, s);
      }
      if (pairs.empty()) continue;
      const auto [r0, s0] = pairs.front();
      extraspecial_[static_cast<std::size_t>(xi)] = {r0, s0};
      set_positive(r0, s0, string_below(R_, r0, s0) + 1);
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto [r, s] = pairs[k];
        // Four-root relation with r + s - r0 - s0 = 0.
        Rational bracket = 0;
        if (const int d = R_.add(s, R_.negative(r0)); d >= 0)
          bracket += Rational(any(s, R_.negative(r0)) * any(r, R_.negative(s0))) / R_.norm2(d);
        if (const int d = R_.add(r, R_.negative(r0)); d >= 0)
          bracket += Rational(any(R_.negative(r0), r) * any(s, R_.negative(s0))) / R_.norm2(d);
        const Rational value = R_.norm2(xi) / structure(r0, s0) * bracket;
        if (!is_integer(value) || value == 0) throw std::logic_error("structure constant is not a nonzero integer");
        set_positive(r, s, static_cast<int>(value));
      }
    }
    for (int a = 0; a < R_.num_roots(); ++a)
      for (int b = 0; b < R_.num_roots(); ++b)
        if (R_.add(a, b) >= 0) n_[idx(a, b)] = any(a, b);
  }

  std::vector<int> take_constants() { return std::move(n_); }
  std::vector<std::pair<int, int>> take_extraspecial() { return std::move(extraspecial_); }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * R_.num_roots() + b); }

  void set_positive(int r, int s, int value) {
    n_[idx(r, s)] = value;
    n_[idx(s, r)] = -value;
    known_[idx(r, s)] = known_[idx(s, r)] = 1;
  }

  int structure(int a, int b) const {
    if (!known_[idx(a, b)]) throw std::logic_error("structure constant requested before it was fixed");
    return n_[idx(a, b)];
  }

  /// N_{a,b} for arbitrary roots, reduced to positive pairs of smaller height sum.
  int any(int a, int b) const {
    const int c = R_.add(a, b);
    if (c < 0) return 0;
    const bool pa = R_.is_positive(a), pb = R_.is_positive(b);
    if (pa && pb) return structure(a, b);
    if (!pa && !pb) return -any(R_.negative(a), R_.negative(b));
    if (!pa) return -any(b, a);
    // a > 0 > b
    Rational value;
    if (R_.is_positive(c)) value = R_.norm2(c) / R_.norm2(a) * structure(c, R_.negative(b));
    else value = R_.norm2(c) / R_.norm2(b) * structure(R_.negative(c), a);
    if (!is_integer(value)) throw std::logic_error("non-integral mixed structure constant");
    return static_cast<int>(value);
  }

  const RootSystem& R_;
  std::vector<int> n_;
  std::vector<char> known_;
  std::vector<std::pair<int, int>> extraspecial_;
};

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(std::shared_ptr<const RootSystem> roots) : roots_(std::move(roots)) {
  ConstantBuilder builder(*roots_);
  builder.run();
  n_ = builder.take_constants();
  extraspecial_ = builder.take_extraspecial();
}

ChevalleyAlgebra build_chevalley(std::shared_ptr<const RootSystem> roots) { return ChevalleyAlgebra(std::move(roots)); }

SparseElement ChevalleyAlgebra::bracket_basis(int a, int b) const {
  const RootSystem& R = *roots_;
  const bool ra = is_root_index(a), rb = is_root_index(b);
  if (!ra && !rb) return {};
  if (!ra) {
    const int i = a - R.num_roots();
    const int c = R.pair_with_simple_coroot(b, i);
    return c == 0 ? SparseElement{} : SparseElement{{b, c}};
  }
  if (!rb) {
    SparseElement out = bracket_basis(b, a);
    for (auto& [k, c] : out) c = -c;
    return out;
  }
  if (b == R.negative(a)) {
    SparseElement out;
    const IntVector& h = R.coroot(a);
    for (int i = 0; i < R.rank(); ++i)
      if (h(i) != 0) out.emplace_back(cartan_index(i), h(i));
    return out;
  }
  const int sum = R.add(a, b);
  if (sum < 0) return {};
  return {{sum, structure_constant(a, b)}};
}

RationalVector ChevalleyAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  RationalVector out = RationalVector::Zero(dimension());
  for (int a = 0; a < dimension(); ++a) {
    if (x(a) == 0) continue;
    for (int b = 0; b < dimension(); ++b) {
      if (y(b) == 0) continue;
      for (const auto& [k, c] : bracket_basis(a, b)) out(k) += x(a) * y(b) * c;
    }
  }
  return out;
}

RationalMatrix ChevalleyAlgebra::ad(const RationalVector& x) const {
  RationalMatrix out = RationalMatrix::Zero(dimension(), dimension());
  for (int a = 0; a < dimension(); ++a) {
    if (x(a) == 0) continue;
    for (int b = 0; b < dimension(); ++b)
      for (const auto& [k, c] : bracket_basis(a, b)) out(k, b) += x(a) * c;
  }
  return out;
}

ChevalleyAlgebra ChevalleyAlgebra::with_flipped_sign(int a, int b) const {
  ChevalleyAlgebra out = *this;
  const int n = roots_->num_roots();
  out.n_[static_cast<std::size_t>(a * n + b)] *= -1;
  out.n_[static_cast<std::size_t>(b * n + a)] *= -1;
  return out;
}

AlgebraCheck check_structure_constants(const ChevalleyAlgebra& A) {
  const RootSystem& R = A.roots();
  AlgebraCheck out;
  for (int a = 0; a < R.num_roots(); ++a)
    for (int b = 0; b < R.num_roots(); ++b) {
      if (R.add(a, b) < 0) continue;
      ++out.checked;
      const int n = A.structure_constant(a, b);
      const int p = string_below(R, a, b);
      if (std::abs(n) != p + 1 || n != -A.structure_constant(b, a) ||
          n != -A.structure_constant(R.negative(a), R.negative(b)))
        ++out.failures;
    }
  return out;
}

AlgebraCheck check_jacobi(const ChevalleyAlgebra& A) {
  const int d = A.dimension();
  auto apply = [&](int a, const SparseElement& v, std::map<int, std::int64_t>& acc) {
    for (const auto& [k, c] : v)
      for (const auto& [k2, c2] : A.bracket_basis(a, k)) acc[k2] += c * c2;
  };
  AlgebraCheck out;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      for (int c = b; c < d; ++c) {
        std::map<int, std::int64_t> acc;
        apply(a, A.bracket_basis(b, c), acc);
        apply(b, A.bracket_basis(c, a), acc);
        apply(c, A.bracket_basis(a, b), acc);
        ++out.checked;
        for (const auto& [k, v] : acc)
          if (v != 0) {
            ++out.failures;
            break;
          }
      }
  return out;
}

RationalMatrix exp_nilpotent(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  RationalMatrix out = RationalMatrix::Identity(n, n);
  RationalMatrix term = RationalMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    term = (term * m).eval() / Rational(k);
    if (term.isZero()) return out;
    out += term;
  }
  throw std::logic_error("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace bkcheck
