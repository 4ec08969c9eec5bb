#include "bkcheck/lp.hpp"

#include <vector>

#include "bkcheck/errors.hpp"

namespace bkcheck {

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw PreconditionError("find_nonnegative_solution: shape mismatch");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index rhs = n + m;
  // Rows 0..m-1 are constraints over [x | artificials | b]; row m holds reduced costs.
  RationalMatrix t = RationalMatrix::Zero(m + 1, n + m + 1);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, rhs) = flip ? Rational(-b(i)) : b(i);
    basis[static_cast<std::size_t>(i)] = n + i;
    for (Eigen::Index j = 0; j < n; ++j) t(m, j) -= t(i, j);
    t(m, rhs) -= t(i, rhs);
  }

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur in phase one
    const Rational pivot = t(leave, enter);
    for (Eigen::Index j = 0; j <= rhs; ++j)
      if (t(leave, j) != 0) t(leave, j) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational f = t(i, enter);
      for (Eigen::Index j = 0; j <= rhs; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (t(m, rhs) != 0) return std::nullopt;
  RationalVector z = RationalVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[static_cast<std::size_t>(i)] < n) z(basis[static_cast<std::size_t>(i)]) = t(i, rhs);
  if (a * z != b) throw std::logic_error("simplex produced a non-solution");
  return z;
}

}  // namespace bkcheck
