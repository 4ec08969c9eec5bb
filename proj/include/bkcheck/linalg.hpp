#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bkcheck {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline constexpr int kMaxRank = 8;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Coordinates in the simple-root basis. Storage is inline, no heap traffic.
using IntVector = Eigen::Matrix<int, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<Eigen::Index> pivots;
};

/// Reduced row echelon form over Q, destructive on its argument.
EchelonForm reduce_in_place(RationalMatrix m);

/// Rank of m; m is consumed.
Eigen::Index rank_in_place(RationalMatrix& m);

/// Determinant of a square matrix; m is consumed.
Rational determinant_in_place(RationalMatrix& m);

template <typename Derived>
EchelonForm row_echelon(const Eigen::MatrixBase<Derived>& m) {
  return reduce_in_place(m.template cast<Rational>());
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix copy = m.template cast<Rational>();
  return rank_in_place(copy);
}

template <typename Derived>
Rational exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix copy = m.template cast<Rational>();
  return determinant_in_place(copy);
}

/// Columns form a basis of the right kernel.
template <typename Derived>
RationalMatrix kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  const EchelonForm e = row_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  RationalMatrix basis(n, n - static_cast<Eigen::Index>(e.pivots.size()));
  basis.setZero();
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, col) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], col) = -e.reduced(static_cast<Eigen::Index>(r), f);
    ++col;
  }
  return basis;
}

/// Some solution of a x = b (free variables set to zero), or nothing if inconsistent.
template <typename DA, typename DB>
std::optional<RationalVector> solve_exact(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a.template cast<Rational>();
  aug.col(a.cols()) = b.template cast<Rational>();
  const EchelonForm e = reduce_in_place(std::move(aug));
  RationalVector x = RationalVector::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

template <typename Derived>
RationalMatrix exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m.template cast<Rational>();
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  const EchelonForm e = reduce_in_place(std::move(aug));
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots.back() >= n)
    throw std::domain_error("exact_inverse: singular matrix");
  return e.reduced.rightCols(n);
}

bool is_integer(const Rational& q);
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace bkcheck
