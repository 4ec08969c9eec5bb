#include "bkcheck/linalg.hpp"

#include <utility>

#include "bkcheck/errors.hpp"

namespace bkcheck {

namespace {

void swap_rows(RationalMatrix& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

Eigen::Index find_pivot(const RationalMatrix& m, Eigen::Index from, Eigen::Index col) {
  for (Eigen::Index r = from; r < m.rows(); ++r)
    if (m(r, col) != 0) return r;
  return -1;
}

}  // namespace

EchelonForm reduce_in_place(RationalMatrix m) {
  EchelonForm out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    const Eigen::Index p = find_pivot(m, row, col);
    if (p < 0) continue;
    swap_rows(m, p, row);
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c)
      if (m(row, c) != 0) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Eigen::Index rank_in_place(RationalMatrix& m) {
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    const Eigen::Index p = find_pivot(m, row, col);
    if (p < 0) continue;
    swap_rows(m, p, row);
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return row;
}

Rational determinant_in_place(RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  Rational det = 1;
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    const Eigen::Index p = find_pivot(m, col, col);
    if (p < 0) return Rational(0);
    if (p != col) {
      swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c)
        if (m(col, c) != 0) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text) {
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw ValidationError("not a rational number: '" + std::string(text) + "'");
  }
}

}  // namespace bkcheck
