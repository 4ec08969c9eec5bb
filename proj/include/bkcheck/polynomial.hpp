#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bkcheck/linalg.hpp"

namespace bkcheck {

/// Sparse polynomial with exact rational coefficients in at most 8 variables
/// (fundamental-weight coordinates x_1..x_r).
///
/// A monomial packs one exponent byte per variable, variable 0 in the most
/// significant byte, so integer order on monomials is lexicographic order and
/// monomial multiplication is integer addition.
class SchubertPoly {
 public:
  using Monomial = std::uint64_t;
  static constexpr int kMaxExponent = 255;

  explicit SchubertPoly(int num_vars = 0) : num_vars_(num_vars) {}

  static SchubertPoly constant(int num_vars, const Rational& c);
  static SchubertPoly variable(int num_vars, int i);
  /// sum_j coeffs(j) x_j
  static SchubertPoly linear(const RationalVector& coeffs);

  static int exponent(Monomial m, int var) { return static_cast<int>((m >> shift(var)) & 0xFF); }
  static Monomial unit(int var) { return Monomial{1} << shift(var); }
  static int total_degree(Monomial m);

  int num_vars() const { return num_vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of the highest term, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;

  void add_term(Monomial m, const Rational& c);

  SchubertPoly& operator+=(const SchubertPoly& o);
  SchubertPoly& operator-=(const SchubertPoly& o);
  SchubertPoly& operator*=(const Rational& c);
  friend SchubertPoly operator+(SchubertPoly a, const SchubertPoly& b) { return a += b; }
  friend SchubertPoly operator-(SchubertPoly a, const SchubertPoly& b) { return a -= b; }
  friend SchubertPoly operator*(SchubertPoly a, const Rational& c) { return a *= c; }
  friend SchubertPoly operator*(const SchubertPoly& a, const SchubertPoly& b);
  friend bool operator==(const SchubertPoly& a, const SchubertPoly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const RationalVector& x) const;
  std::string to_string() const;

 private:
  static int shift(int var) { return 8 * (7 - var); }
  int num_vars_;
  std::map<Monomial, Rational> terms_;
};

/// Substitutes every variable by a linear form: x_j -> sum_k images(k, j) x_k.
SchubertPoly substitute_linear(const SchubertPoly& f, const RationalMatrix& images);

/// Substitutes a single variable x_var by sum_k form(k) x_k.
SchubertPoly substitute_variable(const SchubertPoly& f, int var, const RationalVector& form);

/// Exact quotient f / l for a linear form l whose coefficient on x_var is nonzero.
/// Throws std::logic_error when the division leaves a remainder.
SchubertPoly divide_exact_linear(SchubertPoly f, const RationalVector& l, int var);

}  // namespace bkcheck
