#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bkcheck/bk_triples.hpp"
#include "bkcheck/polynomial.hpp"
#include "bkcheck/weyl_group.hpp"

namespace bkcheck {

/// Root r as a linear form in the fundamental-weight variables.
RationalVector root_form(const RootSystem& R, int r);

/// s_i acting on polynomials: x_i -> -x_i - sum_{j != i} a_ji x_j.
SchubertPoly reflect(const RootSystem& R, int i, const SchubertPoly& f);
/// (f - s_i f) / alpha_i
SchubertPoly divided_difference(const RootSystem& R, int i, const SchubertPoly& f);
/// d_{i1} ... d_{ik} f for the word [i1, ..., ik] (rightmost applied first).
SchubertPoly divided_difference(const RootSystem& R, const std::vector<int>& word, SchubertPoly f);

/// (1/|W|) times the product of all positive roots.
SchubertPoly top_schubert_poly(const WeylGroup& W);
/// P_w = d_{w^{-1} w0} P_{w0} along the given reduced word of w^{-1} w0.
SchubertPoly schubert_poly(const WeylGroup& W, WeylElement w, const std::vector<int>& word_of_complement);
/// P_w along the stored reduced word of w^{-1} w0.
SchubertPoly schubert_poly(const WeylGroup& W, WeylElement w);
/// d_{w0} f, a constant when f has degree l(w0).
Rational top_pairing(const WeylGroup& W, const SchubertPoly& f);

/// All P_w computed symbolically top-down; suitable for small ranks.
class SchubertPolyTable {
 public:
  explicit SchubertPolyTable(const WeylGroup& W);
  /// Restores from stored polynomials (cache layer).
  SchubertPolyTable(const WeylGroup& W, std::vector<SchubertPoly> polys);
  const SchubertPoly& poly(WeylElement w) const { return polys_[static_cast<std::size_t>(w)]; }
  const std::vector<SchubertPoly>& polys() const { return polys_; }
  /// c_uv^w = d_{w0}(P_{w0 u} P_{w0 v} P_w), zero on degree mismatch.
  Rational cup_constant(WeylElement u, WeylElement v, WeylElement w) const;

 private:
  const WeylGroup* group_;
  std::vector<SchubertPoly> polys_;
};

/// The same operators evaluated pointwise on the orbit of rho^vee.
///
/// P_w is stored as its values on t_u = u rho^vee for all u. Since alpha(t_u) is the
/// height of u^{-1} alpha, d_i acts on value vectors by
///   (d_i f)(t_u) = (f(t_u) - f(t_{s_i u})) / ht(u^{-1} alpha_i),
/// and d_{w0} becomes a signed orbit sum. Rows are built lazily and memoized.
class OrbitSchubertTable {
 public:
  /// max_rows = 0 means no limit; otherwise exceeding it is a ResourceError.
  explicit OrbitSchubertTable(const WeylGroup& W, std::size_t max_rows = 0);

  const std::vector<Rational>& values(WeylElement w) const;
  /// d_{w0} of a function given by its orbit values.
  Rational top_pairing(const std::vector<Rational>& f) const;
  /// Asserts the result is a non-negative integer.
  Rational cup_constant(WeylElement u, WeylElement v, WeylElement w) const;
  /// Same value without the integrality assertion.
  Rational cup_value(WeylElement u, WeylElement v, WeylElement w) const;
  /// Fundamental-weight coordinates of t_u, for evaluating symbolic polynomials.
  RationalVector orbit_point(WeylElement u) const;
  std::size_t rows_built() const;

 private:
  const std::vector<Rational>& build(WeylElement w) const;

  const WeylGroup* group_;
  std::size_t max_rows_;
  std::vector<int> heights_;  // heights_[u * rank + i] = ht(u^{-1} alpha_i)
  Rational kappa_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<Rational>>> rows_;
  mutable std::size_t built_ = 0;
};

/// Sparse combination of Schubert classes sigma_w = [X_{w0 w}].
using CohomologyClass = std::map<WeylElement, Rational>;
/// sigma_{s_i} * c by the Chevalley formula.
CohomologyClass chevalley_multiply(const WeylGroup& W, int i, const CohomologyClass& c);

struct MainViolation {
  BKTriple triple;
  Rational constant;
};
struct MainReport {
  std::size_t triples_checked = 0;
  std::vector<MainViolation> violations;
};
/// Checks c_uv^w = 1 on the given BK triples.
MainReport verify_main(const WeylGroup& W, const std::vector<BKTriple>& triples, const OrbitSchubertTable& table,
                       int jobs = 1);

}  // namespace bkcheck
