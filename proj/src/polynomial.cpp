#include "bkcheck/polynomial.hpp"

#include <sstream>
#include <vector>

#include "bkcheck/errors.hpp"

namespace bkcheck {

SchubertPoly SchubertPoly::constant(int num_vars, const Rational& c) {
  SchubertPoly p(num_vars);
  p.add_term(0, c);
  return p;
}

SchubertPoly SchubertPoly::variable(int num_vars, int i) {
  SchubertPoly p(num_vars);
  p.add_term(unit(i), Rational(1));
  return p;
}

SchubertPoly SchubertPoly::linear(const RationalVector& coeffs) {
  SchubertPoly p(static_cast<int>(coeffs.size()));
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) p.add_term(unit(static_cast<int>(j)), coeffs(j));
  return p;
}

int SchubertPoly::total_degree(Monomial m) {
  int d = 0;
  for (int v = 0; v < 8; ++v) d += exponent(m, v);
  return d;
}

int SchubertPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool SchubertPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

Rational SchubertPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertPoly& SchubertPoly::operator+=(const SchubertPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SchubertPoly& SchubertPoly::operator-=(const SchubertPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SchubertPoly& SchubertPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SchubertPoly operator*(const SchubertPoly& a, const SchubertPoly& b) {
  SchubertPoly out(std::max(a.num_vars_, b.num_vars_));
  if (a.degree() + b.degree() > SchubertPoly::kMaxExponent) throw ResourceError("polynomial degree overflow");
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Rational SchubertPoly::evaluate(const RationalVector& x) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < num_vars_; ++v)
      for (int e = exponent(m, v); e > 0; --e) t *= x(v);
    total += t;
  }
  return total;
}

std::string SchubertPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (int v = 0; v < num_vars_; ++v) {
      const int e = exponent(it->first, v);
      if (e > 0) os << "*x" << (v + 1) << (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return os.str();
}

SchubertPoly substitute_linear(const SchubertPoly& f, const RationalMatrix& images) {
  const int n = f.num_vars();
  // Powers of each substituted variable, built on demand.
  std::vector<std::vector<SchubertPoly>> powers(static_cast<std::size_t>(n));
  auto power = [&](int v, int e) -> const SchubertPoly& {
    auto& list = powers[static_cast<std::size_t>(v)];
    if (list.empty()) {
      list.push_back(SchubertPoly::constant(n, Rational(1)));
      list.push_back(SchubertPoly::linear(images.col(v)));
    }
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * list[1]);
    return list[static_cast<std::size_t>(e)];
  };
  SchubertPoly out(n);
  for (const auto& [m, c] : f.terms()) {
    SchubertPoly term = SchubertPoly::constant(n, c);
    for (int v = 0; v < n; ++v)
      if (const int e = SchubertPoly::exponent(m, v); e > 0) term = term * power(v, e);
    out += term;
  }
  return out;
}

SchubertPoly substitute_variable(const SchubertPoly& f, int var, const RationalVector& form) {
  const int n = f.num_vars();
  const SchubertPoly::Monomial unit = SchubertPoly::unit(var);
  std::vector<SchubertPoly> buckets;
  for (const auto& [m, c] : f.terms()) {
    const int e = SchubertPoly::exponent(m, var);
    if (static_cast<int>(buckets.size()) <= e) buckets.resize(static_cast<std::size_t>(e + 1), SchubertPoly(n));
    buckets[static_cast<std::size_t>(e)].add_term(m - unit * static_cast<SchubertPoly::Monomial>(e), c);
  }
  const SchubertPoly l = SchubertPoly::linear(form);
  // Horner evaluation in the substituted variable.
  SchubertPoly out(n);
  for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
    out = out * l;
    out += *it;
  }
  return out;
}

SchubertPoly divide_exact_linear(SchubertPoly f, const RationalVector& l, int var) {
  const int n = f.num_vars();
  const Rational lead = l(var);
  if (lead == 0) throw std::logic_error("divide_exact_linear: zero leading coefficient");
  // Bucket the terms by their power of x_var, then do long division from the top power down.
  std::vector<std::map<SchubertPoly::Monomial, Rational>> buckets;
  const SchubertPoly::Monomial unit = SchubertPoly::unit(var);
  for (const auto& [m, c] : f.terms()) {
    const int e = SchubertPoly::exponent(m, var);
    if (static_cast<int>(buckets.size()) <= e) buckets.resize(static_cast<std::size_t>(e + 1));
    buckets[static_cast<std::size_t>(e)].emplace(m - unit * static_cast<SchubertPoly::Monomial>(e), c);
  }
  SchubertPoly quotient(n);
  for (int e = static_cast<int>(buckets.size()) - 1; e >= 1; --e) {
    for (const auto& [stripped, c] : buckets[static_cast<std::size_t>(e)]) {
      if (c == 0) continue;
      const Rational qc = c / lead;
      quotient.add_term(stripped + unit * static_cast<SchubertPoly::Monomial>(e - 1), qc);
      auto& below = buckets[static_cast<std::size_t>(e - 1)];
      for (Eigen::Index k = 0; k < l.size(); ++k) {
        if (k == var || l(k) == 0) continue;
        auto [it, inserted] = below.emplace(stripped + SchubertPoly::unit(static_cast<int>(k)), -qc * l(k));
        if (!inserted) it->second -= qc * l(k);
      }
    }
  }
  if (!buckets.empty())
    for (const auto& [m, c] : buckets[0])
      if (c != 0) throw std::logic_error("divided difference: inexact division");
  return quotient;
}

}  // namespace bkcheck
