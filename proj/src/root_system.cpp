#include "bkcheck/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bkcheck/errors.hpp"

namespace bkcheck {

namespace {

std::uint64_t pack(const IntVector& v) {
  std::uint64_t key = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(v(k) + 64)) << (8 * k);
  return key;
}

bool valid_type(const CartanType& t) {
  switch (t.series) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

/// Gram matrix of one irreducible component in Bourbaki numbering.
RationalMatrix component_gram(const CartanType& t) {
  const int n = t.rank;
  RationalMatrix g = RationalMatrix::Zero(n, n);
  auto link = [&](int i, int j, const Rational& value) {
    g(i - 1, j - 1) = value;
    g(j - 1, i - 1) = value;
  };
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  switch (t.series) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      g(n - 1, n - 1) = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n - 1; ++i) g(i, i) = 1;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 1, n, -1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g(2, 2) = 1;
      g(3, 3) = 1;
      link(1, 2, -1);
      link(2, 3, -1);
      link(3, 4, Rational(-1, 2));
      break;
    case 'G':
      g(0, 0) = Rational(2, 3);
      link(1, 2, -1);
      break;
    default:
      break;
  }
  return g;
}

}  // namespace

std::vector<CartanType> parse_cartan_type(std::string_view text) {
  std::vector<CartanType> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw ValidationError("empty component in Cartan type '" + std::string(text) + "'");
    CartanType t;
    t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    const std::string digits = token.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 2)
      throw ValidationError("malformed Cartan type component '" + token + "'");
    t.rank = std::stoi(digits);
    if (!valid_type(t)) throw ValidationError("invalid Cartan type " + token);
    out.push_back(t);
    token.clear();
  };
  for (char c : text) {
    if (c == 'x' || c == '+' || c == '*') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) token.push_back(c);
  }
  flush();
  return out;
}

int classical_positive_count(const CartanType& t) {
  const int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
  }
}

RootSystem::RootSystem(std::vector<CartanType> components) : components_(std::move(components)) {
  if (components_.empty()) throw ValidationError("root system needs at least one component");
  for (const auto& c : components_) {
    if (!valid_type(c)) throw ValidationError("invalid Cartan type " + c.label());
    rank_ += c.rank;
    if (!label_.empty()) label_ += "x";
    label_ += c.label();
  }
  if (rank_ > kMaxRank) throw ValidationError("total rank " + std::to_string(rank_) + " exceeds the supported maximum 8");
  build_gram();
  generate_roots();
  build_tables();
  find_automorphisms();
}

void RootSystem::build_gram() {
  gram_ = RationalMatrix::Zero(rank_, rank_);
  int offset = 0;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const int n = components_[c].rank;
    gram_.block(offset, offset, n, n) = component_gram(components_[c]);
    for (int i = 0; i < n; ++i) simple_component_.push_back(static_cast<int>(c));
    offset += n;
  }
  cartan_.resize(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      const Rational a = 2 * gram_(i, j) / gram_(i, i);
      cartan_(i, j) = static_cast<int>(a);
    }
}

int RootSystem::pair_with_simple_coroot(int r, int i) const {
  const IntVector& v = coords(r);
  int s = 0;
  for (int k = 0; k < rank_; ++k) s += v(k) * cartan_(i, k);
  return s;
}

void RootSystem::generate_roots() {
  std::vector<IntVector> positive;
  std::unordered_map<std::uint64_t, int> seen;
  for (int i = 0; i < rank_; ++i) {
    IntVector e = IntVector::Zero(rank_);
    e(i) = 1;
    seen.emplace(pack(e), static_cast<int>(positive.size()));
    positive.push_back(e);
  }
  // Root strings: for alpha != alpha_i, alpha + alpha_i is a root iff p - <alpha, alpha_i^vee> > 0.
  for (std::size_t idx = 0; idx < positive.size(); ++idx) {
    for (int i = 0; i < rank_; ++i) {
      const IntVector alpha = positive[idx];
      if (alpha.sum() == 1 && alpha(i) == 1) continue;
      int p = 0;
      IntVector down = alpha;
      while (true) {
        down(i) -= 1;
        if (down(i) < 0 || !seen.count(pack(down))) break;
        ++p;
      }
      int pairing = 0;
      for (int k = 0; k < rank_; ++k) pairing += alpha(k) * cartan_(i, k);
      if (p - pairing > 0) {
        IntVector up = alpha;
        up(i) += 1;
        if (seen.emplace(pack(up), static_cast<int>(positive.size())).second) positive.push_back(up);
      }
    }
  }
  std::sort(positive.begin(), positive.end(), [](const IntVector& a, const IntVector& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  num_positive_ = static_cast<int>(positive.size());
  if (num_positive_ > RootSubset::kCapacity) throw ResourceError("too many positive roots for RootSubset");
  coords_ = positive;
  for (const auto& v : positive) coords_.push_back(-v);
  for (int r = 0; r < num_roots(); ++r) lookup_.emplace(pack(coords(r)), r);
}

std::optional<int> RootSystem::find(const IntVector& v) const {
  if (v.size() != rank_) return std::nullopt;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (v(k) < -63 || v(k) > 63) return std::nullopt;
  auto it = lookup_.find(pack(v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::find_or_throw(const IntVector& v) const {
  auto r = find(v);
  if (!r) throw std::logic_error("vector is not a root of " + label_);
  return *r;
}

void RootSystem::build_tables() {
  const int nr = num_roots();
  heights_.resize(static_cast<std::size_t>(nr));
  for (int r = 0; r < nr; ++r) heights_[static_cast<std::size_t>(r)] = coords(r).sum();

  add_.assign(static_cast<std::size_t>(nr * nr), -1);
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      const IntVector s = coords(a) + coords(b);
      if (auto r = find(s)) add_[static_cast<std::size_t>(a * nr + b)] = *r;
    }
  for (int a = 0; a < num_positive_; ++a)
    for (int b = a + 1; b < num_positive_; ++b)
      if (const int s = add(a, b); s >= 0) positive_sums_.push_back({a, b, s});

  norms_.resize(static_cast<std::size_t>(nr));
  coroots_.resize(static_cast<std::size_t>(nr));
  for (int r = 0; r < nr; ++r) {
    const RationalVector v = coords(r).cast<Rational>();
    norms_[static_cast<std::size_t>(r)] = form(v, v);
    IntVector c(rank_);
    for (int i = 0; i < rank_; ++i) {
      const Rational ci = coords(r)(i) * gram_(i, i) / norms_[static_cast<std::size_t>(r)];
      if (!is_integer(ci)) throw std::logic_error("non-integral coroot coordinate");
      c(i) = static_cast<int>(ci);
    }
    coroots_[static_cast<std::size_t>(r)] = c;
  }

  rho_ = RationalVector::Zero(rank_);
  for (int r = 0; r < num_positive_; ++r) rho_ += coords(r).cast<Rational>();
  rho_ /= Rational(2);

  weights_ = exact_inverse(cartan_);

  reflections_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(nr)));
  for (int i = 0; i < rank_; ++i)
    for (int r = 0; r < nr; ++r) {
      IntVector image = coords(r);
      image(i) -= pair_with_simple_coroot(r, i);
      reflections_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = find_or_throw(image);
    }
}

void RootSystem::find_automorphisms() {
  std::vector<int> perm(static_cast<std::size_t>(rank_));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < rank_ && ok; ++i)
      for (int j = 0; j < rank_ && ok; ++j)
        ok = cartan_(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) == cartan_(i, j);
    if (ok) automorphisms_.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

int RootSystem::apply_automorphism(const std::vector<int>& perm, int r) const {
  IntVector image = IntVector::Zero(rank_);
  for (int i = 0; i < rank_; ++i) image(perm[static_cast<std::size_t>(i)]) = coords(r)(i);
  return find_or_throw(image);
}

Rational RootSystem::form(int a, int b) const {
  return form(RationalVector(coords(a).cast<Rational>()), RationalVector(coords(b).cast<Rational>()));
}

bool RootSystem::dominance_leq(int a, int b) const { return ((coords(b) - coords(a)).array() >= 0).all(); }

bool RootSystem::simply_laced() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const CartanType& t) { return t.series == 'A' || t.series == 'D' || t.series == 'E'; });
}

std::string RootSystem::format_root(int r) const {
  std::ostringstream os;
  if (!is_positive(r)) os << '-';
  const IntVector& v = coords(absolute(r));
  for (int k = 0; k < rank_; ++k) os << v(k);
  return os.str();
}

RootSystem build_root_system(char series, int rank) {
  return RootSystem({CartanType{static_cast<char>(std::toupper(static_cast<unsigned char>(series))), rank}});
}

RootSystem build_root_system(std::string_view type) { return RootSystem(parse_cartan_type(type)); }

std::optional<Root> root_sum(const RootSystem& R, const Root& phi, const Root& psi) {
  const int s = R.add(phi.index, psi.index);
  if (s < 0) return std::nullopt;
  return R.root(s);
}

RootSubset interval(const RootSystem& R, int phi, int psi, IntervalKind kind) {
  if (!R.is_positive(phi) || !R.is_positive(psi)) throw PreconditionError("interval endpoints must be positive roots");
  RootSubset out;
  if (!R.dominance_leq(phi, psi)) return out;
  for (int g = 0; g < R.num_positive(); ++g) {
    if (kind == IntervalKind::Open && (g == phi || g == psi)) continue;
    if (R.dominance_leq(phi, g) && R.dominance_leq(g, psi)) out.set(g);
  }
  return out;
}

Rational pairing(const RootSystem& R, const RationalVector& x, int phi) {
  return R.form(x, RationalVector(R.coords(phi).cast<Rational>()));
}

Rational coroot_pairing(const RootSystem& R, const RationalVector& x, int phi) {
  return 2 * pairing(R, x, phi) / R.norm2(phi);
}

nlohmann::json to_json(const RootSystem& R) {
  nlohmann::json doc;
  doc["format_version"] = 1;
  doc["type"] = R.label();
  doc["rank"] = R.rank();
  doc["positive_count"] = R.num_positive();
  auto& cartan = doc["cartan"] = nlohmann::json::array();
  for (int i = 0; i < R.rank(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < R.rank(); ++j) row.push_back(R.cartan()(i, j));
    cartan.push_back(row);
  }
  auto& roots = doc["roots"] = nlohmann::json::array();
  for (int r = 0; r < R.num_roots(); ++r) roots.push_back(std::vector<int>(R.coords(r).data(), R.coords(r).data() + R.rank()));
  return doc;
}

RootSystem root_system_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("format_version", 0) != 1) throw ValidationError("unsupported root system document");
  RootSystem R = build_root_system(doc.at("type").get<std::string>());
  if (doc.contains("roots")) {
    const auto& roots = doc.at("roots");
    if (static_cast<int>(roots.size()) != R.num_roots()) throw ValidationError("root count mismatch in document");
    for (int r = 0; r < R.num_roots(); ++r) {
      const auto v = roots[static_cast<std::size_t>(r)].get<std::vector<int>>();
      if (!std::equal(v.begin(), v.end(), R.coords(r).data(), R.coords(r).data() + R.rank()) ||
          static_cast<int>(v.size()) != R.rank())
        throw ValidationError("root table mismatch in document");
    }
  }
  return R;
}

}  // namespace bkcheck
