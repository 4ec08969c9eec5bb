#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkcheck {

/// A set of positive-root indices. 128 bits cover E8 (120 positive roots).
class RootSubset {
 public:
  static constexpr int kCapacity = 128;

  constexpr RootSubset() = default;

  static RootSubset full(int n) {
    RootSubset s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }
  static RootSubset singleton(int i) {
    RootSubset s;
    s.set(i);
    return s;
  }

  bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }
  bool is_subset_of(const RootSubset& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }
  bool intersects(const RootSubset& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }

  RootSubset operator&(const RootSubset& o) const { return {words_[0] & o.words_[0], words_[1] & o.words_[1]}; }
  RootSubset operator|(const RootSubset& o) const { return {words_[0] | o.words_[0], words_[1] | o.words_[1]}; }
  RootSubset operator^(const RootSubset& o) const { return {words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]}; }
  /// Set difference.
  RootSubset operator-(const RootSubset& o) const { return {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]}; }
  RootSubset& operator|=(const RootSubset& o) { return *this = *this | o; }
  RootSubset& operator&=(const RootSubset& o) { return *this = *this & o; }

  friend bool operator==(const RootSubset&, const RootSubset&) = default;
  friend std::strong_ordering operator<=>(const RootSubset& a, const RootSubset& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  /// Smallest member, or -1 for the empty set.
  int first() const {
    if (words_[0]) return std::countr_zero(words_[0]);
    if (words_[1]) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= words_[1] + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  const std::array<std::uint64_t, 2>& words() const { return words_; }

  std::string to_hex() const;
  static RootSubset from_hex(const std::string& hex);

 private:
  constexpr RootSubset(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
  std::array<std::uint64_t, 2> words_{0, 0};
};

struct RootSubsetHash {
  std::size_t operator()(const RootSubset& s) const { return s.hash(); }
};

inline std::string RootSubset::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(32, '0');
  for (int i = 0; i < 32; ++i) {
    const std::uint64_t word = words_[static_cast<std::size_t>(1 - i / 16)];
    out[static_cast<std::size_t>(i)] = kDigits[(word >> (4 * (15 - i % 16))) & 0xF];
  }
  return out;
}

inline RootSubset RootSubset::from_hex(const std::string& hex) {
  RootSubset s;
  if (hex.size() != 32) throw std::invalid_argument("RootSubset::from_hex expects 32 hex digits");
  for (int i = 0; i < 32; ++i) {
    const char c = hex[static_cast<std::size_t>(i)];
    std::uint64_t d;
    if (c >= '0' && c <= '9') d = static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') d = static_cast<std::uint64_t>(c - 'a' + 10);
    else throw std::invalid_argument("RootSubset::from_hex: bad digit");
    s.words_[static_cast<std::size_t>(1 - i / 16)] |= d << (4 * (15 - i % 16));
  }
  return s;
}

}  // namespace bkcheck
