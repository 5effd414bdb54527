#pragma once

// Symbol-level arithmetic over Z4 and F2: vectors, the Gray map, Lee and
// Hamming weights, and the alpha reduction used by the linearity test.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "z4poset/errors.hpp"

namespace z4poset {

/// Element of F_2^n packed into an integer: bit k-1 holds coordinate k.
/// Only used for the small ambient spaces (n <= kMaxClosedFormDim).
using Mask = std::uint32_t;

/// Largest n accepted by closed-form (counting only) paths.
inline constexpr int kMaxClosedFormDim = 30;
/// Largest n for anything that materializes F_2^n, Z_4^n or L.
inline constexpr int kMaxMaterializeDim = 12;

namespace detail {

/// Lee weight of a single Z4 symbol.
inline constexpr std::uint8_t kSymbolLee[4] = {0, 1, 2, 1};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

}  // namespace detail

/// Vector over F_2, stored one bit per coordinate in 64-bit words.
/// Coordinate 1 is index 0. Bits beyond size() are kept zero.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  BinaryVector(std::initializer_list<int> bits) : BinaryVector(bits.size()) {
    std::size_t k = 0;
    for (int b : bits) set(k++, b != 0);
  }

  static BinaryVector from_bits(std::span<const int> bits) {
    BinaryVector v(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) v.set(k, bits[k] != 0);
    return v;
  }

  static BinaryVector from_mask(std::size_t n, std::uint64_t mask) {
    BinaryVector v(n);
    if (n == 0) return v;
    if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
    v.words_[0] = mask;
    return v;
  }

  /// Builds the vector whose support is the given 1-based index set.
  static BinaryVector from_support(std::size_t n, std::initializer_list<std::size_t> support) {
    BinaryVector v(n);
    for (std::size_t k : support) {
      if (k == 0 || k > n) throw DimensionError("from_support: index out of range");
      v.set(k - 1, true);
    }
    return v;
  }

  std::size_t size() const noexcept { return n_; }

  bool operator[](std::size_t k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1U; }

  void set(std::size_t k, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (value)
      words_[k >> 6] |= bit;
    else
      words_[k >> 6] &= ~bit;
  }

  /// Packed value; valid only for n <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  /// 1-based indices of the nonzero coordinates, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n_; ++k)
      if ((*this)[k]) s.push_back(k + 1);
    return s;
  }

  std::vector<int> bits() const {
    std::vector<int> b(n_);
    for (std::size_t k = 0; k < n_; ++k) b[k] = (*this)[k] ? 1 : 0;
    return b;
  }

  BinaryVector& operator^=(const BinaryVector& o) {
    detail::require_same_dim(n_, o.n_, "xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  BinaryVector& operator&=(const BinaryVector& o) {
    detail::require_same_dim(n_, o.n_, "and");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }
  friend BinaryVector operator&(BinaryVector a, const BinaryVector& b) { return a &= b; }

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

  /// Lexicographic order with coordinate 1 most significant.
  friend bool operator<(const BinaryVector& a, const BinaryVector& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t k = 0; k < a.n_; ++k)
      if (a[k] != b[k]) return b[k];
    return false;
  }

  /// Appends the coordinates of `tail` after the last coordinate.
  BinaryVector concat(const BinaryVector& tail) const {
    BinaryVector out(n_ + tail.n_);
    out.words_.assign(out.words_.size(), 0);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (std::size_t k = 0; k < tail.n_; ++k)
      if (tail[k]) out.set(n_ + k, true);
    return out;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(n_ * 2);
    for (std::size_t k = 0; k < n_; ++k) {
      if (k) s.push_back(' ');
      s.push_back((*this)[k] ? '1' : '0');
    }
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t hamming_weight(const BinaryVector& v) noexcept { return v.weight(); }

inline std::size_t hamming_distance(const BinaryVector& x, const BinaryVector& y) {
  detail::require_same_dim(x.size(), y.size(), "hamming_distance");
  std::size_t d = 0;
  auto wx = x.words();
  auto wy = y.words();
  for (std::size_t w = 0; w < wx.size(); ++w) d += static_cast<std::size_t>(std::popcount(wx[w] ^ wy[w]));
  return d;
}

struct Z4Decomposition;

/// Vector over Z4, one symbol per byte, each in {0,1,2,3}.
class QuaternaryVector {
 public:
  QuaternaryVector() = default;
  explicit QuaternaryVector(std::size_t n) : symbols_(n, 0) {}

  QuaternaryVector(std::initializer_list<int> symbols) {
    symbols_.reserve(symbols.size());
    for (int s : symbols) symbols_.push_back(static_cast<std::uint8_t>(s & 3));
  }

  explicit QuaternaryVector(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    for (auto& s : symbols_) s &= 3;
  }

  /// The vector low + 2*high, where bit k of each mask is coordinate k+1.
  static QuaternaryVector from_masks(std::size_t n, std::uint64_t low, std::uint64_t high) {
    QuaternaryVector v(n);
    for (std::size_t k = 0; k < n; ++k)
      v.symbols_[k] = static_cast<std::uint8_t>(((low >> k) & 1U) | (((high >> k) & 1U) << 1));
    return v;
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  std::uint8_t operator[](std::size_t k) const noexcept { return symbols_[k]; }
  void set(std::size_t k, int value) noexcept { symbols_[k] = static_cast<std::uint8_t>(value & 3); }

  std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }
  std::span<std::uint8_t> mutable_symbols() noexcept { return symbols_; }

  bool is_zero() const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(), [](std::uint8_t s) { return s == 0; });
  }

  QuaternaryVector& operator+=(const QuaternaryVector& o) {
    detail::require_same_dim(size(), o.size(), "z4 add");
    for (std::size_t k = 0; k < symbols_.size(); ++k) symbols_[k] = (symbols_[k] + o.symbols_[k]) & 3;
    return *this;
  }

  QuaternaryVector& operator-=(const QuaternaryVector& o) {
    detail::require_same_dim(size(), o.size(), "z4 sub");
    for (std::size_t k = 0; k < symbols_.size(); ++k) symbols_[k] = (symbols_[k] + 4 - o.symbols_[k]) & 3;
    return *this;
  }

  QuaternaryVector& operator*=(int scalar) noexcept {
    const int c = scalar & 3;
    for (auto& s : symbols_) s = static_cast<std::uint8_t>((s * c) & 3);
    return *this;
  }

  friend QuaternaryVector operator+(QuaternaryVector a, const QuaternaryVector& b) { return a += b; }
  friend QuaternaryVector operator-(QuaternaryVector a, const QuaternaryVector& b) { return a -= b; }
  friend QuaternaryVector operator*(int c, QuaternaryVector v) { return v *= c; }

  friend bool operator==(const QuaternaryVector&, const QuaternaryVector&) = default;
  /// Lexicographic, coordinate 1 most significant (base-4 big-integer order).
  friend auto operator<=>(const QuaternaryVector& a, const QuaternaryVector& b) {
    return a.symbols_ <=> b.symbols_;
  }

  Z4Decomposition decompose() const;

  std::string to_string() const {
    std::string s;
    s.reserve(symbols_.size() * 2);
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (k) s.push_back(' ');
      s.push_back(static_cast<char>('0' + symbols_[k]));
    }
    return s;
  }

 private:
  std::vector<std::uint8_t> symbols_;
};

/// 2-adic split x = low + 2*high with binary components.
struct Z4Decomposition {
  BinaryVector low;
  BinaryVector high;

  QuaternaryVector recompose() const {
    detail::require_same_dim(low.size(), high.size(), "recompose");
    QuaternaryVector x(low.size());
    for (std::size_t k = 0; k < low.size(); ++k) x.set(k, (low[k] ? 1 : 0) + (high[k] ? 2 : 0));
    return x;
  }

  friend bool operator==(const Z4Decomposition&, const Z4Decomposition&) = default;
};

inline Z4Decomposition QuaternaryVector::decompose() const {
  Z4Decomposition d{BinaryVector(size()), BinaryVector(size())};
  for (std::size_t k = 0; k < size(); ++k) {
    d.low.set(k, symbols_[k] & 1U);
    d.high.set(k, (symbols_[k] >> 1) & 1U);
  }
  return d;
}

/// Euclidean inner product, reduced mod 4.
inline int inner_product(const QuaternaryVector& x, const QuaternaryVector& y) {
  detail::require_same_dim(x.size(), y.size(), "inner_product");
  unsigned acc = 0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += static_cast<unsigned>(x[k]) * y[k];
  return static_cast<int>(acc & 3U);
}

/// phi(a + 2b) = (b, a + b), first n coordinates then the second n.
inline BinaryVector gray_map(const QuaternaryVector& x) {
  const std::size_t n = x.size();
  BinaryVector out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned a = x[k] & 1U;
    const unsigned b = (x[k] >> 1) & 1U;
    out.set(k, b);
    out.set(n + k, a ^ b);
  }
  return out;
}

inline std::uint64_t lee_weight(std::span<const std::uint8_t> symbols) noexcept {
  std::uint64_t w = 0;
  for (auto s : symbols) w += detail::kSymbolLee[s & 3];
  return w;
}

inline std::uint64_t lee_weight(const QuaternaryVector& x) noexcept { return lee_weight(x.symbols()); }

inline std::uint64_t lee_distance(const QuaternaryVector& x, const QuaternaryVector& y) {
  return lee_weight(x - y);
}

/// Coordinatewise 0,1,2,3 -> 0,1,0,1.
inline BinaryVector alpha_map(const QuaternaryVector& x) {
  BinaryVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out.set(k, x[k] & 1U);
  return out;
}

inline BinaryVector componentwise_product(const BinaryVector& x, const BinaryVector& y) {
  detail::require_same_dim(x.size(), y.size(), "componentwise_product");
  return x & y;
}

/// Embeds a binary vector into Z4 with symbols 0 and 1, scaled by `scale`.
inline QuaternaryVector lift(const BinaryVector& v, int scale = 1) {
  QuaternaryVector x(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) x.set(k, scale);
  return x;
}

}  // namespace z4poset
