#pragma once

// The defining sets D = F_2^n \ I(P) and L = D + 2 F_2^n, and the code
// C_L = { (<a, l>)_{l in L} : a in Z_4^n }.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "z4poset/errors.hpp"
#include "z4poset/poset.hpp"
#include "z4poset/ring.hpp"

namespace z4poset {

namespace detail {

inline void require_materializable(int n, const char* what) {
  if (n > kMaxMaterializeDim)
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the materialization cap " +
                        std::to_string(kMaxMaterializeDim));
}

/// <alpha + 2 beta, t1 + 2 t2> mod 4 for binary masks.
inline unsigned inner_product_masks(Mask alpha, Mask beta, Mask t1, Mask t2) noexcept {
  return (static_cast<unsigned>(std::popcount(alpha & t1)) +
          2U * static_cast<unsigned>(std::popcount(alpha & t2) + std::popcount(beta & t1))) &
         3U;
}

inline std::uint64_t pow2(int e) noexcept { return std::uint64_t{1} << e; }

}  // namespace detail

/// D and L for one ideal. D is stored as masks ascending by integer value.
/// L is implicit: position p holds t1 + 2 t2 with t1 = d[p >> n] and
/// t2 = p & (2^n - 1), i.e. primary key t1 in D order, secondary key t2.
struct DefiningSets {
  OrderIdealSpec spec;
  int n = 0;
  std::vector<Mask> d;

  std::uint64_t length() const noexcept { return static_cast<std::uint64_t>(d.size()) << n; }

  Mask t1_at(std::uint64_t pos) const noexcept { return d[pos >> n]; }
  Mask t2_at(std::uint64_t pos) const noexcept { return static_cast<Mask>(pos & (detail::pow2(n) - 1)); }

  QuaternaryVector l_at(std::uint64_t pos) const {
    return QuaternaryVector::from_masks(static_cast<std::size_t>(n), t1_at(pos), t2_at(pos));
  }

  std::vector<BinaryVector> d_vectors() const {
    std::vector<BinaryVector> out;
    out.reserve(d.size());
    for (Mask t : d) out.push_back(BinaryVector::from_mask(static_cast<std::size_t>(n), t));
    return out;
  }
};

/// Complement of the down-set in F_2^n, ascending by mask value.
inline std::vector<Mask> build_d_masks(const OrderIdealSpec& spec) {
  const DownSet ds = down_set(spec);
  const int n = spec.n();
  detail::require_materializable(n, "build_D");
  std::vector<bool> in_ideal(detail::pow2(n), false);
  for (Mask s : ds.masks) in_ideal[s] = true;
  std::vector<Mask> d;
  d.reserve(detail::pow2(n) - ds.size());
  for (Mask t = 0; t < detail::pow2(n); ++t)
    if (!in_ideal[t]) d.push_back(t);
  if (d.empty()) throw ConstructionError("D is empty for " + spec.describe() + ": the down-set is all of F_2^n");
  return d;
}

inline std::vector<BinaryVector> build_D(const OrderIdealSpec& spec) {
  return DefiningSets{spec, spec.n(), build_d_masks(spec)}.d_vectors();
}

/// All t1 + 2 t2 with t1 in D (given order) and t2 in F_2^n ascending.
inline std::vector<QuaternaryVector> build_L(std::span<const BinaryVector> D, int n) {
  if (D.empty()) throw ConstructionError("build_L: D is empty");
  detail::require_materializable(n, "build_L");
  std::vector<QuaternaryVector> out;
  out.reserve(D.size() << n);
  for (const auto& t1 : D) {
    detail::require_same_dim(t1.size(), static_cast<std::size_t>(n), "build_L");
    for (std::uint64_t t2 = 0; t2 < detail::pow2(n); ++t2)
      out.push_back(QuaternaryVector::from_masks(static_cast<std::size_t>(n), t1.mask(), t2));
  }
  return out;
}

inline DefiningSets make_defining_sets(const OrderIdealSpec& spec) { return {spec, spec.n(), build_d_masks(spec)}; }

/// |L| = 2^n (2^n - |I(P)|), valid up to the closed-form cap.
inline std::uint64_t code_length(const OrderIdealSpec& spec) {
  validate_spec(spec);
  const std::uint64_t down = static_cast<std::uint64_t>(spec.one_len() + 1) * (spec.two_len() + 1);
  const std::uint64_t space = detail::pow2(spec.n());
  if (down >= space) throw ConstructionError("D is empty for " + spec.describe());
  return space * (space - down);
}

/// False when the down-set is all of F_2^n (then C_L is undefined).
inline bool has_nonempty_d(const OrderIdealSpec& spec) {
  validate_spec(spec);
  return static_cast<std::uint64_t>(spec.one_len() + 1) * (spec.two_len() + 1) < detail::pow2(spec.n());
}

inline QuaternaryVector codeword_masks(Mask alpha, Mask beta, const DefiningSets& sets) {
  const std::uint64_t len = sets.length();
  QuaternaryVector c(len);
  auto out = c.mutable_symbols();
  const std::uint64_t block = detail::pow2(sets.n);
  std::uint64_t pos = 0;
  for (Mask t1 : sets.d) {
    const unsigned base = static_cast<unsigned>(std::popcount(alpha & t1)) +
                          2U * static_cast<unsigned>(std::popcount(beta & t1));
    for (std::uint64_t t2 = 0; t2 < block; ++t2, ++pos)
      out[pos] = static_cast<std::uint8_t>(
          (base + 2U * static_cast<unsigned>(std::popcount(alpha & static_cast<Mask>(t2)))) & 3U);
  }
  return c;
}

/// c_a = (<a, l>)_{l in L} in canonical L order.
inline QuaternaryVector codeword(const QuaternaryVector& a, const DefiningSets& sets) {
  detail::require_same_dim(a.size(), static_cast<std::size_t>(sets.n), "codeword");
  detail::require_materializable(sets.n, "codeword");
  const auto parts = a.decompose();
  return codeword_masks(static_cast<Mask>(parts.low.mask()), static_cast<Mask>(parts.high.mask()), sets);
}

/// Row k is c_{e_k}; every codeword is sum_k a_k * row_k.
inline std::vector<QuaternaryVector> generator_rows(const DefiningSets& sets) {
  detail::require_materializable(sets.n, "generator_rows");
  std::vector<QuaternaryVector> rows;
  rows.reserve(static_cast<std::size_t>(sets.n));
  for (int k = 0; k < sets.n; ++k) rows.push_back(codeword_masks(Mask{1} << k, 0, sets));
  return rows;
}

struct KernelAndSize {
  std::uint64_t kernel_size = 0;
  std::uint64_t code_size = 0;
};

/// Counts a with c_a = 0 by direct enumeration of Z_4^n.
inline KernelAndSize kernel_and_size(const DefiningSets& sets) {
  detail::require_materializable(sets.n, "kernel_and_size");
  const std::uint64_t space = detail::pow2(sets.n);
  const std::uint64_t len = sets.length();
  std::uint64_t kernel = 0;
  for (std::uint64_t alpha = 0; alpha < space; ++alpha) {
    for (std::uint64_t beta = 0; beta < space; ++beta) {
      bool zero = true;
      for (std::uint64_t pos = 0; pos < len && zero; ++pos)
        zero = detail::inner_product_masks(static_cast<Mask>(alpha), static_cast<Mask>(beta), sets.t1_at(pos),
                                           sets.t2_at(pos)) == 0;
      if (zero) ++kernel;
    }
  }
  return {kernel, (space * space) / kernel};
}

struct CodeDescriptor {
  OrderIdealSpec spec;
  DefiningSets sets;
  std::uint64_t length = 0;
  std::uint64_t kernel_size = 0;
  std::uint64_t size = 0;
};

inline CodeDescriptor describe_code(const OrderIdealSpec& spec) {
  CodeDescriptor c{spec, make_defining_sets(spec), 0, 0, 0};
  c.length = c.sets.length();
  const auto ks = kernel_and_size(c.sets);
  c.kernel_size = ks.kernel_size;
  c.size = ks.code_size;
  return c;
}

}  // namespace z4poset
