#pragma once

// The disjoint union of two chains {1..m} and {m+1..n}, its order ideals,
// the collection of sub-ideals of an ideal, and generating-function
// evaluation at integer points.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "z4poset/errors.hpp"
#include "z4poset/ring.hpp"

namespace z4poset {

/// Chain one is {1..m}, chain two is {m+1..n} (empty when m == n).
struct TwoChainPoset {
  int n = 0;
  int m = 0;

  int chain_two_length() const noexcept { return n - m; }

  friend bool operator==(const TwoChainPoset&, const TwoChainPoset&) = default;
};

enum class IdealKind { ChainOne, ChainTwo, Union };

inline const char* to_string(IdealKind k) {
  switch (k) {
    case IdealKind::ChainOne: return "chain-one";
    case IdealKind::ChainTwo: return "chain-two";
    case IdealKind::Union: return "union";
  }
  return "?";
}

/// A nonempty order ideal, given by one of its three possible shapes:
/// [i], [j]\[m] or [i] u ([j]\[m]). `i` is unused for ChainTwo and `j` for
/// ChainOne (both stay 0).
struct OrderIdealSpec {
  IdealKind kind = IdealKind::ChainOne;
  int i = 0;
  int j = 0;
  TwoChainPoset poset;

  static OrderIdealSpec chain_one(int n, int m, int i) { return {IdealKind::ChainOne, i, 0, {n, m}}; }
  static OrderIdealSpec chain_two(int n, int m, int j) { return {IdealKind::ChainTwo, 0, j, {n, m}}; }
  static OrderIdealSpec union_of(int n, int m, int i, int j) { return {IdealKind::Union, i, j, {n, m}}; }

  int n() const noexcept { return poset.n; }
  int m() const noexcept { return poset.m; }
  bool has_chain_one() const noexcept { return kind != IdealKind::ChainTwo; }
  bool has_chain_two() const noexcept { return kind != IdealKind::ChainOne; }
  /// Length of the chain-one part of the ideal.
  int one_len() const noexcept { return has_chain_one() ? i : 0; }
  /// Length of the chain-two part of the ideal, j - m.
  int two_len() const noexcept { return has_chain_two() ? j - poset.m : 0; }

  /// "chain-one(2)", "chain-two(5)", "union(1,5)".
  std::string describe() const {
    switch (kind) {
      case IdealKind::ChainOne: return "chain-one(" + std::to_string(i) + ")";
      case IdealKind::ChainTwo: return "chain-two(" + std::to_string(j) + ")";
      case IdealKind::Union: return "union(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "?";
  }

  friend bool operator==(const OrderIdealSpec&, const OrderIdealSpec&) = default;
};

inline void validate_poset(const TwoChainPoset& p) {
  if (p.n < 2 || p.n > kMaxClosedFormDim)
    throw ParameterError("n must lie in [2, " + std::to_string(kMaxClosedFormDim) + "], got " +
                         std::to_string(p.n));
  if (p.m < 1 || p.m > p.n)
    throw ParameterError("m must lie in [1, n], got m=" + std::to_string(p.m));
}

/// Checks the bounds of the ideal shape; throws ParameterError otherwise.
inline const OrderIdealSpec& validate_spec(const OrderIdealSpec& spec) {
  validate_poset(spec.poset);
  const int n = spec.n();
  const int m = spec.m();
  if (spec.has_chain_one() && (spec.i < 1 || spec.i > m))
    throw ParameterError("i must lie in [1, m=" + std::to_string(m) + "], got " + std::to_string(spec.i));
  if (spec.has_chain_two()) {
    if (m == n) throw ParameterError("m = n leaves the second chain empty; " + spec.describe() + " is invalid");
    if (spec.j <= m || spec.j > n)
      throw ParameterError("j must lie in [m+1=" + std::to_string(m + 1) + ", n=" + std::to_string(n) +
                           "], got " + std::to_string(spec.j));
  }
  if (spec.kind == IdealKind::ChainOne && spec.j != 0) throw ParameterError("chain-one ideal takes no j");
  if (spec.kind == IdealKind::ChainTwo && spec.i != 0) throw ParameterError("chain-two ideal takes no i");
  return spec;
}

namespace detail {

inline Mask low_bits(int count) noexcept {
  return count <= 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << count) - 1);
}

/// Sub-ideal with the first k elements of chain one and the first l of chain two.
inline Mask prefix_union_mask(int k, int l, int m) noexcept {
  return low_bits(k) | static_cast<Mask>(low_bits(l) << m);
}

inline bool mask_is_order_ideal(Mask s, const TwoChainPoset& p) noexcept {
  const Mask one = s & low_bits(p.m);
  const Mask two = (s >> p.m) & low_bits(p.n - p.m);
  // Downward closed in a chain means the chain part is a prefix.
  return (one & (one + 1)) == 0 && (two & (two + 1)) == 0;
}

}  // namespace detail

/// True iff the subset (as a 0/1 vector) is downward closed in both chains.
/// The empty set counts as an ideal here.
inline bool is_order_ideal(const BinaryVector& subset, const TwoChainPoset& poset) {
  detail::require_same_dim(subset.size(), static_cast<std::size_t>(poset.n), "is_order_ideal");
  return detail::mask_is_order_ideal(static_cast<Mask>(subset.mask()), poset);
}

/// Every order ideal contained in the spec'd ideal, the empty set and the
/// ideal itself included. Canonical order: by (chain-one prefix length,
/// chain-two prefix length) ascending.
struct DownSet {
  int n = 0;
  std::vector<Mask> masks;

  std::size_t size() const noexcept { return masks.size(); }

  std::vector<BinaryVector> members() const {
    std::vector<BinaryVector> out;
    out.reserve(masks.size());
    for (Mask s : masks) out.push_back(BinaryVector::from_mask(static_cast<std::size_t>(n), s));
    return out;
  }
};

inline DownSet down_set(const OrderIdealSpec& spec) {
  validate_spec(spec);
  DownSet ds{spec.n(), {}};
  ds.masks.reserve(static_cast<std::size_t>((spec.one_len() + 1) * (spec.two_len() + 1)));
  for (int k = 0; k <= spec.one_len(); ++k)
    for (int l = 0; l <= spec.two_len(); ++l) ds.masks.push_back(detail::prefix_union_mask(k, l, spec.m()));
  return ds;
}

/// The ideal itself as a subset of [n].
inline Mask ideal_mask(const OrderIdealSpec& spec) {
  return detail::prefix_union_mask(spec.one_len(), spec.two_len(), spec.m());
}

/// H_X(point) = sum over u in X of prod_k point_k^{u_k}, exactly.
inline std::int64_t generating_function_eval(std::span<const BinaryVector> members,
                                             std::span<const std::int64_t> point) {
  std::int64_t total = 0;
  for (const auto& u : members) {
    detail::require_same_dim(u.size(), point.size(), "generating_function_eval");
    std::int64_t term = 1;
    for (std::size_t k = 0; k < u.size(); ++k)
      if (u[k]) term *= point[k];
    total += term;
  }
  return total;
}

/// The point ((-1)^{beta_1}, ..., (-1)^{beta_n}).
inline std::vector<std::int64_t> sign_point(const BinaryVector& beta) {
  std::vector<std::int64_t> p(beta.size());
  for (std::size_t k = 0; k < beta.size(); ++k) p[k] = beta[k] ? -1 : 1;
  return p;
}

namespace detail {

/// Number of prefixes beta_{first}..beta_{first+len'-1}, len' = 1..len, of even weight.
inline int even_prefix_count(Mask beta, int first, int len) noexcept {
  int count = 0;
  unsigned parity = 0;
  for (int k = 0; k < len; ++k) {
    parity ^= (beta >> (first + k)) & 1U;
    if (parity == 0) ++count;
  }
  return count;
}

inline std::int64_t sign_eval_mask(const OrderIdealSpec& spec, Mask beta) noexcept {
  const int i = spec.one_len();
  const int len_two = spec.two_len();
  const std::int64_t s = even_prefix_count(beta, 0, i);
  const std::int64_t t = even_prefix_count(beta, spec.m(), len_two);
  switch (spec.kind) {
    case IdealKind::ChainOne: return 1 + 2 * s - i;
    case IdealKind::ChainTwo: return 1 + 2 * t - len_two;
    case IdealKind::Union: return 1 + 2 * s - i + 2 * t - len_two + (2 * s - i) * (2 * t - len_two);
  }
  return 0;
}

}  // namespace detail

/// Closed-form value of H_{I(P)} at the sign point of beta, computed from
/// the even-weight prefix counts of beta on each chain.
inline std::int64_t sign_eval_ideal(const OrderIdealSpec& spec, const BinaryVector& beta) {
  validate_spec(spec);
  detail::require_same_dim(beta.size(), static_cast<std::size_t>(spec.n()), "sign_eval_ideal");
  return detail::sign_eval_mask(spec, static_cast<Mask>(beta.mask()));
}

/// Every valid spec on a poset, in the order ChainOne(i), ChainTwo(j), Union(i, j).
inline std::vector<OrderIdealSpec> all_specs(const TwoChainPoset& p) {
  validate_poset(p);
  std::vector<OrderIdealSpec> out;
  for (int i = 1; i <= p.m; ++i) out.push_back(OrderIdealSpec::chain_one(p.n, p.m, i));
  for (int j = p.m + 1; j <= p.n; ++j) out.push_back(OrderIdealSpec::chain_two(p.n, p.m, j));
  for (int i = 1; i <= p.m; ++i)
    for (int j = p.m + 1; j <= p.n; ++j) out.push_back(OrderIdealSpec::union_of(p.n, p.m, i, j));
  return out;
}

}  // namespace z4poset
