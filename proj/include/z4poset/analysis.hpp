#pragma once

// Lee weight distributions of C_L by three routes (direct evaluation, the
// character-sum shortcut, the closed-form tables), Z4 standard form and
// membership solving, and the binary linearity test for the Gray image.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "z4poset/construction.hpp"
#include "z4poset/errors.hpp"
#include "z4poset/parallel.hpp"
#include "z4poset/poset.hpp"
#include "z4poset/ring.hpp"

namespace z4poset {

/// Largest n for direct evaluation of every codeword.
inline constexpr int kMaxBruteForceDim = 10;

using WeightMap = std::map<std::uint64_t, std::uint64_t>;

/// Lee weight -> count. `multiplicity` counts messages a in Z_4^n, so it sums
/// to 4^n; `distinct` counts codewords, i.e. multiplicity / kernel_size.
struct LeeWeightDistribution {
  WeightMap multiplicity;
  WeightMap distinct;
  std::uint64_t kernel_size = 0;

  /// Derives `distinct` and `kernel_size` from a multiplicity map.
  static LeeWeightDistribution from_multiplicity(WeightMap mult) {
    LeeWeightDistribution d;
    const auto zero = mult.find(0);
    if (zero == mult.end() || zero->second == 0)
      throw std::logic_error("weight distribution without the zero codeword");
    d.kernel_size = zero->second;
    for (auto [w, c] : mult) {
      if (c % d.kernel_size != 0)
        throw std::logic_error("multiplicity " + std::to_string(c) + " at weight " + std::to_string(w) +
                               " not divisible by kernel size " + std::to_string(d.kernel_size));
      d.distinct[w] = c / d.kernel_size;
    }
    d.multiplicity = std::move(mult);
    return d;
  }

  std::uint64_t total() const noexcept {
    std::uint64_t s = 0;
    for (auto [w, c] : multiplicity) s += c;
    return s;
  }

  std::uint64_t code_size() const noexcept {
    std::uint64_t s = 0;
    for (auto [w, c] : distinct) s += c;
    return s;
  }

  /// Number of distinct nonzero weights (the code is t-weight).
  std::size_t nonzero_weight_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(distinct.begin(), distinct.end(),
                                                  [](const auto& e) { return e.first != 0; }));
  }

  friend bool operator==(const LeeWeightDistribution&, const LeeWeightDistribution&) = default;
};

/// Smallest nonzero Lee weight present.
inline std::uint64_t min_lee_weight(const LeeWeightDistribution& dist) {
  for (auto [w, c] : dist.distinct)
    if (w != 0 && c != 0) return w;
  throw DegenerateCodeError("distribution is concentrated at weight 0");
}

/// Evaluates lee_weight(c_a) for every a in Z_4^n. The a-space is split
/// into `jobs` contiguous ranges with private counters merged by summation.
inline LeeWeightDistribution brute_force_distribution(const DefiningSets& sets, unsigned jobs = 1) {
  if (sets.n > kMaxBruteForceDim)
    throw CapacityError("brute_force_distribution: n=" + std::to_string(sets.n) + " exceeds cap " +
                        std::to_string(kMaxBruteForceDim));
  const int n = sets.n;
  const std::uint64_t space = detail::pow2(n);
  std::vector<WeightMap> partial(std::max(1U, jobs));

  detail::parallel_ranges(space * space, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    WeightMap& local = partial[worker];
    std::vector<std::uint8_t> t2_parity(space);
    std::uint64_t parity_for = ~std::uint64_t{0};
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Mask alpha = static_cast<Mask>(idx >> n);
      const Mask beta = static_cast<Mask>(idx & (space - 1));
      if (parity_for != alpha) {
        for (std::uint64_t t2 = 0; t2 < space; ++t2)
          t2_parity[t2] = static_cast<std::uint8_t>(2U * (std::popcount(alpha & static_cast<Mask>(t2)) & 1U));
        parity_for = alpha;
      }
      std::uint64_t weight = 0;
      for (Mask t1 : sets.d) {
        const unsigned base = static_cast<unsigned>(std::popcount(alpha & t1)) +
                              2U * static_cast<unsigned>(std::popcount(beta & t1));
        for (std::uint64_t t2 = 0; t2 < space; ++t2) weight += detail::kSymbolLee[(base + t2_parity[t2]) & 3U];
      }
      ++local[weight];
    }
  });

  WeightMap merged;
  for (const auto& m : partial)
    for (auto [w, c] : m) merged[w] += c;
  return LeeWeightDistribution::from_multiplicity(std::move(merged));
}

namespace detail {

inline std::uint64_t fast_lee_weight_masks(const OrderIdealSpec& spec, std::uint64_t length, Mask alpha,
                                           Mask beta) noexcept {
  if (alpha != 0) return length;
  if (beta == 0) return 0;
  const std::int64_t h = sign_eval_mask(spec, beta);
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(length) +
                                    static_cast<std::int64_t>(pow2(spec.n())) * h);
}

}  // namespace detail

/// Lee weight of c_a without building it: |L| when the low part of a is
/// nonzero, otherwise |L| + 2^n H_{I(P)} at the sign point of the high part.
inline std::uint64_t fast_lee_weight(const QuaternaryVector& a, const OrderIdealSpec& spec) {
  validate_spec(spec);
  detail::require_same_dim(a.size(), static_cast<std::size_t>(spec.n()), "fast_lee_weight");
  const auto parts = a.decompose();
  return detail::fast_lee_weight_masks(spec, code_length(spec), static_cast<Mask>(parts.low.mask()),
                                       static_cast<Mask>(parts.high.mask()));
}

/// fast_lee_weight summed over every message (n up to the materialization cap).
inline LeeWeightDistribution fast_path_distribution(const OrderIdealSpec& spec) {
  validate_spec(spec);
  detail::require_materializable(spec.n(), "fast_path_distribution");
  const std::uint64_t len = code_length(spec);
  const std::uint64_t space = detail::pow2(spec.n());
  WeightMap mult;
  for (std::uint64_t alpha = 0; alpha < space; ++alpha)
    for (std::uint64_t beta = 0; beta < space; ++beta)
      ++mult[detail::fast_lee_weight_masks(spec, len, static_cast<Mask>(alpha), static_cast<Mask>(beta))];
  return LeeWeightDistribution::from_multiplicity(std::move(mult));
}

namespace detail {

inline std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
  return r;
}

}  // namespace detail

/// Weight distribution assembled from the closed-form tables. Rows sharing a
/// weight are aggregated, rows of frequency 0 are dropped.
inline LeeWeightDistribution closed_form_distribution(const OrderIdealSpec& spec) {
  validate_spec(spec);
  const int n = spec.n();
  const int i = spec.one_len();
  const int len_two = spec.two_len();
  const std::uint64_t space = detail::pow2(n);
  const std::uint64_t len = code_length(spec);

  WeightMap mult;
  auto add = [&](std::int64_t weight, std::uint64_t freq) {
    if (freq == 0) return;
    if (weight < 0) throw std::logic_error("closed form produced negative weight");
    mult[static_cast<std::uint64_t>(weight)] += freq;
  };
  const std::int64_t scale = static_cast<std::int64_t>(detail::pow2(n + 1));
  const std::int64_t half = static_cast<std::int64_t>(detail::pow2(n - 1));

  add(0, 1);
  add(static_cast<std::int64_t>(len), space * (space - 1));

  switch (spec.kind) {
    case IdealKind::ChainOne:
      for (int s = 0; s < i; ++s) add(scale * (half + s - i), detail::pow2(n - i) * detail::binomial(i, s));
      add(static_cast<std::int64_t>(space * space), detail::pow2(n - i) - 1);
      break;
    case IdealKind::ChainTwo:
      for (int t = 0; t < len_two; ++t)
        add(scale * (half + t - len_two), detail::pow2(n - len_two) * detail::binomial(len_two, t));
      add(static_cast<std::int64_t>(space * space), detail::pow2(n - len_two) - 1);
      break;
    case IdealKind::Union: {
      const std::uint64_t free_part = detail::pow2(n - i - len_two);
      for (int s = 0; s <= i; ++s)
        for (int t = 0; t <= len_two; ++t) {
          if (s == i && t == len_two) continue;
          const std::int64_t inner =
              half + s + t + 2LL * s * t - static_cast<std::int64_t>(s + 1) * len_two - static_cast<std::int64_t>(t + 1) * i;
          add(scale * inner, free_part * detail::binomial(i, s) * detail::binomial(len_two, t));
        }
      add(static_cast<std::int64_t>(space * space), free_part - 1);
      break;
    }
  }
  return LeeWeightDistribution::from_multiplicity(std::move(mult));
}

/// Generator matrix over Z4 brought to standard shape: k1 rows with a unit
/// pivot (value 1) followed by k2 rows with a pivot of value 2. Every pivot
/// column is zero in all other rows except that 2-pivot columns may keep odd
/// entries in unit rows. `coefficients[r]` expresses reduced row r as a
/// combination of the input rows.
struct StandardFormReport {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::vector<QuaternaryVector> rows;
  std::vector<QuaternaryVector> coefficients;
  std::vector<std::size_t> pivots;

  std::size_t log2_size() const noexcept { return 2 * k1 + k2; }
};

namespace detail {

/// dst -= factor * src, also on the coefficient vectors.
inline void axpy_sub(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, unsigned factor) noexcept {
  if (factor == 0) return;
  const unsigned neg = (4U - factor) & 3U;
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = static_cast<std::uint8_t>((dst[k] + neg * src[k]) & 3U);
}

}  // namespace detail

inline StandardFormReport standard_form(std::span<const QuaternaryVector> input) {
  const std::size_t count = input.size();
  const std::size_t width = count ? input[0].size() : 0;
  std::vector<QuaternaryVector> rows(input.begin(), input.end());
  std::vector<QuaternaryVector> coef;
  for (std::size_t r = 0; r < count; ++r) {
    detail::require_same_dim(rows[r].size(), width, "standard_form");
    QuaternaryVector e(count);
    e.set(r, 1);
    coef.push_back(std::move(e));
  }

  enum class Role { Free, Unit, Two };
  std::vector<Role> role(count, Role::Free);
  StandardFormReport out;
  std::vector<std::size_t> unit_order, two_order;
  std::vector<std::size_t> pivot_of(count, 0);

  auto eliminate = [&](std::size_t pivot_row, std::size_t col, bool two_phase) {
    for (std::size_t k = 0; k < count; ++k) {
      if (k == pivot_row) continue;
      const unsigned v = rows[k][col];
      if (v == 0) continue;
      unsigned factor = v;
      if (two_phase) {
        if (v & 1U) continue;  // odd entries of unit rows cannot be cleared by a 2-pivot
        factor = 1;
      }
      detail::axpy_sub(rows[k].mutable_symbols(), rows[pivot_row].symbols(), factor);
      detail::axpy_sub(coef[k].mutable_symbols(), coef[pivot_row].symbols(), factor);
    }
  };

  // Unit pivots: first free row (in row order) holding an odd entry, at its lowest such column.
  for (bool found = true; found;) {
    found = false;
    for (std::size_t r = 0; r < count && !found; ++r) {
      if (role[r] != Role::Free) continue;
      const auto sym = rows[r].symbols();
      const auto it = std::find_if(sym.begin(), sym.end(), [](std::uint8_t s) { return (s & 1U) != 0; });
      if (it == sym.end()) continue;
      const auto col = static_cast<std::size_t>(it - sym.begin());
      if (*it == 3) {
        rows[r] *= 3;
        coef[r] *= 3;
      }
      eliminate(r, col, false);
      role[r] = Role::Unit;
      pivot_of[r] = col;
      unit_order.push_back(r);
      found = true;
    }
  }
  // Remaining free rows are even; pivot on their lowest 2.
  for (bool found = true; found;) {
    found = false;
    for (std::size_t r = 0; r < count && !found; ++r) {
      if (role[r] != Role::Free) continue;
      const auto sym = rows[r].symbols();
      const auto it = std::find(sym.begin(), sym.end(), std::uint8_t{2});
      if (it == sym.end()) continue;
      const auto col = static_cast<std::size_t>(it - sym.begin());
      eliminate(r, col, true);
      role[r] = Role::Two;
      pivot_of[r] = col;
      two_order.push_back(r);
      found = true;
    }
  }

  out.k1 = unit_order.size();
  out.k2 = two_order.size();
  for (auto* order : {&unit_order, &two_order})
    for (std::size_t r : *order) {
      out.rows.push_back(std::move(rows[r]));
      out.coefficients.push_back(std::move(coef[r]));
      out.pivots.push_back(pivot_of[r]);
    }
  return out;
}

/// Membership verdict; `message` holds coefficients a with sum_k a_k row_k = v.
struct MembershipResult {
  bool member = false;
  std::optional<QuaternaryVector> message;
};

namespace detail {

/// Coefficients forced by the pivot columns, or nullopt when a 2-pivot
/// residue is odd. The caller still has to check the full combination.
inline std::optional<QuaternaryVector> solve_at_pivots(const QuaternaryVector& v, const StandardFormReport& sf,
                                                       std::size_t message_dim) {
  QuaternaryVector message(message_dim);
  for (std::size_t u = 0; u < sf.k1; ++u) {
    const unsigned a = v[sf.pivots[u]];
    if (a == 0) continue;
    QuaternaryVector term = sf.coefficients[u];
    term *= static_cast<int>(a);
    message += term;
  }
  for (std::size_t t = sf.k1; t < sf.k1 + sf.k2; ++t) {
    const std::size_t col = sf.pivots[t];
    unsigned residue = v[col];
    for (std::size_t u = 0; u < sf.k1; ++u) residue += (4U - (v[sf.pivots[u]] * sf.rows[u][col]) % 4U);
    residue &= 3U;
    if (residue & 1U) return std::nullopt;
    if (residue == 2) message += sf.coefficients[t];
  }
  return message;
}

inline QuaternaryVector combine(std::span<const QuaternaryVector> rows, const QuaternaryVector& coeffs,
                                std::size_t width) {
  QuaternaryVector acc(width);
  for (std::size_t k = 0; k < rows.size(); ++k)
    detail::axpy_sub(acc.mutable_symbols(), rows[k].symbols(), (4U - coeffs[k]) & 3U);
  return acc;
}

}  // namespace detail

inline MembershipResult membership(const QuaternaryVector& v, std::span<const QuaternaryVector> rows,
                                   const StandardFormReport& sf) {
  if (!rows.empty()) detail::require_same_dim(v.size(), rows[0].size(), "membership");
  if (v.is_zero()) return {true, QuaternaryVector(rows.size())};
  if (rows.empty()) return {false, std::nullopt};
  auto message = detail::solve_at_pivots(v, sf, rows.size());
  if (!message || detail::combine(rows, *message, v.size()) != v) return {false, std::nullopt};
  return {true, std::move(message)};
}

/// True iff v is a Z4 combination of `rows`.
inline MembershipResult membership(const QuaternaryVector& v, std::span<const QuaternaryVector> rows) {
  return membership(v, rows, standard_form(rows));
}

/// Parameters of the binary image phi(C_L) and its linearity verdict.
struct GrayImageReport {
  std::uint64_t binary_length = 0;
  std::uint64_t binary_size = 0;
  std::uint64_t min_distance = 0;
  bool is_linear = false;
  /// First failing generator pair (i, j), 1-based, i <= j.
  std::optional<std::pair<int, int>> witness;

  friend bool operator==(const GrayImageReport&, const GrayImageReport&) = default;
};

/// Tests 2 alpha(row_i) * alpha(row_j) in C_L for every generator pair i <= j,
/// with row_k = c_{e_k}.
inline GrayImageReport gray_linearity(const DefiningSets& sets) {
  const auto rows = generator_rows(sets);
  const auto sf = standard_form(rows);
  GrayImageReport rep;
  rep.binary_length = 2 * sets.length();
  rep.binary_size = std::uint64_t{1} << sf.log2_size();
  rep.min_distance = min_lee_weight(closed_form_distribution(sets.spec));
  rep.is_linear = true;

  std::vector<BinaryVector> alphas;
  for (const auto& r : rows) alphas.push_back(alpha_map(r));
  for (int i = 0; i < sets.n && rep.is_linear; ++i)
    for (int j = i; j < sets.n; ++j) {
      const QuaternaryVector target = lift(componentwise_product(alphas[i], alphas[j]), 2);
      bool member = target.is_zero();
      if (!member) {
        const auto message = detail::solve_at_pivots(target, sf, rows.size());
        member = message && codeword(*message, sets) == target;
      }
      if (!member) {
        rep.is_linear = false;
        rep.witness = std::pair{i + 1, j + 1};
        break;
      }
    }
  return rep;
}

/// Every distinct codeword of C_L, sorted ascending.
inline std::vector<QuaternaryVector> distinct_codewords(const DefiningSets& sets) {
  detail::require_materializable(sets.n, "distinct_codewords");
  const std::uint64_t space = detail::pow2(sets.n);
  std::vector<QuaternaryVector> words;
  words.reserve(space * space);
  for (std::uint64_t alpha = 0; alpha < space; ++alpha)
    for (std::uint64_t beta = 0; beta < space; ++beta)
      words.push_back(codeword_masks(static_cast<Mask>(alpha), static_cast<Mask>(beta), sets));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

/// Exhaustive check that phi(C_L) is closed under binary addition.
inline bool gray_image_closed(const DefiningSets& sets) {
  std::vector<BinaryVector> image;
  for (const auto& c : distinct_codewords(sets)) image.push_back(gray_map(c));
  std::sort(image.begin(), image.end());
  for (std::size_t x = 0; x < image.size(); ++x)
    for (std::size_t y = x + 1; y < image.size(); ++y)
      if (!std::binary_search(image.begin(), image.end(), image[x] ^ image[y])) return false;
  return true;
}

}  // namespace z4poset
