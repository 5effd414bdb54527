#include <gtest/gtest.h>

#include <random>
#include <set>

#include "golden_listings.hpp"
#include "z4poset/analysis.hpp"

using namespace z4poset;

namespace {

std::vector<OrderIdealSpec> sweep(int max_n, int min_n = 2) {
  std::vector<OrderIdealSpec> out;
  for (int n = min_n; n <= max_n; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& s : all_specs({n, m}))
        if (has_nonempty_d(s)) out.push_back(s);
  return out;
}

QuaternaryVector message(int n, std::uint64_t code) {
  QuaternaryVector a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) a.set(static_cast<std::size_t>(k), static_cast<int>((code >> (2 * k)) & 3));
  return a;
}

/// Lee weight multiplicities straight from codeword(): the slowest oracle.
WeightMap direct_multiplicity(const DefiningSets& sets) {
  WeightMap out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * sets.n)); ++code)
    ++out[lee_weight(codeword(message(sets.n, code), sets))];
  return out;
}

/// Constant 2 on the block of L whose t1 equals `t1`, zero elsewhere.
QuaternaryVector block_target(const DefiningSets& sets, Mask t1) {
  QuaternaryVector v(sets.length());
  for (std::uint64_t p = 0; p < sets.length(); ++p)
    if (sets.t1_at(p) == t1) v.set(p, 2);
  return v;
}

}  // namespace

TEST(Distribution, WorkedExamples) {
  const auto d41 = brute_force_distribution(make_defining_sets(OrderIdealSpec::chain_one(2, 2, 2)));
  EXPECT_EQ(d41.multiplicity, (WeightMap{{0, 2}, {4, 12}, {8, 2}}));
  EXPECT_EQ(d41.distinct, (WeightMap{{0, 1}, {4, 6}, {8, 1}}));
  EXPECT_EQ(d41.kernel_size, 2U);
  EXPECT_EQ(brute_force_distribution(make_defining_sets(OrderIdealSpec::chain_one(3, 3, 1))).distinct,
            (WeightMap{{0, 1}, {48, 60}, {64, 3}}));
  EXPECT_EQ(brute_force_distribution(make_defining_sets(OrderIdealSpec::chain_one(3, 3, 3))).distinct,
            (WeightMap{{0, 1}, {16, 1}, {32, 59}, {48, 3}}));
}

TEST(Distribution, ClosedFormExamples) {
  EXPECT_EQ(closed_form_distribution(OrderIdealSpec::chain_one(2, 2, 2)).multiplicity,
            (WeightMap{{0, 2}, {4, 12}, {8, 2}}));
  EXPECT_EQ(closed_form_distribution(OrderIdealSpec::union_of(3, 1, 1, 2)).multiplicity,
            (WeightMap{{0, 1}, {32, 62}, {64, 1}}));
  EXPECT_EQ(closed_form_distribution(OrderIdealSpec::chain_one(3, 2, 2)).multiplicity,
            (WeightMap{{0, 1}, {32, 2}, {40, 56}, {48, 4}, {64, 1}}));
}

TEST(Distribution, ClosedFormDropsZeroRows) {
  for (const auto& spec : sweep(12))
    for (auto [w, c] : closed_form_distribution(spec).multiplicity) ASSERT_NE(c, 0U) << spec.describe();
}

TEST(Distribution, BruteForceMatchesDirectEvaluation) {
  for (const auto& spec : sweep(4)) {
    const auto sets = make_defining_sets(spec);
    ASSERT_EQ(brute_force_distribution(sets).multiplicity, direct_multiplicity(sets)) << spec.describe();
  }
}

TEST(Distribution, ClosedFormMatchesBruteForce) {
  for (const auto& spec : sweep(4))
    ASSERT_EQ(closed_form_distribution(spec), brute_force_distribution(make_defining_sets(spec)))
        << "n=" << spec.n() << " m=" << spec.m() << " " << spec.describe();
}

TEST(Distribution, DegenerateUnionCasesHaveKernelTwo) {
  // A coordinate that vanishes on every t1 in D puts 2 e_k in the kernel.
  for (const auto& spec : {OrderIdealSpec::union_of(3, 1, 1, 3), OrderIdealSpec::union_of(3, 2, 2, 3)}) {
    const auto sets = make_defining_sets(spec);
    const auto dist = closed_form_distribution(spec);
    EXPECT_EQ(dist.kernel_size, 2U) << spec.describe();
    EXPECT_EQ(kernel_and_size(sets).kernel_size, 2U) << spec.describe();
    EXPECT_EQ(dist, brute_force_distribution(sets)) << spec.describe();
  }
}

TEST(Distribution, FrequenciesSumToMessageCount) {
  for (int n : {2, 7, 15, 23, 30})
    for (int m = 1; m <= n; m += (n > 8 ? 5 : 1))
      for (const auto& spec : all_specs({n, m})) {
        if (!has_nonempty_d(spec)) continue;
        const auto d = closed_form_distribution(spec);
        ASSERT_EQ(d.total(), std::uint64_t{1} << (2 * n)) << n << " " << spec.describe();
        ASSERT_EQ(d.code_size() * d.kernel_size, d.total());
      }
}

TEST(Distribution, MaximalDimensionClosedForm) {
  const auto spec = OrderIdealSpec::chain_one(30, 30, 30);
  const auto d = closed_form_distribution(spec);
  EXPECT_EQ(d.total(), std::uint64_t{1} << 60);
  EXPECT_EQ(d.kernel_size, 1U);
}

TEST(Distribution, DeterministicAcrossJobCounts) {
  for (const auto& spec : {OrderIdealSpec::chain_one(6, 4, 3), OrderIdealSpec::union_of(7, 3, 2, 6)}) {
    const auto sets = make_defining_sets(spec);
    const auto one = brute_force_distribution(sets, 1);
    for (unsigned jobs : {2U, 3U, 8U}) ASSERT_EQ(brute_force_distribution(sets, jobs), one);
  }
}

TEST(Distribution, BruteForceCapacity) {
  EXPECT_THROW(brute_force_distribution(make_defining_sets(OrderIdealSpec::chain_one(11, 11, 2))), CapacityError);
}

TEST(FastPath, SpecialValues) {
  const auto spec = OrderIdealSpec::chain_one(4, 3, 2);
  const auto len = code_length(spec);
  EXPECT_EQ(fast_lee_weight({0, 0, 0, 0}, spec), 0U);
  EXPECT_EQ(fast_lee_weight({1, 0, 0, 0}, spec), len);
  EXPECT_EQ(fast_lee_weight({3, 2, 1, 0}, spec), len);
}

TEST(FastPath, MatchesDirectLeeWeight) {
  for (const auto& spec : sweep(5)) {
    const auto sets = make_defining_sets(spec);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * sets.n)); ++code) {
      const auto a = message(sets.n, code);
      ASSERT_EQ(fast_lee_weight(a, spec), lee_weight(codeword(a, sets))) << spec.describe() << " " << a.to_string();
    }
  }
}

TEST(FastPath, DistributionMatchesClosedForm) {
  for (const auto& spec : sweep(8)) ASSERT_EQ(fast_path_distribution(spec), closed_form_distribution(spec));
}

TEST(MinLeeWeight, Examples) {
  EXPECT_EQ(min_lee_weight(closed_form_distribution(OrderIdealSpec::chain_one(2, 2, 2))), 4U);
  EXPECT_EQ(min_lee_weight(closed_form_distribution(OrderIdealSpec::chain_one(3, 3, 3))), 16U);
  EXPECT_EQ(min_lee_weight(closed_form_distribution(OrderIdealSpec::union_of(3, 1, 1, 2))), 32U);
}

TEST(MinLeeWeight, DegenerateThrows) {
  EXPECT_THROW(min_lee_weight(LeeWeightDistribution::from_multiplicity({{0, 4}})), DegenerateCodeError);
}

TEST(StandardForm, Examples) {
  const auto s41 = standard_form(generator_rows(make_defining_sets(OrderIdealSpec::chain_one(2, 2, 2))));
  EXPECT_EQ(s41.k1, 1U);
  EXPECT_EQ(s41.k2, 1U);
  const auto s42 = standard_form(generator_rows(make_defining_sets(OrderIdealSpec::chain_one(3, 3, 1))));
  EXPECT_EQ(s42.k1, 3U);
  EXPECT_EQ(s42.k2, 0U);
  const std::vector<QuaternaryVector> zeros(3, QuaternaryVector(5));
  const auto s0 = standard_form(zeros);
  EXPECT_EQ(s0.k1, 0U);
  EXPECT_EQ(s0.k2, 0U);
}

TEST(StandardForm, SizeMatchesEnumeration) {
  for (const auto& spec : sweep(6)) {
    const auto sets = make_defining_sets(spec);
    const auto sf = standard_form(generator_rows(sets));
    ASSERT_EQ(std::uint64_t{1} << sf.log2_size(), kernel_and_size(sets).code_size) << spec.describe();
  }
}

TEST(StandardForm, SizeOfRandomRowSets) {
  // Span size by closure under addition, against 4^k1 2^k2.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t width = 1 + rng() % 5, count = 1 + rng() % 3;
    std::vector<QuaternaryVector> rows;
    for (std::size_t r = 0; r < count; ++r) {
      QuaternaryVector v(width);
      for (std::size_t k = 0; k < width; ++k) v.set(k, static_cast<int>(rng() % 4) & ((rng() & 1) ? 3 : 2));
      rows.push_back(v);
    }
    std::set<QuaternaryVector> span;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * count)); ++code) {
      QuaternaryVector acc(width);
      for (std::size_t r = 0; r < count; ++r) acc += static_cast<int>((code >> (2 * r)) & 3) * rows[r];
      span.insert(acc);
    }
    ASSERT_EQ(std::uint64_t{1} << standard_form(rows).log2_size(), span.size());
  }
}

TEST(Membership, ZeroVector) {
  const auto rows = generator_rows(make_defining_sets(OrderIdealSpec::chain_one(3, 3, 2)));
  const auto r = membership(QuaternaryVector(rows[0].size()), rows);
  EXPECT_TRUE(r.member);
  ASSERT_TRUE(r.message.has_value());
  EXPECT_TRUE(r.message->is_zero());
}

TEST(Membership, ProductIsCodeword) {
  const auto sets = make_defining_sets(OrderIdealSpec::chain_one(2, 2, 1));
  const auto rows = generator_rows(sets);
  const auto map = golden::column_map(sets, golden::kL_n2_chain_one_1);
  EXPECT_EQ(golden::reorder(lift(alpha_map(rows[0]), 1), map),
            (QuaternaryVector{0, 0, 1, 1, 0, 0, 1, 1}));
  const auto target = lift(componentwise_product(alpha_map(rows[0]), alpha_map(rows[1])), 2);
  EXPECT_EQ(golden::reorder(target, map), (QuaternaryVector{0, 0, 2, 2, 0, 0, 2, 2}));
  const auto r = membership(target, rows);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(codeword(*r.message, sets), target);
  EXPECT_EQ(target, codeword({2, 0}, sets));
}

TEST(Membership, BlockTargetRejected) {
  const auto sets = make_defining_sets(OrderIdealSpec::chain_one(3, 3, 3));
  const auto target = block_target(sets, static_cast<Mask>(BinaryVector{0, 1, 1}.mask()));
  EXPECT_FALSE(membership(target, generator_rows(sets)).member);
}

TEST(Membership, FourthBlockTargetRejected) {
  const auto sets = make_defining_sets(OrderIdealSpec::union_of(3, 1, 1, 2));
  const auto target = block_target(sets, static_cast<Mask>(BinaryVector{1, 1, 1}.mask()));
  EXPECT_FALSE(membership(target, generator_rows(sets)).member);
}

TEST(Membership, WeightSixteenProductRejected) {
  const auto sets = make_defining_sets(OrderIdealSpec::chain_one(3, 3, 2));
  const auto rows = generator_rows(sets);
  const auto target = lift(componentwise_product(alpha_map(rows[0]), alpha_map(rows[1])), 2);
  EXPECT_EQ(lee_weight(target), 16U);
  EXPECT_FALSE(membership(target, rows).member);
  EXPECT_EQ(closed_form_distribution(sets.spec).distinct.count(16), 0U);
}

TEST(Membership, DimensionMismatchThrows) {
  const auto rows = generator_rows(make_defining_sets(OrderIdealSpec::chain_one(2, 2, 2)));
  EXPECT_THROW(membership(QuaternaryVector(5), rows), DimensionError);
}

TEST(Membership, AgreesWithEnumeration) {
  std::mt19937_64 rng(29);
  for (const auto& spec : sweep(4)) {
    const auto sets = make_defining_sets(spec);
    const auto rows = generator_rows(sets);
    const auto sf = standard_form(rows);
    const auto words = distinct_codewords(sets);
    for (int trial = 0; trial < 12; ++trial) {
      QuaternaryVector v(sets.length());
      if (trial % 3 == 0) {
        v = words[rng() % words.size()];
      } else {
        // Sparse or all-even perturbations of codewords hit both verdicts.
        v = words[rng() % words.size()];
        const std::uint64_t p = rng() % v.size();
        v.set(p, static_cast<int>((v[p] + ((trial % 3 == 1) ? 2 : 1)) & 3));
      }
      const bool want = std::binary_search(words.begin(), words.end(), v);
      const auto got = membership(v, rows, sf);
      ASSERT_EQ(got.member, want) << spec.describe();
      if (got.member) {
        ASSERT_EQ(codeword(*got.message, sets), v);
      }
    }
  }
}

TEST(Gray, WorkedVerdicts) {
  struct Case {
    OrderIdealSpec spec;
    bool linear;
    std::uint64_t length, size, distance;
  };
  const std::vector<Case> cases = {
      {OrderIdealSpec::chain_one(2, 2, 2), true, 8, 8, 4},
      {OrderIdealSpec::chain_one(2, 2, 1), true, 16, 16, 8},
      {OrderIdealSpec::chain_one(3, 3, 2), false, 80, 64, 32},
      {OrderIdealSpec::chain_one(3, 3, 1), false, 96, 64, 48},
      {OrderIdealSpec::chain_one(3, 3, 3), false, 64, 64, 16},
      {OrderIdealSpec::union_of(3, 1, 1, 2), false, 64, 64, 32},
  };
  for (const auto& c : cases) {
    const auto g = gray_linearity(make_defining_sets(c.spec));
    EXPECT_EQ(g.is_linear, c.linear) << c.spec.describe();
    EXPECT_EQ(g.binary_length, c.length) << c.spec.describe();
    EXPECT_EQ(g.binary_size, c.size) << c.spec.describe();
    EXPECT_EQ(g.min_distance, c.distance) << c.spec.describe();
    EXPECT_EQ(g.witness.has_value(), !c.linear);
  }
}

TEST(Gray, WitnessIsFirstFailingPair) {
  for (const auto& spec : sweep(4)) {
    const auto sets = make_defining_sets(spec);
    const auto g = gray_linearity(sets);
    if (!g.witness) continue;
    const auto rows = generator_rows(sets);
    const auto sf = standard_form(rows);
    const auto [wi, wj] = *g.witness;
    ASSERT_LE(wi, wj);
    bool found = false;
    for (int i = 1; i <= sets.n && !found; ++i)
      for (int j = i; j <= sets.n && !found; ++j) {
        const auto t = lift(componentwise_product(alpha_map(rows[i - 1]), alpha_map(rows[j - 1])), 2);
        if (!membership(t, rows, sf).member) {
          ASSERT_EQ(std::pair(i, j), std::pair(wi, wj));
          found = true;
        }
      }
    ASSERT_TRUE(found);
  }
}

TEST(Gray, VerdictMatchesClosureCheck) {
  for (const auto& spec : sweep(4)) {
    const auto sets = make_defining_sets(spec);
    ASSERT_EQ(gray_linearity(sets).is_linear, gray_image_closed(sets)) << spec.describe();
  }
}

TEST(Gray, MinDistanceIsMinPairwiseHamming) {
  for (const auto& spec : {OrderIdealSpec::chain_one(2, 2, 2), OrderIdealSpec::chain_one(3, 3, 3)}) {
    const auto sets = make_defining_sets(spec);
    std::vector<BinaryVector> image;
    for (const auto& c : distinct_codewords(sets)) image.push_back(gray_map(c));
    std::size_t best = ~std::size_t{0};
    for (std::size_t x = 0; x < image.size(); ++x)
      for (std::size_t y = x + 1; y < image.size(); ++y) best = std::min(best, hamming_distance(image[x], image[y]));
    EXPECT_EQ(gray_linearity(sets).min_distance, best);
  }
}
