#pragma once

// Pinned reference cases for codes built from two-chain posets, recomputed
// and compared one by one.

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "z4poset/analysis.hpp"
#include "z4poset/construction.hpp"
#include "z4poset/poset.hpp"
#include "z4poset/report.hpp"

namespace z4poset {

struct ReproCase {
  std::string name;
  /// Returns an empty string on success, otherwise a description of the diff.
  std::function<std::string(unsigned jobs)> check;
};

namespace detail {

inline std::string weight_map_brace(const WeightMap& m) {
  std::string s = "{";
  for (auto [w, c] : m) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(w) + ":" + std::to_string(c);
  }
  return s + "}";
}

template <class T>
std::string expect_eq(const std::string& what, const T& got, const T& want) {
  if (got == want) return {};
  std::ostringstream os;
  os << what << ": expected " << want << ", got " << got;
  return os.str();
}

inline std::string expect_map(const std::string& what, const WeightMap& got, const WeightMap& want) {
  if (got == want) return {};
  return what + ": expected " + weight_map_brace(want) + ", got " + weight_map_brace(got);
}

inline std::set<Mask> support_masks(std::initializer_list<std::initializer_list<int>> vectors) {
  std::set<Mask> out;
  for (auto v : vectors) {
    Mask mask = 0;
    int k = 0;
    for (int b : v) mask |= static_cast<Mask>(b != 0) << k++;
    out.insert(mask);
  }
  return out;
}

inline std::string check_d(const OrderIdealSpec& spec, std::initializer_list<std::initializer_list<int>> want) {
  const auto d = build_d_masks(spec);
  if (std::set<Mask>(d.begin(), d.end()) == support_masks(want) && d.size() == want.size()) return {};
  return "D mismatch for " + spec.describe();
}

struct QuaternaryCase {
  OrderIdealSpec spec;
  WeightMap distinct;
  QuaternaryParams params;
};

inline std::string check_quaternary(const QuaternaryCase& c, unsigned jobs) {
  const auto sets = make_defining_sets(c.spec);
  const auto closed = closed_form_distribution(c.spec);
  const auto brute = brute_force_distribution(sets, jobs);
  const auto ks = kernel_and_size(sets);
  std::string err = expect_map("closed-form distinct", closed.distinct, c.distinct);
  if (err.empty()) err = expect_map("brute-force distinct", brute.distinct, c.distinct);
  if (err.empty()) err = expect_eq("length", sets.length(), c.params.length);
  if (err.empty()) err = expect_eq("size", ks.code_size, c.params.size);
  if (err.empty()) err = expect_eq("min Lee distance", min_lee_weight(brute), c.params.min_distance);
  return err;
}

struct BinaryCase {
  OrderIdealSpec spec;
  bool linear;
  std::uint64_t length;
  std::uint64_t size;
  std::uint64_t distance;
};

inline std::string check_binary(const BinaryCase& c) {
  const auto g = gray_linearity(make_defining_sets(c.spec));
  std::string err = expect_eq("linear", g.is_linear, c.linear);
  if (err.empty()) err = expect_eq("binary length", g.binary_length, c.length);
  if (err.empty()) err = expect_eq("binary size", g.binary_size, c.size);
  if (err.empty()) err = expect_eq("binary distance", g.min_distance, c.distance);
  return err;
}

inline std::string check_down_set(const OrderIdealSpec& spec, std::initializer_list<std::initializer_list<int>> want,
                                  std::int64_t h_at_ones) {
  const auto ds = down_set(spec);
  std::set<Mask> got(ds.masks.begin(), ds.masks.end());
  if (got != support_masks(want) || ds.size() != want.size()) return "I(P) mismatch for " + spec.describe();
  const auto members = ds.members();
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(spec.n()), 1);
  return expect_eq("H at all-ones", generating_function_eval(members, ones), h_at_ones);
}

}  // namespace detail

// Ideal specs used by the reference cases.
namespace cases {
inline OrderIdealSpec n2_one2() { return OrderIdealSpec::chain_one(2, 2, 2); }
inline OrderIdealSpec n3_one1() { return OrderIdealSpec::chain_one(3, 3, 1); }
inline OrderIdealSpec n3_one3() { return OrderIdealSpec::chain_one(3, 3, 3); }
inline OrderIdealSpec n3_union12() { return OrderIdealSpec::union_of(3, 1, 1, 2); }
inline OrderIdealSpec n2_one1() { return OrderIdealSpec::chain_one(2, 2, 1); }
inline OrderIdealSpec n3_one2() { return OrderIdealSpec::chain_one(3, 3, 2); }
}  // namespace cases

inline std::vector<ReproCase> reproduction_cases() {
  using detail::QuaternaryCase;
  using detail::BinaryCase;
  std::vector<ReproCase> out;

  out.push_back({"down-set of [4] in 4+6", [](unsigned) {
                   return detail::check_down_set(OrderIdealSpec::chain_one(6, 4, 4),
                                                 {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0},
                                                  {1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 0, 0}},
                                                 5);
                 }});
  out.push_back({"down-set of {5,6} in 4+6", [](unsigned) {
                   return detail::check_down_set(OrderIdealSpec::chain_two(6, 4, 6),
                                                 {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 1}}, 3);
                 }});
  out.push_back({"down-set of {1,2,5} in 4+6", [](unsigned) {
                   return detail::check_down_set(OrderIdealSpec::union_of(6, 4, 2, 5),
                                                 {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0}, {1, 1, 0, 0, 1, 0}},
                                                 6);
                 }});

  out.push_back({"n=2 [2]: (4, 8, 4)_L, 1+6z^4+z^8", [](unsigned jobs) {
                   std::string err = detail::check_d(cases::n2_one2(), {{0, 1}});
                   if (err.empty())
                     err = detail::check_quaternary({cases::n2_one2(), {{0, 1}, {4, 6}, {8, 1}}, {4, 8, 4}}, jobs);
                   return err;
                 }});
  out.push_back({"n=3 [1]: (48, 64, 48)_L, 1+60z^48+3z^64", [](unsigned jobs) {
                   std::string err = detail::check_d(
                       cases::n3_one1(), {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
                   if (err.empty())
                     err = detail::check_quaternary({cases::n3_one1(), {{0, 1}, {48, 60}, {64, 3}}, {48, 64, 48}}, jobs);
                   return err;
                 }});
  out.push_back({"n=3 [3]: (32, 64, 16)_L, 1+z^16+59z^32+3z^48", [](unsigned jobs) {
                   std::string err = detail::check_d(cases::n3_one3(), {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}});
                   if (err.empty())
                     err = detail::check_quaternary(
                         {cases::n3_one3(), {{0, 1}, {16, 1}, {32, 59}, {48, 3}}, {32, 64, 16}}, jobs);
                   return err;
                 }});
  out.push_back({"n=3 m=1 [1]u{2}: (32, 64, 32)_L, 1+62z^32+z^64", [](unsigned jobs) {
                   std::string err = detail::check_d(cases::n3_union12(), {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
                   if (err.empty())
                     err = detail::check_quaternary({cases::n3_union12(), {{0, 1}, {32, 62}, {64, 1}}, {32, 64, 32}}, jobs);
                   return err;
                 }});

  out.push_back({"n=2 [2]: Gray image linear [8,3,4]", [](unsigned) {
                   return detail::check_binary({cases::n2_one2(), true, 8, 8, 4});
                 }});
  out.push_back({"n=2 [1]: Gray image linear [16,4,8]", [](unsigned) {
                   std::string err = detail::check_d(cases::n2_one1(), {{0, 1}, {1, 1}});
                   if (err.empty()) err = detail::check_binary({cases::n2_one1(), true, 16, 16, 8});
                   if (!err.empty()) return err;
                   // 2 alpha(c_(1,0)) * alpha(c_(0,1)) = c_(2,0)
                   const auto sets = make_defining_sets(cases::n2_one1());
                   const auto rows = generator_rows(sets);
                   const auto target = lift(componentwise_product(alpha_map(rows[0]), alpha_map(rows[1])), 2);
                   return detail::expect_eq("product == c_(2,0)", target == codeword({2, 0}, sets), true);
                 }});
  out.push_back({"n=3 [2]: Gray image nonlinear (80, 64, 32), from (40, 64, 32)_L", [](unsigned jobs) {
                   std::string err = detail::check_d(cases::n3_one2(),
                                                     {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
                   if (err.empty())
                     err = detail::check_quaternary(
                         {cases::n3_one2(), {{0, 1}, {32, 2}, {40, 56}, {48, 4}, {64, 1}}, {40, 64, 32}}, jobs);
                   if (err.empty()) err = detail::check_binary({cases::n3_one2(), false, 80, 64, 32});
                   return err;
                 }});
  out.push_back({"n=3 [1]: Gray image nonlinear (96, 64, 48)", [](unsigned) {
                   return detail::check_binary({cases::n3_one1(), false, 96, 64, 48});
                 }});
  out.push_back({"n=3 [3]: Gray image nonlinear (64, 64, 16)", [](unsigned) {
                   return detail::check_binary({cases::n3_one3(), false, 64, 64, 16});
                 }});
  out.push_back({"n=3 m=1 [1]u{2}: Gray image nonlinear (64, 64, 32)", [](unsigned) {
                   return detail::check_binary({cases::n3_union12(), false, 64, 64, 32});
                 }});

  out.push_back({"closed-form tables == brute force, n=2..4", [](unsigned jobs) -> std::string {
                   for (int n = 2; n <= 4; ++n)
                     for (int m = 1; m <= n; ++m)
                       for (const auto& spec : all_specs({n, m})) {
                         if (!has_nonempty_d(spec)) continue;
                         const auto brute = brute_force_distribution(make_defining_sets(spec), jobs);
                         if (brute != closed_form_distribution(spec))
                           return "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                                  spec.describe();
                       }
                   return {};
                 }});
  out.push_back({"degenerate size: n=i=2 has kernel 2, size 8", [](unsigned) {
                   const auto ks = kernel_and_size(make_defining_sets(cases::n2_one2()));
                   std::string err = detail::expect_eq("kernel", ks.kernel_size, std::uint64_t{2});
                   if (err.empty()) err = detail::expect_eq("size", ks.code_size, std::uint64_t{8});
                   return err;
                 }});

  out.push_back({"quaternary parameter table", [](unsigned) -> std::string {
                   const std::vector<std::pair<OrderIdealSpec, QuaternaryParams>> rows = {
                       {cases::n2_one2(), {4, 8, 4}},
                       {cases::n3_one3(), {32, 64, 16}},
                       {cases::n3_union12(), {32, 64, 32}},
                       {cases::n3_one1(), {48, 64, 48}}};
                   for (const auto& [spec, want] : rows) {
                     const auto rep = analyze(spec);
                     if (!(rep.quaternary == want))
                       return spec.describe() + ": expected " + quaternary_params_string(want) + ", got " +
                              quaternary_params_string(rep.quaternary);
                   }
                   return {};
                 }});
  out.push_back({"binary parameter and linearity table", [](unsigned) -> std::string {
                   const std::vector<std::pair<OrderIdealSpec, std::string>> rows = {
                       {cases::n2_one2(), "[8,3,4]"},          {cases::n2_one1(), "[16,4,8]"},
                       {cases::n3_one3(), "(64, 64, 16)"},     {cases::n3_union12(), "(64, 64, 32)"},
                       {cases::n3_one2(), "(80, 64, 32)"},     {cases::n3_one1(), "(96, 64, 48)"}};
                   for (const auto& [spec, want] : rows) {
                     const auto got = binary_params_string(gray_linearity(make_defining_sets(spec)));
                     if (got != want) return spec.describe() + ": expected " + want + ", got " + got;
                   }
                   return {};
                 }});
  return out;
}

/// Runs every case, one line per case. Returns the number of failures.
inline int run_reproduce(std::ostream& os, unsigned jobs = 1) {
  int failures = 0;
  const auto all = reproduction_cases();
  for (const auto& c : all) {
    std::string err;
    try {
      err = c.check(jobs);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    if (err.empty()) {
      os << "PASS  " << c.name << '\n';
    } else {
      ++failures;
      os << "FAIL  " << c.name << "\n      " << err << '\n';
    }
  }
  os << (failures == 0 ? "all " + std::to_string(all.size()) + " cases passed"
                       : std::to_string(failures) + " of " + std::to_string(all.size()) + " cases failed")
     << '\n';
  return failures;
}

}  // namespace z4poset
