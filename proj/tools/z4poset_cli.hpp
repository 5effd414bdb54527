#pragma once

// Command-line front end: analyze, export, reproduce.
//
// Exit codes: 0 success, 2 usage or validation error, 3 verification or
// reproduction failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "z4poset/z4poset.hpp"

namespace z4poset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerify = 3;

/// Output budget for codeword listings, in symbols.
inline constexpr std::uint64_t kMaxListingSymbols = std::uint64_t{1} << 28;

struct IdealFlags {
  int n = 0;
  int m = 0;
  std::optional<int> chain_one;
  std::optional<int> chain_two;
  std::optional<std::string> union_ij;

  void attach(CLI::App& cmd) {
    cmd.add_option("--n", n, "ground-set size of the poset")->required();
    cmd.add_option("--m", m, "length of the first chain")->required();
    auto* one = cmd.add_option("--chain-one", chain_one, "ideal [i]");
    auto* two = cmd.add_option("--chain-two", chain_two, "ideal [j]\\[m]");
    auto* uni = cmd.add_option("--union", union_ij, "ideal [i] u ([j]\\[m]), given as I,J");
    one->excludes(two)->excludes(uni);
    two->excludes(uni);
  }

  OrderIdealSpec spec() const {
    const int given = (chain_one ? 1 : 0) + (chain_two ? 1 : 0) + (union_ij ? 1 : 0);
    if (given != 1) throw ParameterError("exactly one of --chain-one, --chain-two, --union is required");
    OrderIdealSpec s;
    if (chain_one) s = OrderIdealSpec::chain_one(n, m, *chain_one);
    if (chain_two) s = OrderIdealSpec::chain_two(n, m, *chain_two);
    if (union_ij) {
      const auto comma = union_ij->find(',');
      if (comma == std::string::npos) throw ParameterError("--union expects I,J");
      try {
        std::size_t used_i = 0, used_j = 0;
        const std::string a = union_ij->substr(0, comma), b = union_ij->substr(comma + 1);
        const int i = std::stoi(a, &used_i);
        const int j = std::stoi(b, &used_j);
        if (used_i != a.size() || used_j != b.size()) throw std::invalid_argument("trailing");
        s = OrderIdealSpec::union_of(n, m, i, j);
      } catch (const std::logic_error&) {
        throw ParameterError("--union expects two integers I,J, got '" + *union_ij + "'");
      }
    }
    validate_spec(s);
    return s;
  }
};

/// Writes to --out when given, else to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParameterError("cannot open '" + path + "' for writing");
      out_ = file_.get();
    }
  }
  std::ostream& get() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw ParameterError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

inline std::string listing_header(const OrderIdealSpec& spec, std::uint64_t length) {
  return "# n=" + std::to_string(spec.n()) + " m=" + std::to_string(spec.m()) + " ideal=" + spec.describe() +
         " length=" + std::to_string(length);
}

inline void write_export(std::ostream& os, const OrderIdealSpec& spec, const std::string& what) {
  const auto sets = make_defining_sets(spec);
  os << listing_header(spec, sets.length()) << '\n';
  if (what == "defining-D") {
    for (const auto& d : sets.d_vectors()) os << d.to_string() << '\n';
  } else if (what == "defining-L") {
    for (const auto& l : build_L(sets.d_vectors(), sets.n)) os << l.to_string() << '\n';
  } else if (what == "generators") {
    for (const auto& r : generator_rows(sets)) os << r.to_string() << '\n';
  } else if (what == "codewords" || what == "gray") {
    const std::uint64_t size = closed_form_distribution(spec).code_size();
    if (size * sets.length() > kMaxListingSymbols)
      throw CapacityError("listing of " + std::to_string(size) + " codewords of length " +
                          std::to_string(sets.length()) + " exceeds the output budget");
    const auto words = distinct_codewords(sets);
    if (what == "codewords") {
      for (const auto& c : words) os << c.to_string() << '\n';
    } else {
      std::vector<BinaryVector> image;
      image.reserve(words.size());
      for (const auto& c : words) image.push_back(gray_map(c));
      std::sort(image.begin(), image.end());
      for (const auto& b : image) os << b.to_string() << '\n';
    }
  } else {
    throw ParameterError("unknown --what '" + what + "'");
  }
}

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternary codes from order ideals of two-chain posets"};
  app.require_subcommand(1);

  IdealFlags analyze_flags;
  bool gray = false, verify = false;
  std::string format = "text", analyze_out;
  unsigned analyze_jobs = 1;
  auto* analyze_cmd = app.add_subcommand("analyze", "weight distribution, parameters and Gray image of one code");
  analyze_flags.attach(*analyze_cmd);
  analyze_cmd->add_flag("--gray", gray, "analyze the Gray image and its linearity");
  analyze_cmd->add_flag("--verify", verify, "force the direct-evaluation cross-check (n <= 10)");
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--out", analyze_out, "write the report to PATH");
  analyze_cmd->add_option("--jobs", analyze_jobs, "worker threads for enumeration")->check(CLI::Range(1U, 256U));

  IdealFlags export_flags;
  std::string what, export_out;
  auto* export_cmd = app.add_subcommand("export", "write D, L, codewords, Gray image or generator rows");
  export_flags.attach(*export_cmd);
  export_cmd->add_option("--what", what, "defining-D | defining-L | codewords | gray | generators")
      ->required()
      ->check(CLI::IsMember({"defining-D", "defining-L", "codewords", "gray", "generators"}));
  export_cmd->add_option("--out", export_out, "write to PATH");

  unsigned reproduce_jobs = 1;
  std::string reproduce_out;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute every pinned reference case");
  reproduce_cmd->add_option("--jobs", reproduce_jobs, "worker threads for enumeration")->check(CLI::Range(1U, 256U));
  reproduce_cmd->add_option("--out", reproduce_out, "write the verdicts to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      const auto spec = analyze_flags.spec();
      const auto rep = analyze(spec, {gray, verify, analyze_jobs});
      Sink sink(analyze_out, out);
      if (format == "json")
        sink.get() << to_json(rep).dump(2) << '\n';
      else
        write_text(sink.get(), rep);
      sink.finish();
      if (!rep.methods.agree) {
        err << "verification failed: distribution methods disagree\n";
        return kExitVerify;
      }
      return kExitOk;
    }
    if (*export_cmd) {
      const auto spec = export_flags.spec();
      Sink sink(export_out, out);
      write_export(sink.get(), spec, what);
      sink.finish();
      return kExitOk;
    }
    if (*reproduce_cmd) {
      Sink sink(reproduce_out, out);
      const int failures = run_reproduce(sink.get(), reproduce_jobs);
      sink.finish();
      return failures == 0 ? kExitOk : kExitVerify;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace z4poset::cli
