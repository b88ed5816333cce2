// updown: exact minimum up/down-closure sizes over m-set families of [n],
// with table/chain/diagram exports and an invariant verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "updown/checks.hpp"
#include "updown/errors.hpp"
#include "updown/io.hpp"
#include "updown/oracle.hpp"
#include "updown/phi.hpp"
#include "updown/witness.hpp"

namespace {

// Hard per-command ceilings; UPDOWN_MAX_N can only lower them.
constexpr int kPhiCap = 24;
constexpr int kTableCap = 20;
constexpr int kChainCap = 12;
constexpr int kFerrersCap = 8;
constexpr int kOracleCap = 5;
constexpr int kVerifyCap = 16;

int env_limited(int hard_cap) {
  const char* raw = std::getenv("UPDOWN_MAX_N");
  if (raw == nullptr) return hard_cap;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 0) return hard_cap;
  return v < hard_cap ? static_cast<int>(v) : hard_cap;
}

void check_n(int n, int hard_cap, const char* command) {
  const int cap = env_limited(hard_cap);
  if (n > cap) {
    throw updown::TooLargeError(std::string(command) + " supports n <= " +
                                std::to_string(cap));
  }
}

// Runs fn against the --out target, or stdout when none was given.
template <typename Fn>
void with_output(const std::optional<std::string>& path, Fn&& fn) {
  if (!path) {
    fn(std::cout);
    return;
  }
  std::ofstream out(*path);
  if (!out) throw updown::Error("cannot open " + *path + " for writing");
  fn(out);
  out.flush();
  if (!out) throw updown::Error("short write to " + *path);
}

int cmd_phi(int n, std::uint64_t m, const std::string& method) {
  check_n(n, method == "oracle" ? kOracleCap : kPhiCap, "phi");
  if (method == "fast") {
    std::cout << updown::phi_fast(n, m) << '\n';
  } else if (method == "recursive") {
    std::cout << updown::phi_recursive(n, m) << '\n';
  } else if (method == "oracle") {
    std::cout << updown::oracle::brute_min_updown(n, m).value << '\n';
  } else {  // both
    const auto fast = updown::phi_fast(n, m);
    const auto rec = updown::phi_recursive(n, m);
    if (fast != rec) {
      std::cerr << "methods disagree: fast=" << fast << " recursive=" << rec
                << '\n';
      return 1;
    }
    std::cout << fast << '\n';
  }
  return 0;
}

int cmd_table(int n, const std::string& format,
              const std::optional<std::string>& out) {
  check_n(n, kTableCap, "table");
  const updown::PhiTable table = updown::phi_table(n);
  with_output(out, [&](std::ostream& os) {
    if (format == "json") {
      os << updown::phi_table_json(table) << '\n';
    } else {
      updown::write_phi_table_tsv(os, table);
    }
  });
  return 0;
}

int cmd_chain(int n, const std::optional<std::string>& out, bool verify) {
  check_n(n, kChainCap, "chain");
  const updown::Chain chain = updown::canonical_chain(n);
  if (verify) {
    const updown::VerificationReport report = updown::verify_chain(chain);
    if (!report.pass) {
      std::cerr << report.summary() << '\n';
      return 1;
    }
  }
  with_output(out, [&](std::ostream& os) { updown::write_chain(os, chain); });
  return 0;
}

int cmd_ferrers(int n, const std::optional<std::string>& svg,
                const std::optional<std::string>& tsv) {
  check_n(n, kFerrersCap, "ferrers");
  const updown::PhiTable table = updown::phi_table(n);
  if (svg) {
    with_output(svg, [&](std::ostream& os) {
      updown::write_ferrers_svg(os, table);
    });
  } else {
    with_output(tsv, [&](std::ostream& os) {
      updown::write_ferrers_tsv(os, table);
    });
  }
  return 0;
}

int cmd_verify(int max_n, int oracle_max) {
  updown::checks::Options opt;
  opt.max_n = std::min(max_n, env_limited(kVerifyCap));
  opt.oracle_max = std::min(oracle_max, std::min(opt.max_n, kOracleCap));
  opt.bound_max = std::min(12, opt.max_n);
  opt.chain_max = std::min(10, opt.max_n);
  int failures = 0;
  for (const auto& result : updown::checks::run_all(opt)) {
    if (result.pass) {
      std::cout << "PASS " << result.name << '\n';
    } else {
      std::cout << "FAIL " << result.name << ": " << result.detail << '\n';
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return 1;
}

int cmd_cross_sperner(int n, const std::optional<std::uint64_t>& m) {
  check_n(n, kPhiCap, "cross-sperner");
  if (n < 2) throw updown::OutOfRangeError("cross-sperner requires n >= 2");
  if (m) {
    std::cout << updown::cross_sperner_g(n, *m) << '\n';
    return 0;
  }
  const std::uint64_t universe = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  for (std::uint64_t size = 1; size <= universe; ++size) {
    if (updown::phi_fast(n, size) >= universe) break;  // no partner left
    best = std::max(best, size + updown::cross_sperner_g(n, size));
  }
  const std::uint64_t bound = universe - (std::uint64_t{1} << ((n + 1) / 2)) -
                              (std::uint64_t{1} << (n / 2)) + 2;
  std::cout << best << ' ' << bound << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimum up/down-closure sizes over m-element families of subsets "
      "of [n], with exports and self-checks"};
  app.require_subcommand(1);

  int n = 0;
  std::uint64_t m = 0;
  std::string method = "fast";
  std::string format = "tsv";
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> tsv_path;
  bool verify_chain_flag = false;
  int verify_max_n = 16;
  int verify_oracle_max = 4;
  std::optional<std::uint64_t> cross_m;

  auto* phi = app.add_subcommand("phi", "Print the minimum closure size");
  phi->add_option("n", n, "ground set size")->required();
  phi->add_option("m", m, "family size")->required();
  phi->add_option("--method", method, "fast|recursive|both|oracle")
      ->check(CLI::IsMember({"fast", "recursive", "both", "oracle"}));

  auto* table = app.add_subcommand("table", "Emit the value table for one n");
  table->add_option("n", n, "ground set size")->required();
  table->add_option("--format", format, "tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));
  table->add_option("--out", out_path, "output file (default stdout)");

  auto* chain = app.add_subcommand("chain", "Emit the nested witness chain");
  chain->add_option("n", n, "ground set size")->required();
  chain->add_option("--out", out_path, "output file (default stdout)");
  chain->add_flag("--verify", verify_chain_flag,
                  "re-check every chain property first");

  auto* ferrers =
      app.add_subcommand("ferrers", "Emit the dot diagram of the value table");
  ferrers->add_option("n", n, "ground set size")->required();
  auto* svg_opt = ferrers->add_option("--svg", svg_path, "write an SVG file");
  ferrers->add_option("--tsv", tsv_path, "write dot coordinates as TSV")
      ->excludes(svg_opt);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--max-n", verify_max_n, "formula sweep ceiling")
      ->check(CLI::Range(0, kVerifyCap));
  verify->add_option("--oracle-max", verify_oracle_max,
                     "brute-force sweep ceiling")
      ->check(CLI::Range(0, kOracleCap));

  auto* cross = app.add_subcommand(
      "cross-sperner", "Largest partner family across an incomparable pair");
  cross->add_option("n", n, "ground set size")->required();
  cross->add_option("m", cross_m, "one side's family size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  try {
    if (phi->parsed()) return cmd_phi(n, m, method);
    if (table->parsed()) return cmd_table(n, format, out_path);
    if (chain->parsed()) return cmd_chain(n, out_path, verify_chain_flag);
    if (ferrers->parsed()) return cmd_ferrers(n, svg_path, tsv_path);
    if (verify->parsed()) return cmd_verify(verify_max_n, verify_oracle_max);
    if (cross->parsed()) return cmd_cross_sperner(n, cross_m);
  } catch (const updown::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
