// Acceptance gate: every release-blocking property, one PASS/FAIL line
// each. Exits nonzero if any gate fails. The sweeps are sized so the whole
// run stays within a few minutes on one core.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "updown/checks.hpp"
#include "updown/io.hpp"
#include "updown/phi.hpp"

using namespace updown;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// empty string = pass; anything else is the failure detail
std::string table_goldens() {
  for (int n = 2; n <= 6; ++n) {
    const PhiTable table = phi_table(n);
    std::ostringstream rendered;
    write_phi_table_tsv(rendered, table);
    const std::string name = "table_" + std::to_string(n) + ".tsv";
    const std::string want = slurp(std::string(UPDOWN_GOLDEN_DIR) + "/" + name);
    if (want.empty()) return "missing or empty golden file " + name;
    if (rendered.str() != want) return name + " does not match the rendered table";
    for (std::uint64_t m = 0; m < table.values.size(); ++m) {
      if (phi_recursive(n, m) != table.values[m]) {
        return "evaluators disagree at n=" + std::to_string(n) +
               ", m=" + std::to_string(m);
      }
    }
  }
  return {};
}

std::string pinned_square_values() {
  if (phi_fast(4, 4) != 12) return "phi(4,4) is not 12";
  if (phi_fast(6, 9) != 39) return "phi(6,9) is not 39";
  if (!lower_bound_f(4, 4).is_exact || !lower_bound_f(6, 9).is_exact) {
    return "perfect-square cases are not flagged exact";
  }
  return {};
}

std::string from(const checks::CheckResult& r) {
  return r.pass ? std::string{} : r.detail;
}

}  // namespace

int main() {
  checks::Options opt;
  opt.max_n = 16;
  opt.oracle_max = 5;
  opt.chain_max = 10;
  opt.bound_max = 12;
  opt.shift_cases = 10000;

  struct Gate {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Gate> gates = {
      {"table-goldens", table_goldens},
      {"oracle-certification", [&] { return from(checks::oracle_agreement(opt)); }},
      {"method-equivalence", [&] { return from(checks::phi_method_agreement(opt)); }},
      {"square-root-bounds",
       [&] {
         const std::string spot = pinned_square_values();
         if (!spot.empty()) return spot;
         return from(checks::lower_bound_window(opt));
       }},
      {"explicit-upper-bound", [&] { return from(checks::upper_bound_window(opt)); }},
      {"self-conjugacy", [&] { return from(checks::self_conjugacy(opt)); }},
      {"delta-profile", [&] { return from(checks::delta_identities(opt)); }},
      {"witness-chain", [&] { return from(checks::chain_suite(opt)); }},
      {"shifting", [&] { return from(checks::shifting_suite(opt)); }},
      {"cross-sperner", [&] { return from(checks::cross_sperner_suite(opt)); }},
  };

  int failures = 0;
  for (const Gate& gate : gates) {
    const auto start = std::chrono::steady_clock::now();
    const std::string detail = gate.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (detail.empty()) {
      std::printf("PASS %s (%.2fs)\n", gate.name, seconds);
    } else {
      std::printf("FAIL %s: %s (%.2fs)\n", gate.name, detail.c_str(), seconds);
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d gate(s) failed\n", failures);
    return 1;
  }
  std::printf("all gates passed\n");
  return 0;
}
