#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qea/field.hpp"

namespace qea {

/// One theorem-checking run is fully determined by this configuration;
/// identical configs produce byte-identical reports.
struct SuiteConfig {
  std::uint32_t p = 5, ell = 2, n = 2;
  std::uint64_t seed = 1;
  std::uint32_t battery = 20;
  std::uint32_t size_budget = 0;  // 0 selects the per-config default
  std::vector<std::uint32_t> ext_degrees{1, 2};
  std::uint32_t trials = 32;
  int workers = 0;  // 0 = hardware concurrency
  bool negated_antipode = false;  // force S(g_i) = -g_i^{-1}
  bool inject_fault = false;         // corrupt one battery entry (test hook)
};

struct CaseFailure {
  std::string case_id;
  std::string detail;
  std::string repro_json;  // modules / λ / e / seed needed to replay
};

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<CaseFailure> failures;
  double wall_ms = 0;  // console diagnostics only; never serialized

  bool passed() const { return failures.empty(); }
};

struct ConfigReport {
  SuiteConfig cfg;
  std::vector<SuiteReport> suites;

  bool passed() const {
    for (auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<SuiteReport> run_all(const SuiteConfig& cfg);

/// The four standing configurations (ℓ, n, p) = (2,2,5), (3,2,7), (2,3,5), (5,2,11).
std::vector<SuiteConfig> default_configs(std::uint64_t seed);
std::uint32_t default_size_budget(std::uint32_t ell, std::uint32_t n);

/// Deterministic report serialization (timings excluded).
std::string report_to_json(const std::vector<ConfigReport>& reports);
std::string report_to_text(const std::vector<ConfigReport>& reports, bool include_times);

}  // namespace qea
