#pragma once

// Oracle self-test: generates instances and pairs and checks every
// closed-form routine against its independent counterpart.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phimod/admissibility.hpp"
#include "phimod/batch.hpp"
#include "phimod/generator.hpp"
#include "phimod/json_io.hpp"

namespace phimod {

struct SelftestOptions {
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  Reading reading = Reading::Corrected;
  Execution exec = Execution::Parallel;
  /// Ranges for generated instances; seed and target are set per property.
  GeneratorConfig config;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  /// Minimized where the property is about a single module.
  std::optional<Json> counterexample;
};

struct SelftestReport {
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// Throws Error(InvalidArgument) when n == 0.
SelftestReport run_selftest(const SelftestOptions& options);

Json to_json(const SelftestReport& report);

/// Greedy shrinking of a failing module: fewer embeddings, smaller weights,
/// parameters toward 0/1, units toward 1. `fails` is re-checked at each step.
PhiModule minimize(PhiModule m, const std::function<bool(const PhiModule&)>& fails);

// Single-item checks, shared with the acceptance suite. Each returns a
// failure description or nullopt.
std::optional<std::string> check_iso_pair(const PhiModule& m1, const PhiModule& m2,
                                          bool expect_isomorphic);
std::optional<std::string> check_monodromy_config(const MonodromyConfig& config);
std::optional<std::string> check_normal_form(const FrobeniusData& fro, const RawFiltration& raw);

}  // namespace phimod
