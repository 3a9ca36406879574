#pragma once

// Instance-level checks over whole batches. Each item is independent, so the
// parallel path is a plain OpenMP loop writing into per-index slots; the
// serial path is the reference it must match.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phimod/admissibility.hpp"
#include "phimod/generator.hpp"

namespace phimod {

enum class Execution { Serial, Parallel };

/// Runs check(i) for i in [0, n) and returns the results in index order.
/// `check` must be safe to call concurrently for distinct i.
std::vector<std::optional<std::string>> run_indexed(
    std::size_t n, const std::function<std::optional<std::string>(std::size_t)>& check,
    Execution exec);

/// Items [offset, offset + n) of generate_indexed(config, .).
std::vector<PhiModule> generate_batch(const GeneratorConfig& config, std::size_t n,
                                      std::size_t offset, Execution exec);

struct WaAgreement {
  bool admissibility = true;  // bit, eq9 and all six slacks
  bool hodge = true;          // all seven submodules
};

WaAgreement compare_with_oracle(const PhiModule& m, Reading reading = Reading::Corrected);

std::vector<WaAgreement> check_wa_batch(std::span<const PhiModule> modules, Reading reading,
                                        Execution exec);

}  // namespace phimod
