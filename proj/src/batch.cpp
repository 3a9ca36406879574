#include "phimod/batch.hpp"

#include "phimod/error.hpp"

namespace phimod {

std::vector<std::optional<std::string>> run_indexed(
    std::size_t n, const std::function<std::optional<std::string>(std::size_t)>& check,
    Execution exec) {
  std::vector<std::optional<std::string>> out(n);
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        out[i] = check(static_cast<std::size_t>(i));
      } catch (const std::exception& e) {
        out[i] = std::string("exception: ") + e.what();
      }
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        out[i] = check(static_cast<std::size_t>(i));
      } catch (const std::exception& e) {
        out[i] = std::string("exception: ") + e.what();
      }
    }
  }
  return out;
}

std::vector<PhiModule> generate_batch(const GeneratorConfig& config, std::size_t n,
                                      std::size_t offset, Execution exec) {
  std::vector<std::optional<PhiModule>> slots(n);
  const auto errors = run_indexed(
      n,
      [&](std::size_t i) -> std::optional<std::string> {
        slots[i] = generate_indexed(config, offset + i);
        return std::nullopt;
      },
      exec);
  for (std::size_t i = 0; i < n; ++i)
    if (errors[i])
      throw Error(ErrorKind::TargetUnreachable,
                  "generating item " + std::to_string(offset + i) + ": " + *errors[i]);
  std::vector<PhiModule> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(s.value()));
  return out;
}

WaAgreement compare_with_oracle(const PhiModule& m, Reading reading) {
  WaAgreement a;
  a.admissibility = agrees(check_weak_admissibility(m, reading), oracle_weak_admissibility(m));
  for (SubmoduleId s : kAllSubmodules)
    a.hodge &= hodge_invariant(m, s) == oracle_hodge_invariant(m, s);
  return a;
}

std::vector<WaAgreement> check_wa_batch(std::span<const PhiModule> modules, Reading reading,
                                        Execution exec) {
  std::vector<WaAgreement> out(modules.size());
  run_indexed(
      modules.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        out[i] = compare_with_oracle(modules[i], reading);
        return std::nullopt;
      },
      exec);
  return out;
}

}  // namespace phimod
