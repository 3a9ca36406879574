// phimod: command-line front end. Exit codes: 0 ok, 1 invalid input,
// 2 property violation (oracle mismatch, failed validation, self-test failure).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phimod/admissibility.hpp"
#include "phimod/error.hpp"
#include "phimod/generator.hpp"
#include "phimod/isomorphism.hpp"
#include "phimod/json_io.hpp"
#include "phimod/monodromy.hpp"
#include "phimod/normalform.hpp"
#include "phimod/selftest.hpp"

using namespace phimod;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kViolation = 2;

bool g_pretty = false;

void emit(const Json& j) { std::cout << dump(j, g_pretty ? 2 : -1); }

int fail(ErrorKind kind, const std::string& message) {
  Json j{{"error", std::string(to_string(kind))}, {"message", message}};
  std::cerr << dump(j);
  return kInvalid;
}

Reading parse_variant(const std::string& v) {
  if (v.empty() || v == "corrected") return Reading::Corrected;
  if (v == "literal-10") return Reading::StatementLiteral;
  throw Error(ErrorKind::InvalidArgument, "variant must be corrected or literal-10");
}

int cmd_validate(const std::string& in) {
  const auto doc = read_instance_file(in);
  Json j;
  j["valid"] = true;
  j["p"] = doc.frobenius.p();
  j["f"] = doc.frobenius.f();
  Json norms = Json::array();
  for (std::size_t s = 0; s < 3; ++s)
    norms.push_back({{"norm", format_scalar(doc.frobenius.eigen_norm(s))},
                     {"valuation", doc.frobenius.eigen_valuation(s).to_string()}});
  j["eigen_norms"] = std::move(norms);
  if (doc.filt) {
    const PhiModule m = doc.module();
    Json weights = Json::array();
    for (std::size_t i = 0; i < m.f(); ++i) weights.push_back(phimod::weights(m, i));
    j["weights"] = std::move(weights);
    const auto cls = classify_embeddings(m);
    j["classes"] = {{"I1", cls.i1}, {"I2", cls.i2}, {"I3", cls.i3}, {"trivial", cls.trivial}};
  }
  j["has_raw_filtration"] = doc.raw.has_value();
  emit(j);
  return kOk;
}

int cmd_check_wa(const std::string& in, bool oracle, const std::string& variant) {
  const PhiModule m = read_instance_file(in).module();
  const Reading reading = parse_variant(variant);
  const auto report = check_weak_admissibility(m, reading);
  Json j = to_json(report);
  if (!oracle) {
    emit(j);
    return kOk;
  }
  const auto verdict = oracle_weak_admissibility(m);
  const bool ok = agrees(report, verdict);
  j["oracle"] = to_json(verdict);
  j["oracle_agrees"] = ok;
  emit(j);
  return ok ? kOk : kViolation;
}

int cmd_iso(const std::string& left, const std::string& right, bool witness, bool oracle) {
  const PhiModule m1 = read_instance_file(left).module();
  const PhiModule m2 = read_instance_file(right).module();
  const auto d = are_isomorphic(m1, m2);
  Json j = to_json(d);
  int code = kOk;
  if (witness && d.isomorphic) {
    const auto w = find_witness(m1, m2);
    j["witness"] = to_json(*w);
    j["witness_valid"] = validate_witness(m1, m2, *w);
    if (!j["witness_valid"].get<bool>()) code = kViolation;
  }
  if (oracle) {
    const bool agrees = oracle_isomorphic(m1, m2) == d.isomorphic;
    j["oracle_agrees"] = agrees;
    if (!agrees) code = kViolation;
  }
  emit(j);
  return code;
}

int cmd_normalize(const std::string& in) {
  const auto doc = read_instance_file(in);
  if (!doc.raw) throw Error(ErrorKind::Parse, "instance has no \"raw_filtration\" section");
  const auto result = normalize(doc.frobenius, *doc.raw);
  Json j;
  j["input_frobenius"] = {{"a", to_json(doc.frobenius.a())},
                          {"b", to_json(doc.frobenius.b())},
                          {"c", to_json(doc.frobenius.c())}};
  if (const auto* n = std::get_if<Normalization>(&result)) {
    const bool ok = verify_round_trip(doc.frobenius, *doc.raw, *n);
    j["representable"] = true;
    j["normalized"] = to_json(n->module);
    j["audit"] = to_json(*n)["audit"];
    j["round_trip_verified"] = ok;
    emit(j);
    return ok ? kOk : kViolation;
  }
  const auto& nr = std::get<NotRepresentable>(result);
  j["representable"] = false;
  j["rejected_permutations"] = nr.rejected;
  emit(j);
  return kOk;
}

int cmd_monodromy(const std::string& in, const std::string& entries_text, bool positions) {
  const auto doc = read_instance_file(in);
  if (positions) {
    Json arr = Json::array();
    for (const auto& e : admissible_positions(doc.frobenius))
      arr.push_back({{"position", to_string(e.pos)},
                     {"shape", std::string(to_string(shape_of(e.pos)))},
                     {"requires", e.requirement}});
    emit(Json{{"eligible", std::move(arr)}});
    return kOk;
  }
  std::map<Position, Scalar> entries = doc.monodromy;
  if (!entries_text.empty()) {
    Json e;
    try {
      e = Json::parse(entries_text);
    } catch (const Json::parse_error& err) {
      throw Error(ErrorKind::Parse, std::string("--entries: ") + err.what());
    }
    Json wrapped = to_json(InstanceDocument{doc.frobenius, std::nullopt, std::nullopt, {}});
    wrapped["monodromy"] = e;
    entries = parse_instance(wrapped).monodromy;
  }
  const TauMatrix a = build_monodromy(doc.frobenius, entries);
  const auto check = validate_monodromy(doc.frobenius, a);
  emit(Json{{"matrix", to_json(a)}, {"validation", to_json(check)}});
  return check.valid ? kOk : kViolation;
}

std::array<unsigned, 4> parse_types(const std::string& text) {
  std::array<unsigned, 4> out{};
  std::stringstream ss(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ',')) {
    if (k >= 4) break;
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      out[k++] = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--types expects four nonnegative integers");
    }
  }
  if (k != 4) throw Error(ErrorKind::InvalidArgument, "--types expects four nonnegative integers");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-3 filtered phi-modules: admissibility, isomorphism, monodromy, normal forms"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Indented JSON output");
  app.add_flag("--json", "Compact JSON output (default)");

  std::string in, left, right, entries, variant, types = "1,1,1,1", target = "any";
  bool oracle = false, witness = false, positions = false, serial = false;
  GeneratorConfig gen;
  std::size_t n = 1000;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "Parse and validate an instance");
  validate->add_option("--in", in, "Instance JSON")->required();

  auto* check_wa = app.add_subcommand("check-wa", "Weak admissibility report");
  check_wa->add_option("--in", in, "Instance JSON")->required();
  check_wa->add_flag("--oracle", oracle, "Also run the definitional oracle");
  check_wa->add_option("--variant", variant, "corrected (default) or literal-10");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two instances");
  iso->add_option("--left", left, "First instance")->required();
  iso->add_option("--right", right, "Second instance")->required();
  iso->add_flag("--witness", witness, "Emit and validate a monomial witness");
  iso->add_flag("--oracle", oracle, "Cross-check with the oracle");

  auto* norm = app.add_subcommand("normalize", "Reduce raw_filtration to normal form");
  norm->add_option("--in", in, "Instance JSON with raw_filtration")->required();

  auto* mono = app.add_subcommand("monodromy", "Build and validate a monodromy operator");
  mono->add_option("--in", in, "Instance JSON")->required();
  mono->add_option("--entries", entries, R"(Entries like '{"12":"2"}')");
  mono->add_flag("--positions", positions, "List eligible positions only");

  auto* generate = app.add_subcommand("generate", "Seeded random instance");
  generate->add_option("--seed", gen.seed, "64-bit seed");
  generate->add_option("--f-min", gen.f_min);
  generate->add_option("--f-max", gen.f_max);
  generate->add_option("--weight-max", gen.weight_max);
  generate->add_option("--exp-min", gen.exp_min);
  generate->add_option("--exp-max", gen.exp_max);
  generate->add_option("--types", types, "Relative weights of F0,F1,F2,F3");
  generate->add_option("--target", target, "any, admissible or irreducible");
  generate->add_option("--p", gen.p, "Odd prime, 0 for random");
  generate->add_option("--retries", gen.max_retries);

  auto* self = app.add_subcommand("selftest", "Oracle equivalence self-test");
  self->add_option("--n", n, "Items per property");
  self->add_option("--seed", seed);
  self->add_option("--variant", variant, "corrected (default) or literal-10");
  self->add_flag("--serial", serial, "Disable the OpenMP path");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate) return cmd_validate(in);
    if (*check_wa) return cmd_check_wa(in, oracle, variant);
    if (*iso) return cmd_iso(left, right, witness, oracle);
    if (*norm) return cmd_normalize(in);
    if (*mono) return cmd_monodromy(in, entries, positions);
    if (*generate) {
      gen.type_weights = parse_types(types);
      gen.target = parse_target(target);
      emit(to_json(phimod::generate(gen)));
      return kOk;
    }
    if (*self) {
      SelftestOptions opts;
      opts.n = n;
      opts.seed = seed;
      opts.reading = parse_variant(variant);
      opts.exec = serial ? Execution::Serial : Execution::Parallel;
      const auto report = run_selftest(opts);
      emit(to_json(report));
      return report.passed() ? kOk : kViolation;
    }
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail(ErrorKind::Internal, e.what());
  }
  return kInvalid;
}
