#include "phimod/selftest.hpp"

#include <algorithm>

#include "phimod/error.hpp"
#include "phimod/isomorphism.hpp"
#include "phimod/monodromy.hpp"
#include "phimod/normalform.hpp"

namespace phimod {

namespace {

constexpr std::uint64_t kWaStream = 0x1000;
constexpr std::uint64_t kIsoBuiltStream = 0x2000;
constexpr std::uint64_t kIsoRandomStream = 0x3000;
constexpr std::uint64_t kMonodromyStream = 0x4000;
constexpr std::uint64_t kNormalStream = 0x5000;

std::optional<PhiModule> rebuild(const PhiModule& m, std::vector<EmbeddingFiltration> filt,
                                 std::array<std::vector<Scalar>, 3> eigen) {
  try {
    return PhiModule(FrobeniusData(m.p(), TauVector(std::move(eigen[0])),
                                   TauVector(std::move(eigen[1])), TauVector(std::move(eigen[2]))),
                     std::move(filt));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::array<std::vector<Scalar>, 3> eigen_of(const PhiModule& m) {
  std::array<std::vector<Scalar>, 3> out;
  for (std::size_t s = 0; s < 3; ++s) {
    const auto c = m.frobenius().eigen(s).coords();
    out[s].assign(c.begin(), c.end());
  }
  return out;
}

// Candidate simplifications of m, most aggressive first.
std::vector<PhiModule> shrink_candidates(const PhiModule& m) {
  std::vector<PhiModule> out;
  auto push = [&](std::optional<PhiModule> c) {
    if (c && !(*c == m)) out.push_back(std::move(*c));
  };
  const std::size_t f = m.f();
  const auto& filt = m.filtrations();

  if (f > 1)
    for (std::size_t drop = 0; drop < f; ++drop) {
      auto eigen = eigen_of(m);
      for (auto& e : eigen) e.erase(e.begin() + static_cast<long>(drop));
      auto g = filt;
      g.erase(g.begin() + static_cast<long>(drop));
      push(rebuild(m, std::move(g), std::move(eigen)));
    }

  for (std::size_t i = 0; i < f; ++i) {
    auto with = [&](EmbeddingFiltration e) {
      auto g = filt;
      g[i] = std::move(e);
      push(rebuild(m, std::move(g), eigen_of(m)));
    };
    if (const auto* v = std::get_if<F0>(&filt[i])) {
      if (v->k2 > v->k1 + 1) with(F0{v->k1, v->k2 - 1, v->x1, v->x2, v->x2p});
      if (v->k1 > 1) with(F0{v->k1 - 1, v->k2 - 1, v->x1, v->x2, v->x2p});
      if (!is_zero(v->x1)) with(F0{v->k1, v->k2, Scalar(0), v->x2, v->x2p});
      if (!is_zero(v->x1) && v->x1 != 1) with(F0{v->k1, v->k2, Scalar(1), v->x2, v->x2p});
      if (v->x2) with(F0{v->k1, v->k2, v->x1, false, v->x2p});
      if (v->x2p) with(F0{v->k1, v->k2, v->x1, v->x2, false});
    } else if (const auto* v = std::get_if<F1>(&filt[i])) {
      if (v->k > 1) with(F1{v->k - 1, v->x2, v->x2p});
      if (v->x2) with(F1{v->k, false, v->x2p});
      if (v->x2p) with(F1{v->k, v->x2, false});
    } else if (const auto* v = std::get_if<F2>(&filt[i])) {
      if (v->k > 1) with(F2{v->k - 1, v->x1, v->x2pp});
      if (v->x1) with(F2{v->k, false, v->x2pp});
      if (v->x2pp) with(F2{v->k, v->x1, false});
    }
    if (!std::holds_alternative<F3>(filt[i])) with(F3{});
  }

  const Scalar p(static_cast<long>(m.p()));
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t i = 0; i < f; ++i) {
      const Scalar& x = m.frobenius().eigen(s)[i];
      const Valuation v = vp(x, m.p());
      const long e = v.exponent().get_num().get_si();
      Scalar pure(1);
      for (long k = 0; k < std::abs(e); ++k) pure = e > 0 ? Scalar(pure * p) : Scalar(pure / p);
      if (x != pure) {
        auto eigen = eigen_of(m);
        eigen[s][i] = pure;
        push(rebuild(m, filt, std::move(eigen)));
      }
      if (e > 0) {
        auto eigen = eigen_of(m);
        eigen[s][i] = x / p;
        push(rebuild(m, filt, std::move(eigen)));
      }
    }
  return out;
}

PropertyResult collect(std::string name, const std::vector<std::optional<std::string>>& results) {
  PropertyResult r{std::move(name), results.size(), 0, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    if (r.failures++ == 0) r.first_failure = "item " + std::to_string(i) + ": " + *results[i];
  }
  return r;
}

GeneratorConfig with(const GeneratorConfig& base, std::uint64_t seed, Target target) {
  GeneratorConfig c = base;
  c.seed = seed;
  c.target = target;
  return c;
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failures == 0; });
}

PhiModule minimize(PhiModule m, const std::function<bool(const PhiModule&)>& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& c : shrink_candidates(m)) {
      if (fails(c)) {
        m = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return m;
}

std::optional<std::string> check_iso_pair(const PhiModule& m1, const PhiModule& m2,
                                          bool expect_isomorphic) {
  const auto d = are_isomorphic(m1, m2);
  const bool oracle = oracle_isomorphic(m1, m2);
  if (d.isomorphic != oracle)
    return "closed form says " + std::string(d.isomorphic ? "yes" : "no") + ", oracle says " +
           (oracle ? "yes" : "no");
  if (expect_isomorphic && !d.isomorphic) return std::string("constructed pair not recognized");
  if (are_isomorphic(m2, m1).isomorphic != d.isomorphic)
    return std::string("decision is not symmetric");
  if (d.isomorphic) {
    std::optional<IsoWitness> w;
    try {
      w = find_witness(m1, m2);
    } catch (const Error& e) {
      return std::string("witness construction failed: ") + e.what();
    }
    if (!w) return std::string("no witness for an isomorphic pair");
    if (!validate_witness(m1, m2, *w)) return std::string("witness fails validation");
  }
  return std::nullopt;
}

std::optional<std::string> check_monodromy_config(const MonodromyConfig& config) {
  const auto& fro = config.frobenius;
  TauMatrix a = build_monodromy(fro, config.entries);
  const auto check = validate_monodromy(fro, a);
  if (!check.valid) return "built operator rejected: " + check.reasons.front();
  if (!(a * a * a == TauMatrix(fro.f()))) return std::string("A^3 != 0");

  // Each entry solves its own defining equation coordinatewise.
  const Scalar p(static_cast<long>(fro.p()));
  for (const auto& [pos, value] : config.entries) {
    const TauVector& g = a(pos.row - 1, pos.col - 1);
    if (g[0] != value) return "entry " + to_string(pos) + " does not start at its scalar";
    if (fro.eigen(pos.col - 1) * g != p * fro.eigen(pos.row - 1) * frobenius_shift(g))
      return "entry " + to_string(pos) + " violates its defining equation";
  }

  // A perturbed coordinate must be rejected. With f = 1 every scalar solves
  // the entry equation, so there is nothing to break.
  if (fro.f() >= 2) {
    const auto& [pos, value] = *config.entries.begin();
    TauMatrix bad = a;
    bad(pos.row - 1, pos.col - 1)[fro.f() - 1] += 1;
    if (validate_monodromy(fro, bad).valid) return std::string("perturbed operator accepted");
  }

  // Every ineligible single-entry request must error.
  const auto eligible = admissible_positions(fro);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) {
      if (r == c) continue;
      const Position q{r, c};
      if (std::any_of(eligible.begin(), eligible.end(),
                      [&](const EligiblePosition& e) { return e.pos == q; }))
        continue;
      try {
        build_monodromy(fro, {{q, Scalar(1)}});
        return "ineligible position " + to_string(q) + " accepted";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::IneligiblePosition)
          return "ineligible position " + to_string(q) + " gave " + std::string(to_string(e.kind()));
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_normal_form(const FrobeniusData& fro, const RawFiltration& raw) {
  const auto result = normalize(fro, raw);
  const auto& perms = all_permutations();
  if (const auto* n = std::get_if<Normalization>(&result)) {
    if (!verify_round_trip(fro, raw, *n)) return std::string("round trip mismatch");
    for (const auto& perm : perms) {
      if (perm == n->perm) break;
      if (representable_under(raw, perm))
        return "earlier permutation " + permutation_name(perm) + " was representable";
    }
    if (!representable_under(raw, n->perm)) return std::string("chosen permutation fails rank test");
    for (std::size_t j = 0; j < 3; ++j)
      if (n->module.frobenius().eigen_norm(j) != fro.eigen_norm(n->perm[j]))
        return std::string("norms not preserved");
    return std::nullopt;
  }
  for (const auto& perm : perms)
    if (representable_under(raw, perm))
      return "NotRepresentable but " + permutation_name(perm) + " passes the rank test";
  return std::nullopt;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  if (options.n == 0) throw Error(ErrorKind::InvalidArgument, "selftest needs n >= 1");
  options.config.validate();
  const std::size_t n = options.n;
  const std::uint64_t seed = options.seed;
  SelftestReport report;

  // Weak admissibility and Hodge tables: half unconstrained, half admissible.
  const auto any = with(options.config, seed ^ kWaStream, Target::Any);
  const auto adm = with(options.config, seed ^ (kWaStream + 1), Target::Admissible);
  auto module_at = [&](std::size_t i) {
    return i % 2 == 0 ? generate_indexed(any, i / 2) : generate_indexed(adm, i / 2);
  };
  std::vector<std::optional<std::string>> wa(n), hodge(n);
  run_indexed(
      n,
      [&](std::size_t i) -> std::optional<std::string> {
        const PhiModule m = module_at(i);
        const auto a = compare_with_oracle(m, options.reading);
        if (!a.admissibility) wa[i] = "closed form and oracle disagree";
        if (!a.hodge) hodge[i] = "t_H table and oracle disagree";
        return std::nullopt;
      },
      options.exec);
  auto wa_result = collect("wa_oracle_equivalence", wa);
  auto hodge_result = collect("hodge_table_equivalence", hodge);
  auto first_bad = [](const std::vector<std::optional<std::string>>& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(),
                                                 [](const auto& x) { return x.has_value(); }) -
                                    v.begin());
  };
  if (wa_result.failures) {
    const Reading reading = options.reading;
    PhiModule m = minimize(module_at(first_bad(wa)), [reading](const PhiModule& c) {
      return !compare_with_oracle(c, reading).admissibility;
    });
    Json ce;
    ce["instance"] = to_json(m);
    ce["closed_form"] = to_json(check_weak_admissibility(m, reading));
    ce["oracle"] = to_json(oracle_weak_admissibility(m));
    wa_result.counterexample = std::move(ce);
  }
  if (hodge_result.failures) {
    PhiModule m = minimize(module_at(first_bad(hodge)), [](const PhiModule& c) {
      return !compare_with_oracle(c).hodge;
    });
    hodge_result.counterexample = Json{{"instance", to_json(m)}};
  }
  report.properties.push_back(std::move(wa_result));
  report.properties.push_back(std::move(hodge_result));

  auto pair_property = [&](std::string name, std::uint64_t stream, bool constructed) {
    const auto cfg = with(options.config, seed ^ stream, Target::Any);
    auto pair_at = [&](std::size_t i) {
      Rng rng = Rng::stream(cfg.seed, i);
      return constructed ? constructed_iso_pair(rng, cfg) : random_pair(rng, cfg);
    };
    auto results = run_indexed(
        n,
        [&](std::size_t i) {
          const auto [m1, m2] = pair_at(i);
          return check_iso_pair(m1, m2, constructed);
        },
        options.exec);
    auto r = collect(std::move(name), results);
    if (r.failures) {
      const auto [m1, m2] = pair_at(first_bad(results));
      r.counterexample = Json{{"left", to_json(m1)}, {"right", to_json(m2)}};
    }
    report.properties.push_back(std::move(r));
  };
  pair_property("iso_constructed_pairs", kIsoBuiltStream, true);
  pair_property("iso_random_pairs", kIsoRandomStream, false);

  {
    const auto cfg = with(options.config, seed ^ kMonodromyStream, Target::Any);
    auto config_at = [&](std::size_t i) {
      Rng rng = Rng::stream(cfg.seed, i);
      return random_monodromy_config(rng, cfg);
    };
    auto results = run_indexed(
        n, [&](std::size_t i) { return check_monodromy_config(config_at(i)); }, options.exec);
    auto r = collect("monodromy_soundness", results);
    if (r.failures) {
      const auto c = config_at(first_bad(results));
      InstanceDocument doc{c.frobenius, std::nullopt, std::nullopt, c.entries};
      r.counterexample = to_json(doc);
    }
    report.properties.push_back(std::move(r));
  }

  {
    const auto cfg = with(options.config, seed ^ kNormalStream, Target::Any);
    auto raw_at = [&](std::size_t i) {
      Rng rng = Rng::stream(cfg.seed, i);
      const std::int64_t p = random_prime(rng, cfg);
      const auto f = static_cast<std::size_t>(random_f(rng, cfg));
      FrobeniusData fro = random_frobenius(rng, p, f, cfg.exp_min, cfg.exp_max);
      RawFiltration raw = random_raw(rng, f, cfg.weight_max);
      return InstanceDocument{std::move(fro), std::nullopt, std::move(raw), {}};
    };
    auto results = run_indexed(
        n,
        [&](std::size_t i) {
          const auto doc = raw_at(i);
          return check_normal_form(doc.frobenius, *doc.raw);
        },
        options.exec);
    auto r = collect("normal_form_round_trip", results);
    if (r.failures) r.counterexample = to_json(raw_at(first_bad(results)));
    report.properties.push_back(std::move(r));
  }
  return report;
}

Json to_json(const SelftestReport& report) {
  Json j;
  j["passed"] = report.passed();
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json e;
    e["name"] = p.name;
    e["checked"] = p.checked;
    e["failures"] = p.failures;
    if (p.first_failure) e["first_failure"] = *p.first_failure;
    if (p.counterexample) e["counterexample"] = *p.counterexample;
    props.push_back(std::move(e));
  }
  j["properties"] = std::move(props);
  return j;
}

}  // namespace phimod
