#include "phimod/generator.hpp"

#include <numeric>

#include "phimod/admissibility.hpp"
#include "phimod/error.hpp"

namespace phimod {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Scalar p_power(std::int64_t p, int e) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Scalar(q) : Scalar(mpz_class(1), q);
}

int total_weight(const EmbeddingFiltration& filt) {
  auto w = std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, F0>) return v.k1 + v.k2;
        if constexpr (std::is_same_v<T, F1>) return 2 * v.k;
        if constexpr (std::is_same_v<T, F2>) return v.k;
        return 0;
      },
      filt);
  return w;
}

// Split `total` into `parts` nonnegative pieces, each at most `cap`.
std::vector<int> random_split(Rng& rng, int total, std::size_t parts, int cap) {
  std::vector<int> out(parts, 0);
  for (int unit = 0; unit < total; ++unit) {
    std::size_t k = rng.below(parts);
    for (std::size_t tries = 0; out[k] >= cap && tries < parts; ++tries) k = (k + 1) % parts;
    ++out[k];
  }
  return out;
}

FrobeniusData frobenius_with_exponents(Rng& rng, std::int64_t p, std::size_t f,
                                       const std::vector<int>& exps) {
  for (;;) {
    std::array<std::vector<Scalar>, 3> coords;
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t i = 0; i < f; ++i) coords[s].push_back(p_power(p, exps[s * f + i]) * rng.unit(p));
    try {
      return FrobeniusData(p, TauVector(coords[0]), TauVector(coords[1]), TauVector(coords[2]));
    } catch (const Error&) {
      // equal norms: redraw the units
    }
  }
}

PhiModule draw(Rng& rng, const GeneratorConfig& config) {
  const std::int64_t p = random_prime(rng, config);
  const auto f = static_cast<std::size_t>(random_f(rng, config));
  std::vector<EmbeddingFiltration> filt;
  int hodge_full = 0;
  for (std::size_t i = 0; i < f; ++i) {
    filt.push_back(random_filtration(rng, config));
    hodge_full += total_weight(filt.back());
  }
  std::vector<int> exps(3 * f);
  // Unconstrained draws also balance (9) half the time; otherwise nearly
  // every inequality would be strict.
  const bool want_balance = config.target != Target::Any || rng.chance(1, 2);
  const bool balance = want_balance && config.exp_min <= 0 &&
                       hodge_full <= config.exp_max * static_cast<int>(3 * f);
  if (balance) {
    exps = random_split(rng, hodge_full, 3 * f, config.exp_max);
  } else {
    for (auto& e : exps) e = static_cast<int>(rng.range(config.exp_min, config.exp_max));
  }
  return PhiModule(frobenius_with_exponents(rng, p, f, exps), std::move(filt));
}

PhiModule generate_with(Rng& rng, const GeneratorConfig& config) {
  config.validate();
  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    PhiModule m = draw(rng, config);
    if (config.target == Target::Any) return m;
    const auto report = check_weak_admissibility(m);
    if (config.target == Target::Admissible && report.admissible) return m;
    if (config.target == Target::Irreducible && report.irreducible) return m;
  }
  throw Error(ErrorKind::TargetUnreachable,
              "no " + std::string(to_string(config.target)) + " instance after " +
                  std::to_string(config.max_retries) + " attempts");
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix(splitmix(seed) ^ splitmix(index + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::size_t Rng::weighted(std::span<const unsigned> weights) {
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  std::uint64_t x = below(total);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (x < weights[k]) return k;
    x -= weights[k];
  }
  return weights.size() - 1;
}

Scalar Rng::small_nonzero() {
  Scalar s(range(1, 5), range(1, 3));
  s.canonicalize();
  return chance(1, 2) ? Scalar(-s) : s;
}

Scalar Rng::small_param() {
  static const std::array<Scalar, 10> special = {
      Scalar(1),  Scalar(-1), Scalar(2),     Scalar(-2),    Scalar(1, 2),
      Scalar(-1, 2), Scalar(-3, 2), Scalar(-2, 3), Scalar(3), Scalar(1, 3)};
  switch (below(6)) {
    case 0:
    case 1: return Scalar(0);
    case 2:
    case 3: return special[below(special.size())];
    default: return small_nonzero();
  }
}

Scalar Rng::unit(std::int64_t p) {
  auto prime_to_p = [&] {
    for (;;) {
      const std::int64_t n = range(1, 9);
      if (n % p != 0) return n;
    }
  };
  Scalar s(prime_to_p(), prime_to_p());
  s.canonicalize();
  return chance(1, 2) ? Scalar(-s) : s;
}

std::string_view to_string(Target t) {
  switch (t) {
    case Target::Any: return "any";
    case Target::Admissible: return "admissible";
    case Target::Irreducible: return "irreducible";
  }
  return "?";
}

Target parse_target(std::string_view text) {
  if (text == "any") return Target::Any;
  if (text == "admissible") return Target::Admissible;
  if (text == "irreducible") return Target::Irreducible;
  throw Error(ErrorKind::InvalidArgument, "target must be any, admissible or irreducible");
}

void GeneratorConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (f_min < 1 || f_max < f_min) bad("need 1 <= f_min <= f_max");
  if (weight_max < 0) bad("weight_max must be >= 0");
  if (exp_max < exp_min) bad("need exp_min <= exp_max");
  if (p != 0 && !is_odd_prime(p)) bad("p must be an odd prime (or 0 for random)");
  if (max_retries < 1) bad("max_retries must be >= 1");
  std::array<unsigned, 4> usable = type_weights;
  if (weight_max < 2) usable[0] = 0;
  if (weight_max < 1) usable[1] = usable[2] = 0;
  if (usable[0] + usable[1] + usable[2] + usable[3] == 0)
    bad("no filtration type is possible with these type weights and weight_max");
}

PhiModule generate(const GeneratorConfig& config) {
  Rng rng(config.seed);
  return generate_with(rng, config);
}

PhiModule generate_indexed(const GeneratorConfig& config, std::uint64_t index) {
  Rng rng = Rng::stream(config.seed, index);
  return generate_with(rng, config);
}

std::int64_t random_prime(Rng& rng, const GeneratorConfig& config) {
  static constexpr std::array<std::int64_t, 4> primes = {3, 5, 7, 11};
  return config.p != 0 ? config.p : primes[rng.below(primes.size())];
}

int random_f(Rng& rng, const GeneratorConfig& config) {
  return static_cast<int>(rng.range(config.f_min, config.f_max));
}

FrobeniusData random_frobenius(Rng& rng, std::int64_t p, std::size_t f, int exp_min, int exp_max) {
  std::vector<int> exps(3 * f);
  for (auto& e : exps) e = static_cast<int>(rng.range(exp_min, exp_max));
  return frobenius_with_exponents(rng, p, f, exps);
}

EmbeddingFiltration random_filtration(Rng& rng, const GeneratorConfig& config) {
  std::array<unsigned, 4> w = config.type_weights;
  const int kmax = config.weight_max;
  if (kmax < 2) w[0] = 0;
  if (kmax < 1) w[1] = w[2] = 0;
  switch (rng.weighted(w)) {
    case 0: {
      const int k1 = static_cast<int>(rng.range(1, kmax - 1));
      const int k2 = static_cast<int>(rng.range(k1 + 1, kmax));
      return F0{k1, k2, rng.small_param(), rng.chance(1, 2), rng.chance(1, 2)};
    }
    case 1: return F1{static_cast<int>(rng.range(1, kmax)), rng.chance(1, 2), rng.chance(1, 2)};
    case 2: return F2{static_cast<int>(rng.range(1, kmax)), rng.chance(1, 2), rng.chance(1, 2)};
    default: return F3{};
  }
}

IsoWitness random_witness(Rng& rng, std::size_t f) {
  IsoWitness w{iso_cases()[rng.below(6)], {}};
  for (auto& h : w.h) {
    std::vector<Scalar> coords;
    for (std::size_t i = 0; i < f; ++i) coords.push_back(rng.small_nonzero());
    h = TauVector(std::move(coords));
  }
  return w;
}

std::pair<PhiModule, PhiModule> constructed_iso_pair(Rng& rng, const GeneratorConfig& config) {
  for (;;) {
    Rng sub(rng.below(std::numeric_limits<std::uint64_t>::max()));
    PhiModule m = generate_with(sub, config);
    auto image = transport(m, random_witness(rng, m.f()));
    if (image) return {std::move(m), std::move(*image)};
  }
}

std::pair<PhiModule, PhiModule> random_pair(Rng& rng, const GeneratorConfig& config) {
  Rng sub(rng.below(std::numeric_limits<std::uint64_t>::max()));
  PhiModule m1 = generate_with(sub, config);
  const std::size_t f = m1.f();
  const auto& sigma = iso_cases()[rng.below(6)];

  // Same norms in permuted slots, coordinates redistributed.
  std::array<std::vector<Scalar>, 3> eigen;
  for (std::size_t j = 0; j < 3; ++j) {
    const TauVector& src = m1.frobenius().eigen(j);
    std::vector<Scalar> coords(src.coords().begin(), src.coords().end());
    for (std::size_t i = 0; i + 1 < f; ++i) {
      const Scalar t = rng.small_nonzero();
      coords[i] *= t;
      coords[i + 1] /= t;
    }
    eigen[sigma.image[j]] = std::move(coords);
  }
  FrobeniusData fro(m1.p(), TauVector(eigen[0]), TauVector(eigen[1]), TauVector(eigen[2]));

  // Same type and weights, parameters redrawn (and sometimes kept).
  std::vector<EmbeddingFiltration> filt;
  for (const auto& e : m1.filtrations()) {
    EmbeddingFiltration g = e;
    if (auto* v = std::get_if<F0>(&g)) {
      v->x1 = rng.small_param();
      v->x2 = rng.chance(1, 2);
      v->x2p = rng.chance(1, 2);
    } else if (auto* v = std::get_if<F1>(&g)) {
      v->x2 = rng.chance(1, 2);
      v->x2p = rng.chance(1, 2);
    } else if (auto* v = std::get_if<F2>(&g)) {
      v->x1 = rng.chance(1, 2);
      v->x2pp = rng.chance(1, 2);
    }
    filt.push_back(rng.chance(1, 4) ? e : g);
  }
  return {std::move(m1), PhiModule(std::move(fro), std::move(filt))};
}

MonodromyConfig random_monodromy_config(Rng& rng, const GeneratorConfig& config) {
  const std::int64_t p = random_prime(rng, config);
  const auto f = static_cast<std::size_t>(random_f(rng, config));
  const bool down = rng.chance(1, 2);
  std::vector<Position> shape = down ? std::vector<Position>{{1, 2}, {2, 3}, {3, 1}}
                                     : std::vector<Position>{{1, 3}, {2, 1}, {3, 2}};
  const std::size_t skip = rng.below(3);
  std::vector<Position> chosen;
  for (std::size_t k = 0; k < 3; ++k)
    if (k != skip) chosen.push_back(shape[k]);
  if (rng.chance(1, 3)) chosen.erase(chosen.begin() + static_cast<long>(rng.below(2)));

  // Walk the chain from the row that is no chosen position's column.
  std::array<bool, 3> is_col{false, false, false};
  for (const auto& pos : chosen) is_col[pos.col - 1] = true;
  std::size_t start = 0;
  for (const auto& pos : chosen)
    if (!is_col[pos.row - 1]) start = pos.row - 1;

  for (;;) {
    std::array<std::vector<Scalar>, 3> eigen;
    std::array<bool, 3> done{false, false, false};
    auto fresh = [&] {
      std::vector<Scalar> v;
      for (std::size_t i = 0; i < f; ++i)
        v.push_back(p_power(p, static_cast<int>(rng.range(config.exp_min, config.exp_max))) *
                    rng.unit(p));
      return v;
    };
    eigen[start] = fresh();
    done[start] = true;
    std::size_t cur = start;
    for (bool moved = true; moved;) {
      moved = false;
      for (const auto& pos : chosen) {
        if (static_cast<std::size_t>(pos.row - 1) != cur) continue;
        const std::size_t next = pos.col - 1;
        std::vector<Scalar> v = eigen[cur];
        for (auto& x : v) x *= Scalar(p);
        for (std::size_t i = 0; i + 1 < f; ++i) {
          const Scalar t = rng.small_nonzero();
          v[i] *= t;
          v[i + 1] /= t;
        }
        eigen[next] = std::move(v);
        done[next] = true;
        cur = next;
        moved = true;
        break;
      }
    }
    for (std::size_t s = 0; s < 3; ++s)
      if (!done[s]) eigen[s] = fresh();
    try {
      MonodromyConfig out{FrobeniusData(p, TauVector(eigen[0]), TauVector(eigen[1]),
                                        TauVector(eigen[2])),
                          {}};
      for (const auto& pos : chosen) out.entries[pos] = rng.small_nonzero();
      return out;
    } catch (const Error&) {
      // coinciding norms: redraw
    }
  }
}

RawFiltration random_raw(Rng& rng, std::size_t f, int weight_max) {
  auto entry = [&] { return Scalar(rng.range(-3, 3)); };
  RawFiltration raw;
  for (std::size_t i = 0; i < f; ++i) {
    RawEmbedding r;
    r.k1 = static_cast<int>(rng.range(0, weight_max));
    r.k2 = static_cast<int>(rng.range(r.k1, weight_max));
    for (;;) {
      r.u = {entry(), entry(), entry()};
      r.v = {entry(), entry(), entry()};
      if (rng.chance(1, 4)) r.u = linalg::basis_vector(rng.below(3));
      if (rng.chance(1, 4)) r.v = linalg::basis_vector(rng.below(3));
      r.lambda = rng.chance(1, 4) ? Scalar(0) : Scalar(rng.range(-2, 2));
      r.mu = rng.chance(1, 4) ? Scalar(0) : Scalar(rng.range(-2, 2));
      try {
        validate_raw({r}, 1);
        break;
      } catch (const Error&) {
      }
    }
    raw.push_back(std::move(r));
  }
  return raw;
}

}  // namespace phimod
