#pragma once

// Seeded random instances for the CLI `generate` command, the self-test and
// the acceptance suite. Every draw goes through Rng so output depends only on
// the seed (no implementation-defined std distributions).

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <utility>

#include "phimod/isomorphism.hpp"
#include "phimod/monodromy.hpp"
#include "phimod/normalform.hpp"
#include "phimod/phimodule.hpp"

namespace phimod {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream for item `index` of a batch seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  /// Index drawn proportionally to `weights` (not all zero).
  std::size_t weighted(std::span<const unsigned> weights);

  /// Nonzero rational with small numerator and denominator.
  Scalar small_nonzero();
  /// Small rational, zero about a third of the time; biased toward values
  /// that hit the special relations of the isomorphism tables.
  Scalar small_param();
  /// Random +-n/d with n, d in 1..9 both prime to p.
  Scalar unit(std::int64_t p);

 private:
  std::mt19937_64 engine_;
};

enum class Target { Any, Admissible, Irreducible };

std::string_view to_string(Target t);
Target parse_target(std::string_view text);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int f_min = 1;
  int f_max = 4;
  int weight_max = 6;
  int exp_min = 0;
  int exp_max = 12;
  /// Relative frequencies of F0, F1, F2, F3.
  std::array<unsigned, 4> type_weights{1, 1, 1, 1};
  Target target = Target::Any;
  /// 0 draws p from {3, 5, 7, 11} per instance.
  std::int64_t p = 0;
  int max_retries = 20000;

  /// Throws Error(InvalidArgument) on empty ranges or weight_max < 0.
  void validate() const;
};

/// Throws Error(TargetUnreachable) after max_retries failed draws.
PhiModule generate(const GeneratorConfig& config);
/// Item `index` of a batch: generate() with the per-index stream.
PhiModule generate_indexed(const GeneratorConfig& config, std::uint64_t index);

std::int64_t random_prime(Rng& rng, const GeneratorConfig& config);
int random_f(Rng& rng, const GeneratorConfig& config);

/// Coordinates p^e * unit with e in [exp_min, exp_max]; redrawn until the
/// norms are distinct.
FrobeniusData random_frobenius(Rng& rng, std::int64_t p, std::size_t f, int exp_min, int exp_max);

EmbeddingFiltration random_filtration(Rng& rng, const GeneratorConfig& config);

/// Random monomial H with arbitrary nonzero entries.
IsoWitness random_witness(Rng& rng, std::size_t f);

/// m and a normalized image of m under a random monomial H.
std::pair<PhiModule, PhiModule> constructed_iso_pair(Rng& rng, const GeneratorConfig& config);

/// Pair with the same p, f, weights and filtration types and a norm
/// permutation in common, with independently drawn parameters; often
/// isomorphic by chance, often not.
std::pair<PhiModule, PhiModule> random_pair(Rng& rng, const GeneratorConfig& config);

struct MonodromyConfig {
  FrobeniusData frobenius;
  std::map<Position, Scalar> entries;
};

/// Frobenius built so that one or two positions of a random shape are
/// eligible, with random nonzero entries there.
MonodromyConfig random_monodromy_config(Rng& rng, const GeneratorConfig& config);

/// Random raw filtration. A share of planes and lines are deliberately put in
/// special position so that permutations and NotRepresentable both occur.
RawFiltration random_raw(Rng& rng, std::size_t f, int weight_max);

}  // namespace phimod
