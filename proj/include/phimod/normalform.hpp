#pragma once

// Materialize normal-form filtrations as explicit subspaces of E^3, and
// reduce raw per-embedding filtration data to normal form.

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "phimod/linalg.hpp"
#include "phimod/phimodule.hpp"

namespace phimod {

using linalg::Vec3;

/// Fil^j for start <= j < next step's start. An empty span is the zero space.
struct FilStep {
  int start;
  std::vector<Vec3> span;
};

/// Steps in increasing order; the first always starts at 0 with the full space
/// and the last is the zero space.
std::vector<FilStep> filtration_subspaces(const EmbeddingFiltration& filt);
std::vector<FilStep> filtration_subspaces(const PhiModule& m, std::size_t i);

/// Spanning vectors of Fil^j (any integer j).
const std::vector<Vec3>& fil_at(const std::vector<FilStep>& steps, int j);

/// Every j at which some step starts, plus one past the last jump.
std::vector<int> jump_set(const std::vector<FilStep>& steps);

/// Raw filtration at one embedding: plane span(u, v) on 1..k1 and the line
/// lambda*u + mu*v on k1+1..k2. With k1 = 0 only the line is used.
struct RawEmbedding {
  int k1 = 0;
  int k2 = 0;
  Vec3 u{Scalar(1), Scalar(0), Scalar(0)};
  Vec3 v{Scalar(0), Scalar(1), Scalar(0)};
  Scalar lambda{1};
  Scalar mu{0};
};

using RawFiltration = std::vector<RawEmbedding>;

/// Throws Error(DegenerateInput) on invalid raw data.
void validate_raw(const RawFiltration& raw, std::size_t f);

std::vector<FilStep> raw_subspaces(const RawEmbedding& raw);

/// New basis slot j is old slot perm[j].
using Permutation = std::array<std::size_t, 3>;

/// Search order: identity, transpositions, 3-cycles.
const std::array<Permutation, 6>& all_permutations();

std::string permutation_name(const Permutation& perm);

struct Normalization {
  PhiModule module;
  Permutation perm;
  /// New basis vector j at embedding i is rescale[j](i) * old e_{perm[j]}.
  std::array<TauVector, 3> rescale;
  /// One line per rejected permutation.
  std::vector<std::string> rejected;
};

struct NotRepresentable {
  std::vector<std::string> rejected;
};

using NormalizeResult = std::variant<Normalization, NotRepresentable>;

/// Throws Error(DegenerateInput) on invalid raw data.
NormalizeResult normalize(const FrobeniusData& fro, const RawFiltration& raw);

/// Coordinates in the original basis of a vector given in the normalized basis.
Vec3 to_original_basis(const Normalization& n, std::size_t i, const Vec3& w);

/// Independent check: the normalized filtration, mapped back to the original
/// basis, equals the raw filtration at every jump (rank tests). Also checks
/// the rescaled Frobenius against the original.
bool verify_round_trip(const FrobeniusData& fro, const RawFiltration& raw,
                       const Normalization& n);

/// Rank-based representability under one global permutation: the plane must
/// avoid the new e2 and the line must avoid span(new e1, new e2).
bool representable_under(const RawFiltration& raw, const Permutation& perm);

}  // namespace phimod
