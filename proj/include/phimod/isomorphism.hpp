#pragma once

// Isomorphism of two modules: case tables per norm permutation, a
// nullspace-based oracle, and explicit monomial witnesses.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phimod/phimodule.hpp"

namespace phimod {

/// Column j of the monomial matrix H sits in row image[j]: H e_j = h_j e'_{image[j]}.
struct EigenPermutation {
  std::array<std::size_t, 3> image;
  friend bool operator==(const EigenPermutation&, const EigenPermutation&) = default;
};

/// The six cases in order: case n is iso_cases()[n - 1].
const std::array<EigenPermutation, 6>& iso_cases();
int case_number(const EigenPermutation& sigma);
std::string to_string(const EigenPermutation& sigma);

/// Nm(P_j) = Nm(P1_{sigma(j)}) for every j.
bool norms_match(const FrobeniusData& left, const FrobeniusData& right,
                 const EigenPermutation& sigma);

/// h_u(i) = kappa * h_v(i) at one embedding.
struct HRelation {
  std::size_t u;
  std::size_t v;
  Scalar kappa;
};

struct LocalMatch {
  std::string label;
  std::vector<HRelation> relations;
};

/// Per-embedding sub-case table for case `case_no` (1..6). nullopt when no
/// sub-case applies.
std::optional<LocalMatch> local_case(int case_no, const EmbeddingFiltration& x,
                                     const EmbeddingFiltration& y);

struct IsoDecision {
  bool isomorphic = false;
  std::optional<EigenPermutation> sigma;
  /// Sub-case label per embedding for the accepted permutation.
  std::vector<std::string> per_embedding_case;
  /// Cases whose norm pattern matched, in the order tried.
  std::vector<int> norm_matching_cases;
};

/// Throws Error(StructuralMismatch) when p or f differ.
IsoDecision are_isomorphic(const PhiModule& m1, const PhiModule& m2);

/// Independent decision from H.P = P1.phi(H) and explicit subspaces.
bool oracle_isomorphic(const PhiModule& m1, const PhiModule& m2);

struct IsoWitness {
  EigenPermutation sigma;
  std::array<TauVector, 3> h;
};

/// Witness for the permutation chosen by are_isomorphic. nullopt when not
/// isomorphic; Error(Internal) if the decision cannot be realized.
std::optional<IsoWitness> find_witness(const PhiModule& m1, const PhiModule& m2);

TauMatrix witness_matrix(const IsoWitness& w);

/// Intertwining H.P = P1.phi(H), nonzero entries, and H(i) Fil^j(m1) =
/// Fil^j(m2) at every embedding and jump.
bool validate_witness(const PhiModule& m1, const PhiModule& m2, const IsoWitness& w);

/// Push m through a monomial change of basis: returns the module whose
/// Frobenius is defined by H.P = P1.phi(H) and whose filtration is the image
/// of m's under H, reduced to normal form. The image filtration may fail to
/// be in normal form for this sigma; then nullopt.
std::optional<PhiModule> transport(const PhiModule& m, const IsoWitness& w);

}  // namespace phimod
