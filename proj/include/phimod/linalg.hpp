#pragma once

// Small exact linear algebra over the coefficient field, used by the
// definitional oracles (subspace ranks, intersections, annihilators).

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "phimod/coeff.hpp"

namespace phimod::linalg {

using Vec3 = std::array<Scalar, 3>;
using Row = std::vector<Scalar>;

Vec3 basis_vector(std::size_t k);

/// Rank of the span of `rows` (all rows must have equal length).
std::size_t rank(std::vector<Row> rows);
std::size_t rank(std::span<const Vec3> vectors);

/// Basis of { x : rows . x = 0 } in the given number of columns.
std::vector<Row> nullspace(std::vector<Row> rows, std::size_t cols);

/// Basis of the linear forms vanishing on span(vectors).
std::vector<Vec3> annihilator(std::span<const Vec3> vectors);

/// dim(span(a) ∩ span(b)).
std::size_t intersection_dim(std::span<const Vec3> a, std::span<const Vec3> b);

bool same_span(std::span<const Vec3> a, std::span<const Vec3> b);

/// span(a) ⊆ span(b).
bool contained_in(std::span<const Vec3> a, std::span<const Vec3> b);

Scalar dot(const Vec3& a, const Vec3& b);

}  // namespace phimod::linalg
