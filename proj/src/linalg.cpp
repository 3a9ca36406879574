#include "phimod/linalg.hpp"

#include <utility>

namespace phimod::linalg {

Vec3 basis_vector(std::size_t k) {
  Vec3 v{Scalar(0), Scalar(0), Scalar(0)};
  v[k] = 1;
  return v;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || is_zero(m[k][c])) continue;
      Scalar factor = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Row> to_rows(std::span<const Vec3> vs) {
  std::vector<Row> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.emplace_back(v.begin(), v.end());
  return rows;
}

}  // namespace

std::size_t rank(std::vector<Row> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return rref(rows, cols).size();
}

std::size_t rank(std::span<const Vec3> vectors) { return rank(to_rows(vectors)); }

std::vector<Row> nullspace(std::vector<Row> rows, std::size_t cols) {
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols, Scalar(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec3> annihilator(std::span<const Vec3> vectors) {
  std::vector<Vec3> out;
  for (auto& n : nullspace(to_rows(vectors), 3)) out.push_back({n[0], n[1], n[2]});
  return out;
}

std::size_t intersection_dim(std::span<const Vec3> a, std::span<const Vec3> b) {
  std::vector<Vec3> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return rank(a) + rank(b) - rank(both);
}

bool contained_in(std::span<const Vec3> a, std::span<const Vec3> b) {
  std::vector<Vec3> both(b.begin(), b.end());
  both.insert(both.end(), a.begin(), a.end());
  return rank(both) == rank(b);
}

bool same_span(std::span<const Vec3> a, std::span<const Vec3> b) {
  return contained_in(a, b) && contained_in(b, a);
}

Scalar dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace phimod::linalg
