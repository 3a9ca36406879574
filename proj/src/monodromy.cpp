#include "phimod/monodromy.hpp"

#include <set>

#include "phimod/error.hpp"

namespace phimod {

namespace {

constexpr std::array<char, 3> kEigenNames = {'a', 'b', 'c'};

Scalar p_to_f(const FrobeniusData& fro) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(fro.p()),
                static_cast<unsigned long>(fro.f()));
  return Scalar(q);
}

// Entry (r, c) solves P_cc * x = p * P_rr * phi(x).
bool eligible(const FrobeniusData& fro, const Position& pos) {
  return fro.eigen_norm(pos.col - 1) == p_to_f(fro) * fro.eigen_norm(pos.row - 1);
}

}  // namespace

std::string to_string(const Position& pos) {
  return std::to_string(pos.row) + std::to_string(pos.col);
}

Position parse_position(std::string_view text) {
  if (text.size() != 2 || text[0] < '1' || text[0] > '3' || text[1] < '1' || text[1] > '3' ||
      text[0] == text[1])
    throw Error(ErrorKind::Parse, "bad monodromy position '" + std::string(text) + "'");
  return {text[0] - '0', text[1] - '0'};
}

MonodromyShape shape_of(const Position& pos) {
  return (pos.col - pos.row + 3) % 3 == 1 ? MonodromyShape::CycleDown : MonodromyShape::CycleUp;
}

std::string_view to_string(MonodromyShape s) {
  return s == MonodromyShape::CycleDown ? "CycleDown" : "CycleUp";
}

TauVector solve_entry(const TauVector& alpha, const TauVector& beta, const Scalar& gamma0) {
  if (alpha.size() != beta.size())
    throw Error(ErrorKind::InvalidArgument, "alpha and beta have different lengths");
  if (!alpha.all_nonzero() || !beta.all_nonzero())
    throw Error(ErrorKind::InvalidArgument, "alpha and beta must have nonzero coordinates");
  const std::size_t f = alpha.size();
  if (is_zero(gamma0)) return TauVector::zero(f);
  if (norm(alpha) != norm(beta))
    throw Error(ErrorKind::NoNonzeroSolution,
                "Nm(alpha) = " + format_scalar(norm(alpha)) +
                    " differs from Nm(beta) = " + format_scalar(norm(beta)));
  std::vector<Scalar> g(f);
  g[0] = gamma0;
  for (std::size_t i = 0; i + 1 < f; ++i) g[i + 1] = g[i] * alpha[i] / beta[i];
  return TauVector(std::move(g));
}

std::vector<EligiblePosition> admissible_positions(const FrobeniusData& fro) {
  std::vector<EligiblePosition> out;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) {
      if (r == c) continue;
      Position pos{r, c};
      if (!eligible(fro, pos)) continue;
      out.push_back({pos, std::string("Nm(") + kEigenNames[c - 1] + ") = p^f Nm(" +
                              kEigenNames[r - 1] + ")"});
    }
  return out;
}

TauMatrix build_monodromy(const FrobeniusData& fro, const std::map<Position, Scalar>& entries) {
  std::map<Position, Scalar> live;
  for (const auto& [pos, value] : entries) {
    if (pos.row < 1 || pos.row > 3 || pos.col < 1 || pos.col > 3 || pos.row == pos.col)
      throw Error(ErrorKind::ShapeViolation, "position " + to_string(pos) + " is not off-diagonal");
    if (!is_zero(value)) live.emplace(pos, value);
  }
  if (live.size() > 2)
    throw Error(ErrorKind::ShapeViolation, "at most two nonzero entries are allowed");
  std::set<MonodromyShape> shapes;
  for (const auto& [pos, value] : live) {
    if (live.count(Position{pos.col, pos.row}))
      throw Error(ErrorKind::ShapeViolation,
                  "entries " + to_string(pos) + " and " + to_string(Position{pos.col, pos.row}) +
                      " cannot both be nonzero");
    shapes.insert(shape_of(pos));
  }
  if (shapes.size() > 1)
    throw Error(ErrorKind::ShapeViolation, "entries mix the CycleDown and CycleUp shapes");

  const std::size_t f = fro.f();
  const Scalar p(static_cast<long>(fro.p()));
  TauMatrix a(f);
  for (const auto& [pos, value] : live) {
    if (!eligible(fro, pos))
      throw Error(ErrorKind::IneligiblePosition,
                  "position " + to_string(pos) + " needs Nm(" + kEigenNames[pos.col - 1] +
                      ") = p^f Nm(" + kEigenNames[pos.row - 1] + ")");
    a(pos.row - 1, pos.col - 1) =
        solve_entry(fro.eigen(pos.col - 1), p * fro.eigen(pos.row - 1), value);
  }
  return a;
}

MonodromyCheck validate_monodromy(const FrobeniusData& fro, const TauMatrix& a) {
  MonodromyCheck out;
  auto fail = [&](std::string why) {
    out.valid = false;
    out.reasons.push_back(std::move(why));
  };
  const std::size_t f = fro.f();
  try {
    a.check_shape();
  } catch (const Error& e) {
    fail(e.what());
    return out;
  }
  if (a.embeddings() != f) {
    fail("matrix has " + std::to_string(a.embeddings()) + " embeddings, expected " +
         std::to_string(f));
    return out;
  }

  std::set<MonodromyShape> shapes;
  int nonzero = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const TauVector& e = a(r, c);
      const std::string name = to_string(Position{r + 1, c + 1});
      if (r == c) {
        if (!e.is_zero()) fail("diagonal entry " + name + " is nonzero");
        continue;
      }
      if (e.is_zero()) continue;
      ++nonzero;
      shapes.insert(shape_of(Position{r + 1, c + 1}));
      if (!e.all_nonzero()) fail("entry " + name + " is neither zero nor nowhere zero");
      if (!a(c, r).is_zero() && r < c)
        fail("entries " + name + " and " + to_string(Position{c + 1, r + 1}) +
             " are both nonzero");
    }
  if (shapes.size() > 1) fail("nonzero entries mix the CycleDown and CycleUp shapes");
  if (nonzero > 2) fail("more than two nonzero entries");

  const TauMatrix p_mat = fro.matrix();
  const Scalar p(static_cast<long>(fro.p()));
  if (a * p_mat != p * (p_mat * frobenius_shift(a))) fail("A.P != p.P.phi(A)");
  const TauMatrix nm = matrix_norm(p_mat);
  if (a * nm != p_to_f(fro) * (nm * a)) fail("A.Nm(P) != p^f.Nm(P).A");
  if (!(a * a * a == TauMatrix(f))) fail("A^3 != 0");
  return out;
}

}  // namespace phimod
