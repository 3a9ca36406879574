#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "phimod/phimodule.hpp"

namespace phimod::test {

inline Scalar q(const std::string& s) { return parse_scalar(s); }

inline TauVector tv(std::initializer_list<const char*> coords) {
  std::vector<Scalar> v;
  for (const char* c : coords) v.push_back(parse_scalar(c));
  return TauVector(std::move(v));
}

inline Scalar pow_p(long p, int e) {
  Scalar r(1);
  for (int k = 0; k < e; ++k) r *= p;
  return r;
}

/// f = 1 module with eigenvalues p^va * 1, p^vb * 2, p^vc * 4 (distinct norms
/// even when valuations agree).
inline PhiModule single(long p, int va, int vb, int vc, EmbeddingFiltration filt) {
  FrobeniusData fro(p, TauVector({pow_p(p, va)}), TauVector({pow_p(p, vb) * 2}),
                    TauVector({pow_p(p, vc) * 4}));
  return PhiModule(std::move(fro), {std::move(filt)});
}

}  // namespace phimod::test
