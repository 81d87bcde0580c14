#pragma once

#include <random>
#include <set>
#include <vector>

#include "cll/core.hpp"

namespace cll_test {

using cll::CyclicPolytope;
using cll::Int;

/// Distinct sorted integers in [lo, hi]; needs hi - lo + 1 >= n.
inline std::vector<Int> random_taus(std::mt19937_64& rng, int n, long lo, long hi) {
  std::set<long> picked;
  while (static_cast<int>(picked.size()) < n)
    picked.insert(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)));
  std::vector<Int> out;
  for (long v : picked) out.push_back(Int(v));
  return out;
}

inline CyclicPolytope random_polytope(std::mt19937_64& rng, int d, int n, long span) {
  return cll::build_polytope(cll::ParameterList{d, random_taus(rng, n, -span, span)});
}

inline CyclicPolytope make(int d, std::vector<long> taus) {
  cll::ParameterList params;
  params.d = d;
  for (long t : taus) params.taus.push_back(Int(t));
  return cll::build_polytope(std::move(params));
}

inline cll::IVec ivec(std::vector<long> coords) {
  cll::IVec out;
  for (long c : coords) out.push_back(Int(c));
  return out;
}

}  // namespace cll_test
