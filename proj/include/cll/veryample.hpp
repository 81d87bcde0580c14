#pragma once

#include <optional>
#include <vector>

#include "cll/facets.hpp"
#include "cll/normality.hpp"

namespace cll {

/// Generators of the vertex monoid at v_base: {x - v_base : x in P^ cap Z}.
struct ShiftedGeneratorSet {
  int base_vertex = 0;
  std::vector<IVec> vectors;
};

ShiftedGeneratorSet shifted_generators(const CyclicPolytope& p, int base_vertex,
                                       long long budget = kDefaultBudget);

enum class WitnessConstruction { Direct4D, FacetReduction };

struct FacetChainStep {
  std::vector<int> facet;     // vertex indices inside the parent instance
  std::vector<Int> sub_taus;  // parameters of the induced lower-dim instance
};

struct KCheck {
  int k = 0;
  Int degree;             // degree of k*v_base + p
  bool in_cone = false;   // all oriented facet forms nonnegative
  bool hole = false;      // in cone, integral, yet not a degree-many sum
};

/// Machine-checked non-very-ampleness evidence. The checks cover k = 1..k_max
/// only; the construction argues all k, but the report states exactly what was
/// verified. The instance fields name the polytope the checks ran on (after
/// an optional parameter negation and/or facet reduction).
struct WitnessFamily {
  IVec p;
  int base_vertex = 0;
  bool negated = false;
  int instance_d = 0;
  std::vector<Int> instance_taus;
  QVec coefficients;               // exact coefficients of p over v_1..v_5
  std::vector<int> violated_facet; // a facet with oriented sigma(p) < 0
  std::vector<KCheck> checks;
  std::vector<int> verified_k;
  WitnessConstruction construction = WitnessConstruction::Direct4D;
  std::vector<FacetChainStep> chain;  // outermost reduction first
};

/// p = b_23 + b_134 + b_12345 for d = 4, Delta_23 = 1; also validates the
/// closed-form coefficient expressions and that the v_3 coefficient < -1.
IVec build_witness_p(const CyclicPolytope& p);

/// Confirms the witness: (a) nonnegative on every facet through base_vertex,
/// (b) negative beyond some facet missing it, (c) for k = 1..k_max the point
/// k*v_base + p admits no decomposition into degree-many elements of
/// P^ cap Z^{d+1} (complete graded multiset search). Throws WitnessRefuted on
/// any failure.
WitnessFamily verify_witness(const CyclicPolytope& p, const IVec& witness,
                             int base_vertex, int k_max,
                             long long budget = kDefaultBudget);

/// The facet as a standalone (d-1)-dimensional cyclic polytope on the
/// parameter subsequence.
CyclicPolytope facet_subpolytope(const CyclicPolytope& p, const FacetSet& s);

/// Theorem dispatch: d = 4 builds the direct witness when Delta_23 = 1 (or,
/// after negation, Delta_{n-2,n-1} = 1); d >= 5 reduces along the facet
/// family to a 4-dimensional witness when some interior gap is 1. Returns
/// nothing when no hypothesis matches; that is not a very-ampleness proof.
std::optional<WitnessFamily> very_ample_obstruction(const CyclicPolytope& p,
                                                    int k_max = 3,
                                                    long long budget = kDefaultBudget);

struct CertifyResult {
  bool certified = false;
  Int bound;                 // the degree bound that was exhausted
  std::optional<IVec> hole;  // shifted coordinates z = y - t*v_base
  Int hole_level;            // t for the hole, when present
};

/// Bounded saturation evidence for the vertex monoid at v_base: every lattice
/// point of the degree-<=B slice of its cone must be a generator sum. The
/// degree-t slice of the shifted cone is t*P^ - t*v_base, so the scan is the
/// graded decomposition check of P reported in shifted coordinates.
CertifyResult vertex_local_certify(const CyclicPolytope& p, int base_vertex,
                                   const Int& degree_bound,
                                   long long budget = kDefaultBudget,
                                   int threads = 1);

/// Re-derives every claim of a WitnessFamily from scratch against the
/// original instance: replays the reduction chain, rebuilds facet systems,
/// and reruns the graded searches.
bool validate_witness_family(const CyclicPolytope& p, const WitnessFamily& w,
                             long long budget = kDefaultBudget);

}  // namespace cll
