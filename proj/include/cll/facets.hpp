#pragma once

#include <vector>

#include "cll/core.hpp"

namespace cll {

/// Sorted d-subset of [n] spanning a supporting hyperplane.
struct FacetSet {
  std::vector<int> indices;

  bool operator==(const FacetSet& other) const { return indices == other.indices; }
  bool operator<(const FacetSet& other) const { return indices < other.indices; }
};

/// Coefficients of sigma_S: c_{S,0..d} with sum c_i t^i = prod_{i in S} (t - tau_i).
/// The polynomial is monic; the form's sign on the polytope depends on S.
struct LinearForm {
  IVec coeffs;
};

bool is_gale_even(const CyclicPolytope& p, const FacetSet& s);

/// All Gale-even d-subsets in lexicographic order.
std::vector<FacetSet> enumerate_facets(const CyclicPolytope& p);

/// sigma_S for any d-subset S (facet or not).
LinearForm sigma_form(const CyclicPolytope& p, const FacetSet& s);

Rat evaluate_sigma(const LinearForm& form, const QVec& x);
Int evaluate_sigma(const LinearForm& form, const IVec& x);

/// Exhaustive oracle: d-subsets whose sigma is single-signed over the vertices,
/// sign-normalized to be >= 0 on the polytope. Guarded to n <= 12.
std::vector<FacetSet> brute_force_facets(const CyclicPolytope& p);

/// Facets with inner-oriented forms: each form is sigma_S or -sigma_S, chosen
/// so it is nonnegative on P*. The monic sigma_S itself takes a uniform sign
/// over the vertices off a facet, but that sign is not always +1.
struct OrientedFacet {
  FacetSet set;
  LinearForm form;  // oriented
  int sign;         // oriented form = sign * monic sigma_S
};

class FacetSystem {
 public:
  explicit FacetSystem(const CyclicPolytope& p);

  const std::vector<OrientedFacet>& facets() const { return facets_; }

  /// x in x0*P*  (equivalently x in cone(A_P)): all oriented forms >= 0.
  /// Requires x[0] >= 0.
  bool contains(const IVec& x) const;

  /// Oriented evaluation of facet k on x.
  Int evaluate(size_t k, const IVec& x) const;

 private:
  size_t dim_plus_1_;
  std::vector<OrientedFacet> facets_;
};

/// One-shot membership test; builds the facet system internally.
/// Tests x in mP* for m = x[0] >= 0, i.e. cone membership.
bool contains(const CyclicPolytope& p, const IVec& x);

}  // namespace cll
