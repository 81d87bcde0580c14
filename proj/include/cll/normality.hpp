#pragma once

#include <optional>
#include <vector>

#include "cll/lattice.hpp"

namespace cll {

/// A saturation gap witness: alpha lies in mP^ cap Z^{d+1} with m >= 2 but is
/// not a sum of a degree-1 lattice point and a degree-(m-1) lattice point.
struct HoleReport {
  Int m;
  IVec alpha;
};

struct DecompositionCertificate {
  IVec alpha;
  std::vector<IVec> parts;  // degree-1 lattice points summing to alpha
};

/// Re-checks a certificate from scratch (fresh facet system).
bool validate_certificate(const CyclicPolytope& p, const DecompositionCertificate& cert);

/// Re-checks a hole from scratch: alpha lies in mP^ cap Z and alpha - a falls
/// outside (m-1)P^ for every degree-1 lattice point a.
bool validate_hole(const CyclicPolytope& p, const HoleReport& hole,
                   long long budget = kDefaultBudget);

/// Subset with the Lemma guarantee: values descending, all-but-heaviest sum
/// <= 1 and total >= 1 + 1/(d+1).
struct HeavySubset {
  std::vector<int> indices;  // 1-based positions, descending by value
  QVec values;
};

struct IdpOptions {
  std::optional<Int> m_max;  // default max(2, d-1)
  long long budget = kDefaultBudget;
  int threads = 1;
};

struct IdpResult {
  bool normal = false;
  std::optional<HoleReport> hole;
  Int m_max_checked;
};

/// Graded check: for m = 2..m_max verify that every point of mP^ cap Z splits
/// as (degree 1) + (degree m-1). Degrees above d-1 split unconditionally for
/// lattice d-polytopes, so the default bound is complete. Reports the lex
/// smallest hole at the smallest failing degree.
IdpResult idp_check(const CyclicPolytope& p, const IdpOptions& options = {});

struct CoveringResult {
  bool verified = false;
  std::vector<std::vector<int>> failing_simplices;  // empty iff verified
};

/// Covering sufficient condition: every (d+1)-vertex sub-simplex normal
/// implies P normal. A failing sub-simplex is only inconclusive for P.
CoveringResult normality_via_covering(const CyclicPolytope& p, const IdpOptions& options = {});

struct MinmaxBounds {
  Rat prefix;     // sum of the j smallest
  Rat suffix;     // sum of the j largest
  Rat threshold;  // j*m/(d+1) with m the total
};

/// Prefix/suffix averaging bounds for sorted r; asserts prefix <= threshold <= suffix.
MinmaxBounds minmax_bounds(const QVec& sorted_r, int j);

/// Exhaustive search over subsets of size 2..d maximizing the value sum
/// subject to (sum - heaviest) <= 1; the maximum is >= 1 + 1/(d+1) whenever
/// the total is an integer >= 2 with all values in [0,1].
HeavySubset select_heavy_subset(const QVec& r, int d);

/// epsilon(l) = (l-1)/(d^2-1).
Rat epsilon_value(int l, int d);

/// Z_l(j): the defining alternating-denominator sum over positions j..l.
/// p_values holds p_j, ..., p_l.
Rat z_value(const CyclicPolytope& p, const std::vector<int>& indices,
            const std::vector<Int>& p_values, int j);

/// The unique integer p_j making Z_l(j) integral inside the half-open window
/// (r*M_j - C_j, r*M_j]; may be negative, the caller restarts in that case.
/// higher_p holds p_{j+1}, ..., p_l, already fixed.
Int choose_p(const CyclicPolytope& p, const std::vector<int>& indices, int j,
             const std::vector<Int>& higher_p, const Rat& r_target);

/// One round of the constructive split on a simplex with all consecutive gaps
/// >= d^2-1: returns r' with sum 1, 0 <= r' <= r componentwise, and
/// sum r'_i v_i integral. With force=true the gap hypothesis is skipped and
/// the postconditions are checked instead of guaranteed.
QVec decompose_step(const CyclicPolytope& p, const IVec& alpha, const QVec& r,
                    bool force = false);
QVec decompose_step(const CyclicPolytope& p, const IVec& alpha, bool force = false);

/// Peels one degree-1 point per round until degree 1 remains.
DecompositionCertificate full_decompose(const CyclicPolytope& p, IVec alpha,
                                        bool force = false);

/// Non-cyclic fixture support: graded check of an explicit integer simplex,
/// plus, when the lattice generated by its degree-1 points is a proper
/// sublattice, the same check relative to that sublattice. Distinguishes
/// "normal but without the integer decomposition property".
struct FixtureIdpReport {
  LatticeIndexResult index;
  bool plain_normal = false;
  std::optional<HoleReport> plain_hole;
  std::optional<bool> relative_normal;  // set iff index.finite && index > 1
  std::optional<HoleReport> relative_hole;
};

FixtureIdpReport fixture_idp_check(const std::vector<IVec>& homogenized_vertices,
                                   const std::optional<Int>& m_max = std::nullopt,
                                   long long budget = kDefaultBudget);

}  // namespace cll
