#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cll/basis.hpp"
#include "cll/core.hpp"
#include "cll/facets.hpp"

namespace cll {

/// Unique rational coefficients of a point over d+1 chosen vertices.
struct BarycentricCoords {
  std::vector<int> simplex_indices;
  QVec lambdas;
};

BarycentricCoords barycentric(const CyclicPolytope& p,
                              const std::vector<int>& simplex_indices,
                              const IVec& x);

/// All of m*P^ cap Z^{d+1}, sorted lex, duplicate-free.
struct DilatePointSet {
  Int m;
  std::vector<IVec> points;
};

/// Per-coordinate bound of |x_k| over m*P^ (attained at vertices).
Int coordinate_bound(const CyclicPolytope& p, const Int& m);

/// Streams every lattice point of m*P^ exactly once. For a simplex the walk
/// is a triangular-frame interval sweep with no rejected candidates; for
/// n > d+1 the pulling triangulation at vertex 1 is enumerated and deduped
/// before visiting. Charges one budget unit per candidate.
void for_each_lattice_point(const CyclicPolytope& p, const Int& m, Budget& budget,
                            const std::function<void(const IVec&)>& visit);

DilatePointSet enumerate_points(const CyclicPolytope& p, const Int& m,
                                long long budget = kDefaultBudget);

/// Seeded pseudo-random point of m*P^ cap Z^{d+1} for a simplex instance:
/// a random interior rational point is expressed in the unimodular triangular
/// frame, rounded with jitter, and accepted or rejected by the facet test.
/// Not uniform; deterministic for a fixed seed.
IVec sample_lattice_point(const CyclicPolytope& p, const Int& m, uint64_t seed,
                          int max_attempts = 256);

/// Explicit integer vertex list of a simplex (affinely independent homogenized
/// rows). Backs the non-cyclic fixtures in the normality checks.
class VertexSimplex {
 public:
  explicit VertexSimplex(std::vector<IVec> homogenized_vertices);

  size_t ambient() const { return dim_; }  // N+1
  const std::vector<IVec>& vertices() const { return vertices_; }

  QVec barycentric(const IVec& x) const;
  /// x in x0 * simplex: all barycentric coordinates nonnegative.
  bool contains(const IVec& x) const;
  /// Bounding-box scan; exact membership test per candidate.
  void for_each_point(const Int& m, Budget& budget,
                      const std::function<void(const IVec&)>& visit) const;

 private:
  size_t dim_;
  std::vector<IVec> vertices_;
};

}  // namespace cll
