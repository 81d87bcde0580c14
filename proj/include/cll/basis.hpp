#pragma once

#include <vector>

#include "cll/core.hpp"

namespace cll {

/// b_S = sum_{i in S} v_i / prod_{j in S\{i}} Delta_ij. Always integral; zero
/// once #S >= d+2. Degree coordinate is 1 for #S = 1 and 0 otherwise.
struct BVector {
  std::vector<int> index_set;  // sorted
  IVec value;
};

struct LatticeBasis {
  std::vector<IVec> vectors;
  std::vector<int> provenance;  // the index order i_1, ..., i_{d+1}
  Int det;                      // +1 or -1
};

/// Direct evaluation of the defining sum; independent of the input order of S.
BVector b_vector(const CyclicPolytope& p, std::vector<int> s);

/// Recursion b_S = b_{S\{a}}/Delta_ba + b_{S\{b}}/Delta_ab; must agree with
/// the direct formula.
BVector b_vector_recursive(const CyclicPolytope& p, std::vector<int> s, int a, int b);

/// b_{i_1}, b_{i_1 i_2}, ..., b_{i_1 ... i_{d+1}}: a Z-basis of Z^{d+1}.
LatticeBasis z_basis(const CyclicPolytope& p, const std::vector<int>& order);

/// c_j = sum_{l=j}^{d+1} b_{i_l ... i_{d+1}}: a Z-basis whose members lie in P*.
LatticeBasis c_basis(const CyclicPolytope& p, const std::vector<int>& order);

/// Integer coordinates of x in the z_basis for `order`, by peeling the last
/// coefficient with sigma over the first d order indices and recursing.
IVec z_basis_coordinates(const CyclicPolytope& p, const std::vector<int>& order, const IVec& x);

/// Rational variant used when x is not a lattice point.
QVec z_basis_coordinates(const CyclicPolytope& p, const std::vector<int>& order, const QVec& x);

struct LatticeIndexResult {
  bool finite = false;
  Int index = 0;  // meaningful when finite
};

/// Index in Z^{N+1} of the subgroup generated by the points (rows), via
/// fraction-free integer row elimination. Infinite when rank < N+1.
LatticeIndexResult lattice_index(const std::vector<IVec>& points);

/// Row-echelon basis of the subgroup generated by integer vectors, supporting
/// membership tests. Backs lattice_index and the lattice-relative checks.
class RowLattice {
 public:
  explicit RowLattice(const std::vector<IVec>& points);

  bool full_rank() const { return pivot_cols_.size() == dim_; }
  size_t rank() const { return pivot_cols_.size(); }
  Int index_in_ambient() const;  // product of pivots when full rank
  bool member(IVec x) const;

 private:
  size_t dim_ = 0;
  IMat rows_;                       // echelon rows, one per pivot
  std::vector<size_t> pivot_cols_;  // ascending
};

}  // namespace cll
