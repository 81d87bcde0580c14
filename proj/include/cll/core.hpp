#pragma once

#include <vector>

#include "cll/numeric.hpp"

namespace cll {

/// Strictly increasing integer parameters tau_1 < ... < tau_n with n >= d+1.
struct ParameterList {
  int d = 0;
  std::vector<Int> taus;

  int n() const { return static_cast<int>(taus.size()); }
};

/// Homogenized cyclic polytope C*_d(tau): vertices v_i = (1, tau_i, ..., tau_i^d)
/// together with the full difference table Delta_ij = tau_j - tau_i.
/// Immutable after construction; all indices in the public surface are 1-based.
class CyclicPolytope {
 public:
  const ParameterList& params() const { return params_; }
  int d() const { return params_.d; }
  int n() const { return params_.n(); }
  const Int& tau(int i) const { return params_.taus[static_cast<size_t>(i - 1)]; }

  /// v_i, 1-based.
  const IVec& vertex(int i) const { return vertices_[static_cast<size_t>(i - 1)]; }
  const std::vector<IVec>& vertices() const { return vertices_; }

  /// Delta_ij = tau_j - tau_i, 1-based.
  const Int& delta(int i, int j) const {
    return deltas_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }

  bool is_simplex() const { return n() == d() + 1; }

  friend CyclicPolytope build_polytope(ParameterList params);

 private:
  ParameterList params_;
  std::vector<IVec> vertices_;
  IMat deltas_;
};

struct UnimodularTransform {
  IMat matrix;
  Int det;  // +1 or -1
};

struct DeltaMatrixForm {
  IMat m;                // n rows, row i = (1, D_1i, D_1i*D_2i, ..., prod_k D_ki)
  UnimodularTransform u; // vertex_matrix * u.matrix == m
};

CyclicPolytope build_polytope(ParameterList params);

/// C_d(tau_1 + m, ..., tau_n + m); same Delta table (Lemma: differences only).
CyclicPolytope translate_params(const CyclicPolytope& p, const Int& m);

/// C_d(-tau_n, ..., -tau_1); Delta gap sequence reversed.
CyclicPolytope negate_params(const CyclicPolytope& p);

/// Triangular form of the vertex matrix under a unimodular column transform.
/// `order` selects which vertices play the roles i_1, ..., i_n; defaults to 1..n.
DeltaMatrixForm delta_matrix_form(const CyclicPolytope& p);
DeltaMatrixForm delta_matrix_form(const CyclicPolytope& p, const std::vector<int>& order);

/// The cyclic polytope on the parameter subsequence (tau_i : i in indices).
/// Indices must be distinct and ascending; dimension is #indices - 1.
CyclicPolytope subsequence_polytope(const CyclicPolytope& p, const std::vector<int>& indices);

}  // namespace cll
