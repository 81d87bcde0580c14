#include "cll/core.hpp"

#include <algorithm>

namespace cll {

CyclicPolytope build_polytope(ParameterList params) {
  require(params.d >= 1, ErrorKind::TooFewVertices, "dimension must be at least 1");
  int n = params.n();
  require(n >= params.d + 1, ErrorKind::TooFewVertices,
          "need at least d+1 parameters, got " + std::to_string(n));
  for (int i = 0; i + 1 < n; ++i)
    require(params.taus[i] < params.taus[i + 1], ErrorKind::NonIncreasingParameters,
            "parameters must be strictly increasing");

  CyclicPolytope p;
  p.params_ = std::move(params);
  int d = p.params_.d;
  n = p.params_.n();
  p.vertices_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    IVec& v = p.vertices_[static_cast<size_t>(i)];
    v.resize(static_cast<size_t>(d + 1));
    v[0] = 1;
    for (int k = 1; k <= d; ++k) v[static_cast<size_t>(k)] = v[static_cast<size_t>(k - 1)] * p.params_.taus[static_cast<size_t>(i)];
  }
  p.deltas_.assign(static_cast<size_t>(n), IVec(static_cast<size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.deltas_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          p.params_.taus[static_cast<size_t>(j)] - p.params_.taus[static_cast<size_t>(i)];
  return p;
}

CyclicPolytope translate_params(const CyclicPolytope& p, const Int& m) {
  ParameterList shifted{p.d(), p.params().taus};
  for (Int& t : shifted.taus) t += m;
  return build_polytope(std::move(shifted));
}

CyclicPolytope negate_params(const CyclicPolytope& p) {
  ParameterList neg{p.d(), {}};
  neg.taus.reserve(p.params().taus.size());
  for (auto it = p.params().taus.rbegin(); it != p.params().taus.rend(); ++it)
    neg.taus.push_back(-*it);
  return build_polytope(std::move(neg));
}

DeltaMatrixForm delta_matrix_form(const CyclicPolytope& p) {
  std::vector<int> order(static_cast<size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) order[static_cast<size_t>(i)] = i + 1;
  return delta_matrix_form(p, order);
}

DeltaMatrixForm delta_matrix_form(const CyclicPolytope& p, const std::vector<int>& order) {
  int d = p.d();
  int n = p.n();
  require(static_cast<int>(order.size()) == n, ErrorKind::BadSubset,
          "order must list all n vertex indices");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int idx : order) {
    require(idx >= 1 && idx <= n, ErrorKind::OutOfRange, "order index out of range");
    require(!seen[static_cast<size_t>(idx)], ErrorKind::DuplicateIndex, "repeated order index");
    seen[static_cast<size_t>(idx)] = true;
  }

  // Column j of U holds the coefficients of q_j(t) = prod_{k<=j} (t - tau_{order_k}),
  // so row i of V*U is (q_0(tau_i'), ..., q_d(tau_i')) = (1, D_1i, D_1i D_2i, ...).
  IMat u = IMat(static_cast<size_t>(d + 1), IVec(static_cast<size_t>(d + 1), Int(0)));
  IVec poly{Int(1)};  // running coefficients of q_j, low degree first
  for (int j = 0; j <= d; ++j) {
    for (int c = 0; c <= j; ++c) u[static_cast<size_t>(c)][static_cast<size_t>(j)] = poly[static_cast<size_t>(c)];
    if (j == d) break;
    const Int& root = p.tau(order[static_cast<size_t>(j)]);
    IVec next(poly.size() + 1, Int(0));
    for (size_t c = 0; c < poly.size(); ++c) {
      next[c + 1] += poly[c];
      next[c] -= poly[c] * root;
    }
    poly = std::move(next);
  }

  DeltaMatrixForm out;
  out.u.matrix = u;
  out.u.det = 1;  // unit upper triangular
  out.m.resize(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r)
    out.m[static_cast<size_t>(r)] = row_times_matrix(p.vertex(order[static_cast<size_t>(r)]), u);
  return out;
}

CyclicPolytope subsequence_polytope(const CyclicPolytope& p, const std::vector<int>& indices) {
  require(indices.size() >= 2, ErrorKind::TooFewVertices, "need at least two indices");
  ParameterList sub;
  sub.d = static_cast<int>(indices.size()) - 1;
  sub.taus.reserve(indices.size());
  for (size_t k = 0; k < indices.size(); ++k) {
    require(indices[k] >= 1 && indices[k] <= p.n(), ErrorKind::OutOfRange,
            "vertex index out of range");
    if (k > 0)
      require(indices[k] > indices[k - 1], ErrorKind::BadSubset,
              "indices must be strictly ascending");
    sub.taus.push_back(p.tau(indices[k]));
  }
  return build_polytope(std::move(sub));
}

}  // namespace cll
