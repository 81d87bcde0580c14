#include "cll/basis.hpp"

#include <algorithm>

#include "cll/facets.hpp"

namespace cll {

namespace {

std::vector<int> normalize_set(const CyclicPolytope& p, std::vector<int> s) {
  require(!s.empty(), ErrorKind::EmptySet, "index set must be non-empty");
  std::sort(s.begin(), s.end());
  for (size_t k = 0; k < s.size(); ++k) {
    require(s[k] >= 1 && s[k] <= p.n(), ErrorKind::OutOfRange, "index out of range");
    if (k > 0) require(s[k] != s[k - 1], ErrorKind::DuplicateIndex, "repeated index");
  }
  return s;
}

QVec b_vector_rational(const CyclicPolytope& p, const std::vector<int>& s) {
  QVec acc(static_cast<size_t>(p.d()) + 1, Rat(0));
  for (int i : s) {
    Int denom = 1;
    for (int j : s)
      if (j != i) denom *= p.delta(i, j);
    Rat w = Rat(1) / Rat(denom);
    const IVec& v = p.vertex(i);
    for (size_t c = 0; c < acc.size(); ++c) acc[c] += w * Rat(v[c]);
  }
  return acc;
}

/// Monic polynomial form with roots {tau_i : i in indices}, padded to length d+1.
LinearForm monic_form(const CyclicPolytope& p, const std::vector<int>& indices) {
  IVec poly{Int(1)};
  for (int i : indices) {
    IVec next(poly.size() + 1, Int(0));
    const Int& root = p.tau(i);
    for (size_t c = 0; c < poly.size(); ++c) {
      next[c + 1] += poly[c];
      next[c] -= poly[c] * root;
    }
    poly = std::move(next);
  }
  require(poly.size() <= static_cast<size_t>(p.d()) + 1, ErrorKind::BadSubset,
          "too many roots for the ambient degree");
  poly.resize(static_cast<size_t>(p.d()) + 1, Int(0));
  return LinearForm{std::move(poly)};
}

std::vector<int> check_order(const CyclicPolytope& p, const std::vector<int>& order) {
  require(order.size() == static_cast<size_t>(p.d()) + 1, ErrorKind::BadSubset,
          "order must have d+1 indices");
  std::vector<bool> seen(static_cast<size_t>(p.n()) + 1, false);
  for (int i : order) {
    require(i >= 1 && i <= p.n(), ErrorKind::OutOfRange, "order index out of range");
    require(!seen[static_cast<size_t>(i)], ErrorKind::DuplicateIndex, "repeated order index");
    seen[static_cast<size_t>(i)] = true;
  }
  return order;
}

}  // namespace

BVector b_vector(const CyclicPolytope& p, std::vector<int> s) {
  s = normalize_set(p, std::move(s));
  QVec value = b_vector_rational(p, s);
  return BVector{std::move(s), qvec_to_ivec(value, "b_S must be integral")};
}

BVector b_vector_recursive(const CyclicPolytope& p, std::vector<int> s, int a, int b) {
  s = normalize_set(p, std::move(s));
  require(s.size() >= 2, ErrorKind::BadSubset, "recursion needs #S >= 2");
  require(a != b, ErrorKind::BadPivot, "pivots must differ");
  bool has_a = std::binary_search(s.begin(), s.end(), a);
  bool has_b = std::binary_search(s.begin(), s.end(), b);
  require(has_a && has_b, ErrorKind::BadPivot, "pivots must belong to S");

  std::vector<int> without_a, without_b;
  for (int i : s) {
    if (i != a) without_a.push_back(i);
    if (i != b) without_b.push_back(i);
  }
  QVec va = b_vector_rational(p, without_a);
  QVec vb = b_vector_rational(p, without_b);
  Rat inv_ba = Rat(1) / Rat(p.delta(b, a));
  Rat inv_ab = Rat(1) / Rat(p.delta(a, b));
  QVec acc(va.size());
  for (size_t c = 0; c < acc.size(); ++c) acc[c] = inv_ba * va[c] + inv_ab * vb[c];
  return BVector{std::move(s), qvec_to_ivec(acc, "recursion must yield an integer vector")};
}

LatticeBasis z_basis(const CyclicPolytope& p, const std::vector<int>& order) {
  check_order(p, order);
  LatticeBasis out;
  out.provenance = order;
  std::vector<int> prefix;
  for (int i : order) {
    prefix.push_back(i);
    out.vectors.push_back(b_vector(p, prefix).value);
  }
  out.det = determinant(out.vectors);
  require(out.det == 1 || out.det == -1, ErrorKind::GuaranteeViolated,
          "z-basis determinant must be +-1");
  return out;
}

LatticeBasis c_basis(const CyclicPolytope& p, const std::vector<int>& order) {
  check_order(p, order);
  size_t count = order.size();
  std::vector<IVec> suffix_b(count);
  for (size_t l = 0; l < count; ++l)
    suffix_b[l] = b_vector(p, std::vector<int>(order.begin() + static_cast<long>(l), order.end())).value;

  LatticeBasis out;
  out.provenance = order;
  out.vectors.assign(count, IVec());
  IVec running(static_cast<size_t>(p.d()) + 1, Int(0));
  for (size_t j = count; j-- > 0;) {
    running = ivec_add(running, suffix_b[j]);
    out.vectors[j] = running;
  }
  out.det = determinant(out.vectors);
  require(out.det == 1 || out.det == -1, ErrorKind::GuaranteeViolated,
          "c-basis determinant must be +-1");

  // Each c_j is a convex combination of the chosen vertices. The sign
  // argument behind this needs the suffix elements to grow, so it is
  // asserted for ascending orders only; other orders still give a basis.
  if (std::is_sorted(order.begin(), order.end())) {
    std::vector<IVec> simplex_rows;
    for (int i : order) simplex_rows.push_back(p.vertex(i));
    for (const IVec& c : out.vectors) {
      require(c[0] == 1, ErrorKind::GuaranteeViolated, "c_j must have degree 1");
      QVec lambda = solve_combination(simplex_rows, to_qvec(c));
      for (const Rat& l : lambda)
        require(l >= 0, ErrorKind::GuaranteeViolated, "c_j must lie in the simplex");
    }
  }
  return out;
}

QVec z_basis_coordinates(const CyclicPolytope& p, const std::vector<int>& order, const QVec& x) {
  check_order(p, order);
  require(x.size() == static_cast<size_t>(p.d()) + 1, ErrorKind::DimensionMismatch,
          "point has wrong length");
  LatticeBasis basis = z_basis(p, order);
  size_t count = order.size();
  QVec coords(count, Rat(0));
  QVec rest = x;
  // Peel from the top: sigma over the first t-1 order indices kills every
  // earlier basis vector and evaluates to (-1)^(t-1) on b_{i_1...i_t}.
  for (size_t t = count; t >= 2; --t) {
    std::vector<int> head(order.begin(), order.begin() + static_cast<long>(t - 1));
    LinearForm form = monic_form(p, head);
    Rat val = evaluate_sigma(form, rest);
    if (t % 2 == 0) val = -val;  // (-1)^(t-1)
    coords[t - 1] = val;
    const IVec& bt = basis.vectors[t - 1];
    for (size_t c = 0; c < rest.size(); ++c) rest[c] -= val * Rat(bt[c]);
  }
  coords[0] = rest[0];
  const IVec& v1 = p.vertex(order[0]);
  for (size_t c = 0; c < rest.size(); ++c)
    require(rest[c] == coords[0] * Rat(v1[c]), ErrorKind::GuaranteeViolated,
            "z-basis peel did not close");
  return coords;
}

IVec z_basis_coordinates(const CyclicPolytope& p, const std::vector<int>& order, const IVec& x) {
  QVec coords = z_basis_coordinates(p, order, to_qvec(x));
  return qvec_to_ivec(coords, "lattice point must have integer z-basis coordinates");
}

RowLattice::RowLattice(const std::vector<IVec>& points) {
  require(!points.empty(), ErrorKind::EmptySet, "need at least one generator");
  dim_ = points[0].size();
  for (const IVec& pt : points)
    require(pt.size() == dim_, ErrorKind::DimensionMismatch, "generator length mismatch");

  IMat work = points;
  size_t r = 0;
  for (size_t col = 0; col < dim_ && r < work.size(); ++col) {
    // Gcd-out the column below row r via repeated floor-division reduction.
    while (true) {
      size_t best = work.size();
      for (size_t i = r; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        if (best == work.size() ||
            cmp(abs(work[i][col]), abs(work[best][col])) < 0)
          best = i;
      }
      if (best == work.size()) break;
      std::swap(work[r], work[best]);
      bool clean = true;
      for (size_t i = r + 1; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), work[i][col].get_mpz_t(), work[r][col].get_mpz_t());
        for (size_t c = col; c < dim_; ++c) work[i][c] -= q * work[r][c];
        if (work[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < work.size() && work[r][col] != 0) {
      if (work[r][col] < 0)
        for (size_t c = col; c < dim_; ++c) work[r][c] = -work[r][c];
      rows_.push_back(work[r]);
      pivot_cols_.push_back(col);
      ++r;
    }
  }
}

Int RowLattice::index_in_ambient() const {
  require(full_rank(), ErrorKind::DimensionMismatch,
          "subgroup has infinite index (rank deficient)");
  Int out = 1;
  for (size_t k = 0; k < rows_.size(); ++k) out *= rows_[k][pivot_cols_[k]];
  return out;
}

bool RowLattice::member(IVec x) const {
  require(x.size() == dim_, ErrorKind::DimensionMismatch, "point length mismatch");
  for (size_t k = 0; k < rows_.size(); ++k) {
    size_t col = pivot_cols_[k];
    if (x[col] == 0) continue;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x[col].get_mpz_t(),
                rows_[k][col].get_mpz_t());
    if (rem != 0) return false;
    for (size_t c = col; c < dim_; ++c) x[c] -= q * rows_[k][c];
  }
  return ivec_is_zero(x);
}

LatticeIndexResult lattice_index(const std::vector<IVec>& points) {
  RowLattice lat(points);
  if (!lat.full_rank()) return LatticeIndexResult{false, 0};
  return LatticeIndexResult{true, lat.index_in_ambient()};
}

}  // namespace cll
