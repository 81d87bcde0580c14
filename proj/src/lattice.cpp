#include "cll/lattice.hpp"

#include <algorithm>

#include "cll/pointset.hpp"

namespace cll {

namespace {

/// Interval sweep over a simplex instance in the triangular frame of the
/// unimodular vertex-matrix reduction. Row t of the frame has entries
/// M[t][k] = prod_{j<=k} Delta_{jt} (positive for k < t, zero after), so
/// fixing integer frame coordinates y_d, ..., y_1 inside nested exact
/// intervals determines barycentric weights lambda_{d+1}, ..., lambda_2 >= 0
/// with running sum <= m. Every visited candidate is a lattice point of m*P^;
/// nothing is rejected.
class SimplexSweep {
 public:
  SimplexSweep(const CyclicPolytope& p, const Int& m, Budget& budget,
               const std::function<void(const IVec&)>& visit)
      : m_(m), budget_(budget), visit_(visit), d_(p.d()) {
    DeltaMatrixForm form = delta_matrix_form(p);
    frame_ = std::move(form.m);
    winv_ = unimodular_inverse(form.u.matrix);
    y_.assign(static_cast<size_t>(d_) + 1, Int(0));
    y_[0] = m_;
    lambda_.assign(static_cast<size_t>(d_) + 2, Rat(0));
  }

  void run() { descend(d_, Rat(0)); }

 private:
  const Int& entry(int vertex, int col) const {
    return frame_[static_cast<size_t>(vertex - 1)][static_cast<size_t>(col)];
  }

  void descend(int k, const Rat& mass) {
    Rat base(0);
    for (int i = k + 2; i <= d_ + 1; ++i)
      if (lambda_[static_cast<size_t>(i)] != 0)
        base += lambda_[static_cast<size_t>(i)] * Rat(entry(i, k));
    const Int& step = entry(k + 1, k);
    Rat top = base + (Rat(m_) - mass) * Rat(step);
    Int lo = ceil_rat(base);
    Int hi = floor_rat(top);
    if (hi < lo) {
      budget_.charge(1);
      return;
    }

    Int count = hi - lo + 1;
    if (!fits_int64(count))
      budget_.charge(budget_.limit() + 1);  // forces the guard
    budget_.charge(count.get_si());

    if (k == 1) {
      y_[1] = lo;
      IVec x = row_times_matrix(y_, winv_);
      const IVec& inc = winv_[1];
      for (Int y1 = lo;; ++y1) {
        visit_(x);
        if (y1 == hi) break;
        for (size_t c = 0; c < x.size(); ++c) x[c] += inc[c];
      }
      return;
    }

    for (Int yk = lo; yk <= hi; ++yk) {
      y_[static_cast<size_t>(k)] = yk;
      Rat l = (Rat(yk) - base) / Rat(step);
      lambda_[static_cast<size_t>(k + 1)] = l;
      descend(k - 1, mass + l);
    }
    lambda_[static_cast<size_t>(k + 1)] = 0;
  }

  Int m_;
  Budget& budget_;
  const std::function<void(const IVec&)>& visit_;
  int d_;
  IMat frame_;
  IMat winv_;
  IVec y_;
  QVec lambda_;
};

}  // namespace

BarycentricCoords barycentric(const CyclicPolytope& p,
                              const std::vector<int>& simplex_indices,
                              const IVec& x) {
  require(simplex_indices.size() == static_cast<size_t>(p.d()) + 1,
          ErrorKind::BadSubset, "need d+1 simplex vertices");
  require(x.size() == static_cast<size_t>(p.d()) + 1, ErrorKind::DimensionMismatch,
          "point has wrong length");
  std::vector<bool> seen(static_cast<size_t>(p.n()) + 1, false);
  std::vector<IVec> rows;
  for (int i : simplex_indices) {
    require(i >= 1 && i <= p.n(), ErrorKind::OutOfRange, "vertex index out of range");
    require(!seen[static_cast<size_t>(i)], ErrorKind::DuplicateIndex, "repeated vertex index");
    seen[static_cast<size_t>(i)] = true;
    rows.push_back(p.vertex(i));
  }
  BarycentricCoords out{simplex_indices, solve_combination(rows, to_qvec(x))};
  Rat total(0);
  for (const Rat& l : out.lambdas) total += l;
  require(total == Rat(x[0]), ErrorKind::GuaranteeViolated,
          "barycentric coordinates must sum to the degree");
  return out;
}

Int coordinate_bound(const CyclicPolytope& p, const Int& m) {
  Int bound = 0;
  for (const IVec& v : p.vertices())
    for (const Int& c : v) {
      Int a = abs(c);
      if (a > bound) bound = a;
    }
  return bound * m;
}

void for_each_lattice_point(const CyclicPolytope& p, const Int& m, Budget& budget,
                            const std::function<void(const IVec&)>& visit) {
  require(m >= 0, ErrorKind::OutOfRange, "dilation degree must be nonnegative");
  if (m == 0) {
    visit(IVec(static_cast<size_t>(p.d()) + 1, Int(0)));
    return;
  }
  if (p.is_simplex()) {
    SimplexSweep(p, m, budget, visit).run();
    return;
  }

  // Pulling triangulation at vertex 1: pyramids over the facets missing it.
  // Simplices overlap in faces, so collect and dedupe before visiting.
  bool packed = fits_packed(coordinate_bound(p, m));
  PointBuffer buf(static_cast<size_t>(p.d()) + 1, packed);
  std::function<void(const IVec&)> append = [&buf](const IVec& x) { buf.append(x); };
  for (const FacetSet& s : enumerate_facets(p)) {
    if (std::find(s.indices.begin(), s.indices.end(), 1) != s.indices.end()) continue;
    std::vector<int> cell{1};
    cell.insert(cell.end(), s.indices.begin(), s.indices.end());
    CyclicPolytope sub = subsequence_polytope(p, cell);
    SimplexSweep(sub, m, budget, append).run();
  }
  buf.sort_lex();
  buf.dedupe_sorted();
  for (size_t i = 0; i < buf.size(); ++i) visit(buf.get(i));
}

DilatePointSet enumerate_points(const CyclicPolytope& p, const Int& m,
                                long long budget_limit) {
  Budget budget(budget_limit);
  DilatePointSet out;
  out.m = m;
  for_each_lattice_point(p, m, budget,
                         [&out](const IVec& x) { out.points.push_back(x); });
  std::sort(out.points.begin(), out.points.end(), ivec_lex_less);
  return out;
}

IVec sample_lattice_point(const CyclicPolytope& p, const Int& m, uint64_t seed,
                          int max_attempts) {
  require(p.is_simplex(), ErrorKind::RequiresSimplex,
          "sampler needs a simplex instance (n = d+1)");
  require(m >= 1, ErrorKind::OutOfRange, "degree must be at least 1");

  FacetSystem checker(p);
  DeltaMatrixForm form = delta_matrix_form(p);
  IMat winv = unimodular_inverse(form.u.matrix);
  size_t dim = static_cast<size_t>(p.d()) + 1;
  Rng rng(seed);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Random rational point of m*P^, then its triangular-frame coordinates.
    std::vector<uint64_t> w(dim);
    uint64_t total = 0;
    for (auto& wi : w) {
      wi = rng.below(1024) + 1;
      total += wi;
    }
    QVec rho(dim, Rat(0));
    for (size_t i = 0; i < dim; ++i) {
      Rat weight(static_cast<unsigned long>(w[i]), static_cast<unsigned long>(total));
      weight.canonicalize();
      weight *= Rat(m);
      const IVec& v = p.vertex(static_cast<int>(i) + 1);
      for (size_t c = 0; c < dim; ++c) rho[c] += weight * Rat(v[c]);
    }
    QVec yq(dim, Rat(0));
    for (size_t c = 0; c < dim; ++c)
      for (size_t s = 0; s < dim; ++s)
        if (form.u.matrix[s][c] != 0) yq[c] += rho[s] * Rat(form.u.matrix[s][c]);

    IVec y(dim, Int(0));
    y[0] = m;
    for (size_t k = 1; k < dim; ++k) {
      y[k] = floor_rat(yq[k] + Rat(1, 2));
      y[k] += Int(static_cast<long>(rng.below(3)) - 1);
    }
    IVec x = row_times_matrix(y, winv);
    if (checker.contains(x)) return x;
  }
  fail(ErrorKind::SamplingExhausted,
       "no lattice point accepted after " + std::to_string(max_attempts) + " attempts");
}

VertexSimplex::VertexSimplex(std::vector<IVec> homogenized_vertices)
    : vertices_(std::move(homogenized_vertices)) {
  require(!vertices_.empty(), ErrorKind::EmptySet, "vertex list must be non-empty");
  dim_ = vertices_[0].size();
  require(vertices_.size() <= dim_, ErrorKind::DimensionMismatch,
          "more vertices than an independent simplex allows");
  for (const IVec& v : vertices_) {
    require(v.size() == dim_, ErrorKind::DimensionMismatch, "vertex length mismatch");
    require(v[0] == 1, ErrorKind::BadInput, "vertices must be homogenized at height 1");
  }
}

QVec VertexSimplex::barycentric(const IVec& x) const {
  return solve_combination(vertices_, to_qvec(x));
}

bool VertexSimplex::contains(const IVec& x) const {
  require(x.size() == dim_, ErrorKind::DimensionMismatch, "point length mismatch");
  if (x[0] < 0) return false;
  QVec lambda;
  try {
    lambda = solve_combination(vertices_, to_qvec(x));
  } catch (const Error&) {
    return false;  // outside the affine span
  }
  for (const Rat& l : lambda)
    if (l < 0) return false;
  return true;
}

void VertexSimplex::for_each_point(const Int& m, Budget& budget,
                                   const std::function<void(const IVec&)>& visit) const {
  require(m >= 0, ErrorKind::OutOfRange, "dilation degree must be nonnegative");
  if (m == 0) {
    visit(IVec(dim_, Int(0)));
    return;
  }
  std::vector<Int> lo(dim_), hi(dim_);
  for (size_t c = 1; c < dim_; ++c) {
    lo[c] = vertices_[0][c];
    hi[c] = vertices_[0][c];
    for (const IVec& v : vertices_) {
      if (v[c] < lo[c]) lo[c] = v[c];
      if (v[c] > hi[c]) hi[c] = v[c];
    }
    lo[c] *= m;
    hi[c] *= m;
  }
  IVec x(dim_);
  x[0] = m;
  for (size_t c = 1; c < dim_; ++c) x[c] = lo[c];
  while (true) {
    budget.charge(1);
    if (contains(x)) visit(x);
    size_t c = dim_ - 1;
    while (c >= 1) {
      if (x[c] < hi[c]) {
        ++x[c];
        break;
      }
      x[c] = lo[c];
      --c;
    }
    if (c == 0) break;
  }
}

}  // namespace cll
