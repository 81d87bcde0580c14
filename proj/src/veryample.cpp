#include "cll/veryample.hpp"

#include <algorithm>

#include "cll/basis.hpp"
#include "cll/pointset.hpp"

namespace cll {

namespace {

Int max_abs_coord(const IVec& v) {
  Int out = 0;
  for (const Int& c : v) {
    Int a = abs(c);
    if (a > out) out = a;
  }
  return out;
}

/// Complete search for a representation of q as a sum of exactly q[0]
/// degree-1 lattice points. Partial remainders are pruned by the facet
/// inequalities; the two-term tail is a straight membership sweep.
class GradedSearcher {
 public:
  GradedSearcher(const CyclicPolytope& p, const FacetSystem& checker,
                 Budget& budget, bool packed)
      : checker_(checker),
        budget_(budget),
        stride_(static_cast<size_t>(p.d()) + 1),
        gens_(stride_, packed),
        gen_set_(stride_, packed) {
    for_each_lattice_point(p, 1, budget, [this](const IVec& x) {
      gens_.append(x);
      gen_set_.insert(x);
    });
    gens_.sort_lex();
  }

  size_t generator_count() const { return gens_.size(); }

  IVec generator(size_t g) const { return gens_.get(g); }

  bool decomposable(const IVec& q) {
    if (!checker_.contains(q)) return false;
    const Int& deg = q[0];
    if (deg == 0) return ivec_is_zero(q);
    require(fits_int64(deg), ErrorKind::InstanceTooLarge, "degree too large to search");
    return dfs(q, deg.get_si(), 0);
  }

 private:
  bool dfs(const IVec& rem, long count, size_t start) {
    budget_.charge(1);
    if (count == 1) return gen_set_.contains(rem);
    if (count == 2) return pair_split(rem, start);
    for (size_t g = start; g < gens_.size(); ++g) {
      IVec next = ivec_sub(rem, gens_.get(g));
      if (!checker_.contains(next)) continue;
      if (dfs(next, count - 1, g)) return true;
    }
    return false;
  }

  bool pair_split(const IVec& rem, size_t start) {
    if (gens_.packed()) {
      std::vector<int64_t> base(stride_), diff(stride_);
      pack_row(rem, base.data());
      for (size_t g = start; g < gens_.size(); ++g) {
        budget_.charge(1);
        const int64_t* a = gens_.row(g);
        for (size_t c = 0; c < stride_; ++c) diff[c] = base[c] - a[c];
        if (gen_set_.contains_packed(diff.data())) return true;
      }
      return false;
    }
    for (size_t g = start; g < gens_.size(); ++g) {
      budget_.charge(1);
      if (gen_set_.contains(ivec_sub(rem, gens_.get(g)))) return true;
    }
    return false;
  }

  const FacetSystem& checker_;
  Budget& budget_;
  size_t stride_;
  PointBuffer gens_;
  PointSet gen_set_;
};

}  // namespace

ShiftedGeneratorSet shifted_generators(const CyclicPolytope& p, int base_vertex,
                                       long long budget_limit) {
  require(base_vertex >= 1 && base_vertex <= p.n(), ErrorKind::OutOfRange,
          "base vertex out of range");
  Budget budget(budget_limit);
  ShiftedGeneratorSet out;
  out.base_vertex = base_vertex;
  const IVec& base = p.vertex(base_vertex);
  for_each_lattice_point(p, 1, budget, [&](const IVec& x) {
    out.vectors.push_back(ivec_sub(x, base));
  });
  std::sort(out.vectors.begin(), out.vectors.end(), ivec_lex_less);
  return out;
}

IVec build_witness_p(const CyclicPolytope& p) {
  require(p.d() == 4, ErrorKind::HypothesisViolated, "construction needs d = 4");
  require(p.n() >= 5, ErrorKind::TooFewVertices, "construction needs n >= 5");
  require(p.delta(2, 3) == 1, ErrorKind::HypothesisViolated,
          "construction needs Delta_23 = 1 (negate the instance for the mirror case)");

  IVec witness = ivec_add(ivec_add(b_vector(p, {2, 3}).value, b_vector(p, {1, 3, 4}).value),
                          b_vector(p, {1, 2, 3, 4, 5}).value);

  // Closed-form coefficients over v_1..v_5; the b-vector sum must match.
  auto D = [&p](int i, int j) { return Rat(p.delta(i, j)); };
  QVec coeff(5);
  coeff[0] = (D(1, 2) * D(1, 5) + 1) / (D(1, 2) * D(1, 3) * D(1, 4) * D(1, 5));
  coeff[1] = (1 - 1 / (D(1, 2) * D(2, 4) * D(2, 5))) / D(2, 3);
  coeff[2] = -(1 + (D(2, 3) * D(3, 5) - 1) / (D(1, 3) * D(3, 4) * D(3, 5))) / D(2, 3);
  coeff[3] = (D(2, 4) * D(4, 5) - 1) / (D(1, 4) * D(2, 4) * D(3, 4) * D(4, 5));
  coeff[4] = 1 / (D(1, 5) * D(2, 5) * D(3, 5) * D(4, 5));

  Rat coeff_total(0);
  QVec recombined(witness.size(), Rat(0));
  for (int i = 0; i < 5; ++i) {
    coeff_total += coeff[static_cast<size_t>(i)];
    const IVec& v = p.vertex(i + 1);
    for (size_t c = 0; c < recombined.size(); ++c)
      recombined[c] += coeff[static_cast<size_t>(i)] * Rat(v[c]);
  }
  require(coeff_total == 0, ErrorKind::GuaranteeViolated,
          "witness coefficients must sum to zero");
  for (size_t c = 0; c < recombined.size(); ++c)
    require(recombined[c] == Rat(witness[c]), ErrorKind::GuaranteeViolated,
            "closed form disagrees with the b-vector sum");
  require(coeff[2] < -1, ErrorKind::GuaranteeViolated,
          "v_3 coefficient must drop below -1");
  require(witness[0] == 0, ErrorKind::GuaranteeViolated,
          "witness must have degree 0");
  return witness;
}

WitnessFamily verify_witness(const CyclicPolytope& p, const IVec& witness,
                             int base_vertex, int k_max, long long budget_limit) {
  require(base_vertex >= 1 && base_vertex <= p.n(), ErrorKind::OutOfRange,
          "base vertex out of range");
  require(witness.size() == static_cast<size_t>(p.d()) + 1,
          ErrorKind::DimensionMismatch, "witness has wrong length");
  require(k_max >= 1, ErrorKind::OutOfRange, "k_max must be at least 1");

  WitnessFamily w;
  w.p = witness;
  w.base_vertex = base_vertex;
  w.instance_d = p.d();
  w.instance_taus = p.params().taus;

  FacetSystem fs(p);
  for (const OrientedFacet& f : fs.facets()) {
    bool through_base = std::find(f.set.indices.begin(), f.set.indices.end(),
                                  base_vertex) != f.set.indices.end();
    Int val = ivec_dot(f.form.coeffs, witness);
    if (through_base)
      require(val >= 0, ErrorKind::WitnessRefuted,
              "witness leaves the vertex cone at a facet through the base");
    else if (val < 0 && w.violated_facet.empty())
      w.violated_facet = f.set.indices;
  }
  require(!w.violated_facet.empty(), ErrorKind::WitnessRefuted,
          "witness lies inside the full cone; it cannot be a hole seed");

  if (p.d() == 4 && p.n() >= 5) {
    std::vector<IVec> rows;
    for (int i = 1; i <= 5; ++i) rows.push_back(p.vertex(i));
    w.coefficients = solve_combination(rows, to_qvec(witness));
  }

  Int pack_bound =
      coordinate_bound(p, Int(2 * k_max + 2)) + max_abs_coord(witness);
  Budget budget(budget_limit);
  GradedSearcher searcher(p, fs, budget, fits_packed(pack_bound));

  const IVec& base = p.vertex(base_vertex);
  IVec q = witness;
  for (int k = 1; k <= k_max; ++k) {
    q = ivec_add(q, base);
    KCheck check;
    check.k = k;
    check.degree = q[0];
    check.in_cone = fs.contains(q);
    if (check.in_cone) {
      require(q[0] >= 1, ErrorKind::WitnessRefuted,
              "cone point of degree < 1 cannot be graded-checked");
      require(!searcher.decomposable(q), ErrorKind::WitnessRefuted,
              "k*v_base + p decomposed into degree-1 points");
      check.hole = true;
    }
    w.checks.push_back(check);
    w.verified_k.push_back(k);
  }
  return w;
}

CyclicPolytope facet_subpolytope(const CyclicPolytope& p, const FacetSet& s) {
  require(is_gale_even(p, s), ErrorKind::NotAFacet,
          "index set fails Gale's evenness condition");
  return subsequence_polytope(p, s.indices);
}

std::optional<WitnessFamily> very_ample_obstruction(const CyclicPolytope& p,
                                                    int k_max,
                                                    long long budget_limit) {
  int d = p.d();
  int n = p.n();
  require(d >= 4, ErrorKind::HypothesisViolated, "obstruction search needs d >= 4");

  if (d == 4) {
    if (p.delta(2, 3) == 1) {
      WitnessFamily w = verify_witness(p, build_witness_p(p), 3, k_max, budget_limit);
      w.construction = WitnessConstruction::Direct4D;
      return w;
    }
    if (p.delta(n - 2, n - 1) == 1) {
      CyclicPolytope mirrored = negate_params(p);
      WitnessFamily w =
          verify_witness(mirrored, build_witness_p(mirrored), 3, k_max, budget_limit);
      w.construction = WitnessConstruction::Direct4D;
      w.negated = true;
      return w;
    }
    return std::nullopt;
  }

  int gap = 0;
  for (int i = 2; i <= n - 2 && gap == 0; ++i)
    if (p.delta(i, i + 1) == 1) gap = i;
  if (gap == 0) return std::nullopt;

  // Facet family of the reduction proof, clamped so the run stays in range;
  // the unit gap lands at an interior position of the facet either way.
  int anchor = std::min(gap, n - d + 2);
  std::vector<int> facet;
  if (d % 2 == 1) {
    facet.push_back(1);
    for (int i = anchor; i <= anchor + d - 2; ++i) facet.push_back(i);
  } else {
    for (int i = anchor - 1; i <= anchor + d - 2; ++i) facet.push_back(i);
  }
  std::sort(facet.begin(), facet.end());
  FacetSet fs{facet};
  require(is_gale_even(p, fs), ErrorKind::GuaranteeViolated,
          "reduction facet must satisfy Gale evenness");

  CyclicPolytope sub = facet_subpolytope(p, fs);
  std::optional<WitnessFamily> inner = very_ample_obstruction(sub, k_max, budget_limit);
  require(inner.has_value(), ErrorKind::GuaranteeViolated,
          "reduction facet lost the unit gap");
  inner->construction = WitnessConstruction::FacetReduction;
  inner->chain.insert(inner->chain.begin(),
                      FacetChainStep{facet, sub.params().taus});
  return inner;
}

CertifyResult vertex_local_certify(const CyclicPolytope& p, int base_vertex,
                                   const Int& degree_bound, long long budget_limit,
                                   int threads) {
  require(base_vertex >= 1 && base_vertex <= p.n(), ErrorKind::OutOfRange,
          "base vertex out of range");
  require(degree_bound >= 1, ErrorKind::OutOfRange, "degree bound must be >= 1");

  CertifyResult out;
  out.bound = degree_bound;
  out.hole_level = 0;
  if (degree_bound == 1) {
    out.certified = true;  // generators generate the degree-1 slice
    return out;
  }

  IdpOptions options;
  options.m_max = degree_bound;
  options.budget = budget_limit;
  options.threads = threads;
  IdpResult idp = idp_check(p, options);
  if (idp.normal) {
    out.certified = true;
    return out;
  }
  // Degree-t slice of the shifted cone is tP^ - t*v_base; report there.
  const IVec& base = p.vertex(base_vertex);
  IVec shifted = idp.hole->alpha;
  for (size_t c = 0; c < shifted.size(); ++c) shifted[c] -= idp.hole->m * base[c];
  out.certified = false;
  out.hole = shifted;
  out.hole_level = idp.hole->m;
  return out;
}

bool validate_witness_family(const CyclicPolytope& p, const WitnessFamily& w,
                             long long budget_limit) {
  CyclicPolytope current = p;
  for (const FacetChainStep& step : w.chain) {
    FacetSet fs{step.facet};
    if (!is_gale_even(current, fs)) return false;
    CyclicPolytope sub = facet_subpolytope(current, fs);
    if (sub.params().taus != step.sub_taus) return false;
    current = std::move(sub);
  }
  if (w.negated) current = negate_params(current);
  if (current.d() != w.instance_d || current.params().taus != w.instance_taus)
    return false;
  if (w.verified_k.empty()) return false;

  int k_max = *std::max_element(w.verified_k.begin(), w.verified_k.end());
  WitnessFamily fresh;
  try {
    fresh = verify_witness(current, w.p, w.base_vertex, k_max, budget_limit);
  } catch (const Error&) {
    return false;
  }
  if (fresh.checks.size() != w.checks.size()) return false;
  for (size_t i = 0; i < fresh.checks.size(); ++i) {
    if (fresh.checks[i].k != w.checks[i].k) return false;
    if (fresh.checks[i].in_cone != w.checks[i].in_cone) return false;
    if (fresh.checks[i].hole != w.checks[i].hole) return false;
  }
  return true;
}

}  // namespace cll
