#include "cll/facets.hpp"

#include <algorithm>

namespace cll {

namespace {

void check_subset(const CyclicPolytope& p, const FacetSet& s) {
  require(static_cast<int>(s.indices.size()) == p.d(), ErrorKind::BadSubset,
          "subset must have exactly d elements");
  for (size_t k = 0; k < s.indices.size(); ++k) {
    require(s.indices[k] >= 1 && s.indices[k] <= p.n(), ErrorKind::BadSubset,
            "subset index out of range");
    if (k > 0)
      require(s.indices[k] > s.indices[k - 1], ErrorKind::BadSubset,
              "subset must be sorted and duplicate-free");
  }
}

/// Walks d-subsets of [n] in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
  int d = static_cast<int>(idx.size());
  for (int pos = d - 1; pos >= 0; --pos) {
    if (idx[static_cast<size_t>(pos)] < n - (d - 1 - pos)) {
      ++idx[static_cast<size_t>(pos)];
      for (int q = pos + 1; q < d; ++q)
        idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_gale_even(const CyclicPolytope& p, const FacetSet& s) {
  check_subset(p, s);
  std::vector<bool> in_s(static_cast<size_t>(p.n()) + 1, false);
  for (int i : s.indices) in_s[static_cast<size_t>(i)] = true;

  // Even counts between consecutive absent indices imply them for all pairs.
  int prev_absent = 0;
  int run = 0;
  for (int i = 1; i <= p.n(); ++i) {
    if (in_s[static_cast<size_t>(i)]) {
      ++run;
      continue;
    }
    if (prev_absent != 0 && run % 2 != 0) return false;
    prev_absent = i;
    run = 0;
  }
  return true;
}

std::vector<FacetSet> enumerate_facets(const CyclicPolytope& p) {
  std::vector<FacetSet> out;
  std::vector<int> idx(static_cast<size_t>(p.d()));
  for (int k = 0; k < p.d(); ++k) idx[static_cast<size_t>(k)] = k + 1;
  do {
    FacetSet s{idx};
    if (is_gale_even(p, s)) out.push_back(std::move(s));
  } while (next_subset(idx, p.n()));
  return out;
}

LinearForm sigma_form(const CyclicPolytope& p, const FacetSet& s) {
  check_subset(p, s);
  IVec poly{Int(1)};
  for (int i : s.indices) {
    IVec next(poly.size() + 1, Int(0));
    const Int& root = p.tau(i);
    for (size_t c = 0; c < poly.size(); ++c) {
      next[c + 1] += poly[c];
      next[c] -= poly[c] * root;
    }
    poly = std::move(next);
  }
  poly.resize(static_cast<size_t>(p.d()) + 1, Int(0));
  return LinearForm{std::move(poly)};
}

Rat evaluate_sigma(const LinearForm& form, const QVec& x) {
  require(form.coeffs.size() == x.size(), ErrorKind::DimensionMismatch,
          "form and point have different lengths");
  Rat acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += Rat(form.coeffs[i]) * x[i];
  return acc;
}

Int evaluate_sigma(const LinearForm& form, const IVec& x) {
  require(form.coeffs.size() == x.size(), ErrorKind::DimensionMismatch,
          "form and point have different lengths");
  return ivec_dot(form.coeffs, x);
}

std::vector<FacetSet> brute_force_facets(const CyclicPolytope& p) {
  require(p.n() <= 12, ErrorKind::InstanceTooLarge,
          "brute-force facet scan is guarded to n <= 12");
  std::vector<FacetSet> out;
  std::vector<int> idx(static_cast<size_t>(p.d()));
  for (int k = 0; k < p.d(); ++k) idx[static_cast<size_t>(k)] = k + 1;
  do {
    FacetSet s{idx};
    LinearForm form = sigma_form(p, s);
    int seen_sign = 0;
    bool supporting = true;
    for (int j = 1; j <= p.n() && supporting; ++j) {
      Int val = evaluate_sigma(form, p.vertex(j));
      int sg = sgn(val);
      if (sg == 0) continue;
      if (seen_sign == 0)
        seen_sign = sg;
      else if (sg != seen_sign)
        supporting = false;
    }
    if (supporting && seen_sign != 0) out.push_back(std::move(s));
  } while (next_subset(idx, p.n()));
  return out;
}

FacetSystem::FacetSystem(const CyclicPolytope& p)
    : dim_plus_1_(static_cast<size_t>(p.d()) + 1) {
  for (FacetSet& s : enumerate_facets(p)) {
    LinearForm form = sigma_form(p, s);
    int sign = 0;
    for (int j = 1; j <= p.n() && sign == 0; ++j)
      sign = sgn(evaluate_sigma(form, p.vertex(j)));
    // A facet misses at least one vertex and sigma is nonzero there.
    require(sign != 0, ErrorKind::IntegralityViolation, "degenerate facet form");
    if (sign < 0)
      for (Int& c : form.coeffs) c = -c;
    facets_.push_back(OrientedFacet{std::move(s), std::move(form), sign});
  }
}

Int FacetSystem::evaluate(size_t k, const IVec& x) const {
  return ivec_dot(facets_[k].form.coeffs, x);
}

bool FacetSystem::contains(const IVec& x) const {
  require(x.size() == dim_plus_1_, ErrorKind::DimensionMismatch,
          "point has wrong length");
  if (x[0] < 0) return false;
  for (const OrientedFacet& f : facets_)
    if (ivec_dot(f.form.coeffs, x) < 0) return false;
  return true;
}

bool contains(const CyclicPolytope& p, const IVec& x) {
  return FacetSystem(p).contains(x);
}

}  // namespace cll
