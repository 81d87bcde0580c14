#include "cll/normality.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cll/pointset.hpp"

namespace cll {

namespace {

void run_chunked(size_t count, int threads,
                 const std::function<void(size_t, size_t)>& work) {
  if (threads <= 1 || count < 1024) {
    work(0, count);
    return;
  }
  size_t parts = std::min<size_t>(static_cast<size_t>(threads), count);
  std::vector<std::thread> pool;
  for (size_t t = 0; t < parts; ++t) {
    size_t begin = count * t / parts;
    size_t end = count * (t + 1) / parts;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
}

/// Index of the lex smallest point in `level` (sorted) that is not
/// generator + previous-level point; level.size() when none.
size_t find_first_hole(const PointBuffer& level, const PointBuffer& gens,
                       const PointSet& prev, int threads) {
  size_t count = level.size();
  std::atomic<size_t> best{count};

  auto note = [&best](size_t i) {
    size_t cur = best.load(std::memory_order_relaxed);
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  };

  if (level.packed()) {
    size_t stride = level.stride();
    run_chunked(count, threads, [&](size_t begin, size_t end) {
      std::vector<int64_t> diff(stride);
      for (size_t i = begin; i < end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        const int64_t* x = level.row(i);
        bool split = false;
        for (size_t g = 0; g < gens.size() && !split; ++g) {
          const int64_t* a = gens.row(g);
          for (size_t c = 0; c < stride; ++c) diff[c] = x[c] - a[c];
          split = prev.contains_packed(diff.data());
        }
        if (!split) note(i);
      }
    });
  } else {
    run_chunked(count, threads, [&](size_t begin, size_t end) {
      for (size_t i = begin; i < end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        IVec x = level.get(i);
        bool split = false;
        for (size_t g = 0; g < gens.size() && !split; ++g)
          split = prev.contains(ivec_sub(x, gens.get(g)));
        if (!split) note(i);
      }
    });
  }
  return best.load();
}

}  // namespace

bool validate_certificate(const CyclicPolytope& p, const DecompositionCertificate& cert) {
  if (cert.parts.empty()) return false;
  FacetSystem checker(p);
  IVec sum(static_cast<size_t>(p.d()) + 1, Int(0));
  for (const IVec& part : cert.parts) {
    if (part.size() != sum.size() || part[0] != 1) return false;
    if (!checker.contains(part)) return false;
    sum = ivec_add(sum, part);
  }
  return sum == cert.alpha;
}

bool validate_hole(const CyclicPolytope& p, const HoleReport& hole,
                   long long budget_limit) {
  if (hole.m < 2 || hole.alpha.size() != static_cast<size_t>(p.d()) + 1) return false;
  if (hole.alpha[0] != hole.m) return false;
  FacetSystem checker(p);
  if (!checker.contains(hole.alpha)) return false;
  Budget budget(budget_limit);
  bool splits = false;
  for_each_lattice_point(p, 1, budget, [&](const IVec& a) {
    if (!splits && checker.contains(ivec_sub(hole.alpha, a))) splits = true;
  });
  return !splits;
}

IdpResult idp_check(const CyclicPolytope& p, const IdpOptions& options) {
  Int m_max = options.m_max.value_or(Int(std::max(2, p.d() - 1)));
  require(m_max >= 2, ErrorKind::OutOfRange, "m_max must be at least 2");
  Budget budget(options.budget);
  size_t dim = static_cast<size_t>(p.d()) + 1;

  bool packed = fits_packed(coordinate_bound(p, m_max));
  PointBuffer gens(dim, packed);
  for_each_lattice_point(p, 1, budget, [&gens](const IVec& x) { gens.append(x); });
  gens.sort_lex();

  PointSet prev(dim, packed);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (packed)
      prev.insert_packed(gens.row(i));
    else
      prev.insert(gens.get(i));
  }

  for (Int m = 2; m <= m_max; ++m) {
    PointBuffer level(dim, packed);
    for_each_lattice_point(p, m, budget, [&level](const IVec& x) { level.append(x); });
    level.sort_lex();

    size_t hole = find_first_hole(level, gens, prev, options.threads);
    if (hole < level.size())
      return IdpResult{false, HoleReport{m, level.get(hole)}, m};

    if (m < m_max) {
      PointSet next(dim, packed);
      for (size_t i = 0; i < level.size(); ++i) {
        if (packed)
          next.insert_packed(level.row(i));
        else
          next.insert(level.get(i));
      }
      prev = std::move(next);
    }
  }
  return IdpResult{true, std::nullopt, m_max};
}

CoveringResult normality_via_covering(const CyclicPolytope& p, const IdpOptions& options) {
  int n = p.n();
  int k = p.d() + 1;
  Budget combos(options.budget);

  CoveringResult out;
  out.verified = true;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
  while (true) {
    combos.charge(1);
    CyclicPolytope sub = subsequence_polytope(p, idx);
    IdpResult r = idp_check(sub, options);
    if (!r.normal) {
      out.verified = false;
      out.failing_simplices.push_back(idx);
    }
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
  }
  return out;
}

MinmaxBounds minmax_bounds(const QVec& sorted_r, int j) {
  size_t count = sorted_r.size();
  require(count >= 1, ErrorKind::EmptySet, "need at least one value");
  require(j >= 1 && j <= static_cast<int>(count), ErrorKind::OutOfRange,
          "j out of range");
  Rat m(0);
  for (size_t i = 0; i < count; ++i) {
    require(sorted_r[i] >= 0 && sorted_r[i] <= 1, ErrorKind::OutOfRange,
            "values must lie in [0,1]");
    if (i > 0)
      require(sorted_r[i - 1] <= sorted_r[i], ErrorKind::UnsortedInput,
              "values must be sorted ascending");
    m += sorted_r[i];
  }
  MinmaxBounds out;
  out.prefix = 0;
  out.suffix = 0;
  for (int i = 0; i < j; ++i) {
    out.prefix += sorted_r[static_cast<size_t>(i)];
    out.suffix += sorted_r[count - 1 - static_cast<size_t>(i)];
  }
  out.threshold = Rat(j) * m / Rat(static_cast<int>(count));
  require(out.prefix <= out.threshold && out.threshold <= out.suffix,
          ErrorKind::GuaranteeViolated, "averaging bounds must hold");
  return out;
}

HeavySubset select_heavy_subset(const QVec& r, int d) {
  require(static_cast<int>(r.size()) == d + 1, ErrorKind::DimensionMismatch,
          "expected d+1 values");
  require(d >= 1 && d <= 20, ErrorKind::InstanceTooLarge,
          "subset search guarded to d <= 20");
  Rat total(0);
  for (const Rat& v : r) {
    require(v >= 0 && v <= 1, ErrorKind::OutOfRange, "values must lie in [0,1]");
    total += v;
  }
  require(is_integer(total) && total >= 2, ErrorKind::BadInput,
          "total must be an integer >= 2");

  uint32_t full = (1u << (d + 1)) - 1;
  Rat best_sum(-1);
  std::vector<int> best_set;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 2 || size > d) continue;
    Rat sum(0);
    Rat heaviest(-1);
    std::vector<int> members;
    for (int i = 0; i <= d; ++i) {
      if (!(mask & (1u << i))) continue;
      members.push_back(i + 1);
      sum += r[static_cast<size_t>(i)];
      if (r[static_cast<size_t>(i)] > heaviest) heaviest = r[static_cast<size_t>(i)];
    }
    if (sum - heaviest > 1) continue;
    if (sum > best_sum || (sum == best_sum && members < best_set)) {
      best_sum = sum;
      best_set = std::move(members);
    }
  }
  require(best_sum >= 1 + Rat(1, d + 1), ErrorKind::GuaranteeViolated,
          "no subset met the lower bound");

  HeavySubset out;
  out.indices = best_set;
  std::stable_sort(out.indices.begin(), out.indices.end(), [&r](int a, int b) {
    return r[static_cast<size_t>(a - 1)] > r[static_cast<size_t>(b - 1)];
  });
  for (int i : out.indices) out.values.push_back(r[static_cast<size_t>(i - 1)]);
  return out;
}

Rat epsilon_value(int l, int d) {
  require(d >= 2 && l >= 2 && l <= d, ErrorKind::OutOfRange, "need 2 <= l <= d");
  Rat out(l - 1, d * d - 1);
  out.canonicalize();
  return out;
}

namespace {

void check_position_list(const CyclicPolytope& p, const std::vector<int>& indices) {
  require(indices.size() >= 2, ErrorKind::BadSubset, "need at least two indices");
  std::vector<bool> seen(static_cast<size_t>(p.n()) + 1, false);
  for (int i : indices) {
    require(i >= 1 && i <= p.n(), ErrorKind::OutOfRange, "index out of range");
    require(!seen[static_cast<size_t>(i)], ErrorKind::DuplicateIndex, "repeated index");
    seen[static_cast<size_t>(i)] = true;
  }
}

/// Coefficient of p_t inside Z_l(j): signed prefix product over |.|-product.
Rat z_coefficient(const CyclicPolytope& p, const std::vector<int>& idx, int j, int t) {
  Int num = 1;
  for (int k = 1; k <= j - 1; ++k) num *= p.delta(idx[static_cast<size_t>(k - 1)], idx[static_cast<size_t>(t - 1)]);
  Int den = 1;
  for (int k = 1; k <= static_cast<int>(idx.size()); ++k) {
    if (k == t) continue;
    den *= abs(p.delta(idx[static_cast<size_t>(k - 1)], idx[static_cast<size_t>(t - 1)]));
  }
  Rat out(num);
  out /= Rat(den);
  return out;
}

}  // namespace

Rat z_value(const CyclicPolytope& p, const std::vector<int>& indices,
            const std::vector<Int>& p_values, int j) {
  check_position_list(p, indices);
  int l = static_cast<int>(indices.size());
  require(j >= 2 && j <= l, ErrorKind::OutOfRange, "need 2 <= j <= l");
  require(p_values.size() == static_cast<size_t>(l - j + 1), ErrorKind::DimensionMismatch,
          "need one p value per position j..l");
  Rat acc(0);
  for (int t = j; t <= l; ++t)
    acc += z_coefficient(p, indices, j, t) * Rat(p_values[static_cast<size_t>(t - j)]);
  return acc;
}

Int choose_p(const CyclicPolytope& p, const std::vector<int>& indices, int j,
             const std::vector<Int>& higher_p, const Rat& r_target) {
  check_position_list(p, indices);
  int l = static_cast<int>(indices.size());
  require(j >= 2 && j <= l, ErrorKind::OutOfRange, "need 2 <= j <= l");
  require(higher_p.size() == static_cast<size_t>(l - j), ErrorKind::DimensionMismatch,
          "need fixed p values for positions j+1..l");

  Int modulus = 1;  // C_j = prod_{k>j} |Delta|
  Int window = 1;   // M_j = prod_{k!=j} |Delta|
  int sign = 1;
  for (int k = 1; k <= l; ++k) {
    if (k == j) continue;
    const Int& delta = p.delta(indices[static_cast<size_t>(k - 1)], indices[static_cast<size_t>(j - 1)]);
    window *= abs(delta);
    if (k > j) modulus *= abs(delta);
    if (k < j && delta < 0) sign = -sign;
  }

  Rat tail(0);
  for (int t = j + 1; t <= l; ++t)
    tail += z_coefficient(p, indices, j, t) * Rat(higher_p[static_cast<size_t>(t - j - 1)]);
  Rat tail_scaled = tail * Rat(modulus);
  require(is_integer(tail_scaled), ErrorKind::NoSolution,
          "tail of Z is not an integer over the expected denominator");
  Int residue = mod_floor(-sign * tail_scaled.get_num(), modulus);

  Int floor_rm = floor_rat(r_target * Rat(window));
  Int out = floor_rm - mod_floor(floor_rm - residue, modulus);
  // Z_l(j) = (sign*p + tail*C) / C must now be integral.
  require(mod_floor(sign * out + tail_scaled.get_num(), modulus) == 0,
          ErrorKind::NoSolution, "chosen p does not clear the denominator");
  return out;
}

QVec decompose_step(const CyclicPolytope& p, const IVec& alpha, const QVec& r,
                    bool force) {
  int d = p.d();
  require(p.is_simplex(), ErrorKind::RequiresSimplex,
          "constructive split needs a simplex instance");
  if (!force) {
    Int needed = d * d - 1;
    for (int i = 1; i <= d; ++i)
      require(p.delta(i, i + 1) >= needed, ErrorKind::HypothesisViolated,
              "needs consecutive gaps >= d^2-1 (use force to attempt anyway)");
  }
  ErrorKind failk = force ? ErrorKind::DecompositionFailed : ErrorKind::GuaranteeViolated;

  size_t dim = static_cast<size_t>(d) + 1;
  require(alpha.size() == dim && r.size() == dim, ErrorKind::DimensionMismatch,
          "alpha and r must have d+1 entries");
  const Int& m = alpha[0];
  require(m >= 2, ErrorKind::OutOfRange, "degree must be at least 2");
  Rat total(0);
  for (const Rat& v : r) {
    require(v >= 0, ErrorKind::BadInput, "barycentric coordinates must be nonnegative");
    total += v;
  }
  require(total == Rat(m), ErrorKind::BadInput, "coordinates must sum to the degree");
  for (size_t c = 0; c < dim; ++c) {
    Rat coord(0);
    for (size_t i = 0; i < dim; ++i) coord += r[i] * Rat(p.vertex(static_cast<int>(i) + 1)[c]);
    require(coord == Rat(alpha[c]), ErrorKind::BadInput, "r does not represent alpha");
  }

  auto finish = [&](const QVec& rp) {
    Rat sum(0);
    for (const Rat& v : rp) sum += v;
    require(sum == 1, failk, "r' must sum to 1");
    QVec point(dim, Rat(0));
    for (size_t i = 0; i < dim; ++i) {
      require(rp[i] >= 0 && rp[i] <= r[i], failk, "need 0 <= r'_i <= r_i");
      if (rp[i] == 0) continue;
      const IVec& v = p.vertex(static_cast<int>(i) + 1);
      for (size_t c = 0; c < dim; ++c) point[c] += rp[i] * Rat(v[c]);
    }
    for (const Rat& c : point)
      require(is_integer(c), failk, "split point must be integral");
    return rp;
  };

  // First step: a coordinate >= 1 splits off that vertex directly.
  for (size_t i = 0; i < dim; ++i) {
    if (r[i] >= 1) {
      QVec rp(dim, Rat(0));
      rp[i] = 1;
      return finish(rp);
    }
  }

  std::vector<int> idx = select_heavy_subset(r, d).indices;

  std::vector<Int> pv;
  while (true) {
    int l = static_cast<int>(idx.size());
    pv.assign(static_cast<size_t>(l) + 1, Int(0));
    int restart_at = 0;
    for (int t = l; t >= 2; --t) {
      std::vector<Int> higher(pv.begin() + t + 1, pv.begin() + l + 1);
      Int pt = choose_p(p, idx, t, higher, r[static_cast<size_t>(idx[static_cast<size_t>(t - 1)] - 1)]);
      if (pt < 0) {
        restart_at = t;
        break;
      }
      pv[static_cast<size_t>(t)] = pt;
    }
    if (restart_at == 0) break;

    // Negative p at the largest offending position: restart on the head,
    // whose sum clears the tighter epsilon guarantee.
    require(restart_at >= 3, failk,
            "negative p at position 2 contradicts the construction");
    idx.resize(static_cast<size_t>(restart_at - 1));
    if (!force) {
      Rat head(0);
      for (int i : idx) head += r[static_cast<size_t>(i - 1)];
      require(head >= 1 + epsilon_value(static_cast<int>(idx.size()), d),
              ErrorKind::GuaranteeViolated, "restart lost the epsilon guarantee");
    }
  }

  QVec rp(dim, Rat(0));
  Rat spent(0);
  int l = static_cast<int>(idx.size());
  for (int t = 2; t <= l; ++t) {
    Int window = 1;
    for (int k = 1; k <= l; ++k) {
      if (k == t) continue;
      window *= abs(p.delta(idx[static_cast<size_t>(k - 1)], idx[static_cast<size_t>(t - 1)]));
    }
    Rat share(pv[static_cast<size_t>(t)]);
    share /= Rat(window);
    rp[static_cast<size_t>(idx[static_cast<size_t>(t - 1)] - 1)] = share;
    spent += share;
  }
  rp[static_cast<size_t>(idx[0] - 1)] = 1 - spent;
  return finish(rp);
}

QVec decompose_step(const CyclicPolytope& p, const IVec& alpha, bool force) {
  std::vector<int> order(static_cast<size_t>(p.d()) + 1);
  for (int i = 0; i <= p.d(); ++i) order[static_cast<size_t>(i)] = i + 1;
  return decompose_step(p, alpha, barycentric(p, order, alpha).lambdas, force);
}

DecompositionCertificate full_decompose(const CyclicPolytope& p, IVec alpha, bool force) {
  require(p.is_simplex(), ErrorKind::RequiresSimplex,
          "constructive split needs a simplex instance");
  require(alpha.size() == static_cast<size_t>(p.d()) + 1, ErrorKind::DimensionMismatch,
          "alpha has wrong length");
  require(alpha[0] >= 1, ErrorKind::OutOfRange, "degree must be at least 1");
  FacetSystem checker(p);
  require(checker.contains(alpha), ErrorKind::BadInput, "alpha must lie in mP^");

  DecompositionCertificate cert;
  cert.alpha = alpha;
  size_t dim = alpha.size();
  while (alpha[0] > 1) {
    QVec rp = decompose_step(p, alpha, force);
    QVec point(dim, Rat(0));
    for (size_t i = 0; i < dim; ++i) {
      if (rp[i] == 0) continue;
      const IVec& v = p.vertex(static_cast<int>(i) + 1);
      for (size_t c = 0; c < dim; ++c) point[c] += rp[i] * Rat(v[c]);
    }
    IVec part = qvec_to_ivec(point, "split point must be integral");
    cert.parts.push_back(part);
    alpha = ivec_sub(alpha, part);
  }
  cert.parts.push_back(alpha);
  require(validate_certificate(p, cert), force ? ErrorKind::DecompositionFailed
                                               : ErrorKind::GuaranteeViolated,
          "certificate failed revalidation");
  return cert;
}

FixtureIdpReport fixture_idp_check(const std::vector<IVec>& homogenized_vertices,
                                   const std::optional<Int>& m_max_opt,
                                   long long budget_limit) {
  VertexSimplex simplex(homogenized_vertices);
  int poly_dim = static_cast<int>(homogenized_vertices.size()) - 1;
  Int m_max = m_max_opt.value_or(Int(std::max(2, poly_dim - 1)));
  require(m_max >= 2, ErrorKind::OutOfRange, "m_max must be at least 2");
  Budget budget(budget_limit);

  std::vector<IVec> gens;
  simplex.for_each_point(1, budget, [&gens](const IVec& x) { gens.push_back(x); });

  FixtureIdpReport report;
  report.index = lattice_index(gens);
  bool proper_sublattice = report.index.finite && report.index.index > 1;
  std::optional<RowLattice> sub;
  if (proper_sublattice) {
    sub.emplace(gens);
    report.relative_normal = true;
  }
  report.plain_normal = true;

  std::set<IVec> prev(gens.begin(), gens.end());
  for (Int m = 2; m <= m_max; ++m) {
    std::set<IVec> current;
    bool plain_open = report.plain_normal;
    bool rel_open = proper_sublattice && *report.relative_normal;
    if (!plain_open && !rel_open) break;
    simplex.for_each_point(m, budget, [&](const IVec& x) {
      current.insert(x);
      bool split = false;
      for (const IVec& a : gens) {
        if (prev.count(ivec_sub(x, a))) {
          split = true;
          break;
        }
      }
      if (split) return;
      if (plain_open && !report.plain_hole) {
        report.plain_normal = false;
        report.plain_hole = HoleReport{m, x};
      }
      if (rel_open && !report.relative_hole && sub->member(x)) {
        report.relative_normal = false;
        report.relative_hole = HoleReport{m, x};
      }
    });
    prev = std::move(current);
  }
  return report;
}

}  // namespace cll
