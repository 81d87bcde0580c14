#include "cll/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace cll {

namespace {

std::vector<Int> gap_sequence(const std::vector<Int>& taus) {
  std::vector<Int> gaps;
  for (size_t i = 0; i + 1 < taus.size(); ++i) gaps.push_back(taus[i + 1] - taus[i]);
  return gaps;
}

std::vector<Int> mirror_tuple(const std::vector<Int>& taus) {
  std::vector<Int> out;
  const Int& last = taus.back();
  for (auto it = taus.rbegin(); it != taus.rend(); ++it) out.push_back(last - *it);
  return out;
}

/// All strictly increasing tuples with tau_1 = 0, tau_n <= tau_max, keeping
/// one representative per negation orbit (gap sequence lex <= its reverse).
std::vector<std::vector<Int>> enumerate_tuples(int n, const Int& tau_max) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> taus(static_cast<size_t>(n));
  taus[0] = 0;

  auto emit = [&out](const std::vector<Int>& t) {
    std::vector<Int> gaps = gap_sequence(t);
    std::vector<Int> rev(gaps.rbegin(), gaps.rend());
    if (gaps <= rev) out.push_back(t);
  };

  std::function<void(int)> fill = [&](int pos) {
    if (pos == n) {
      emit(taus);
      return;
    }
    for (Int v = taus[static_cast<size_t>(pos - 1)] + 1; v <= tau_max; ++v) {
      taus[static_cast<size_t>(pos)] = v;
      fill(pos + 1);
    }
  };
  if (n >= 2)
    fill(1);
  else
    emit(taus);
  return out;
}

bool has_interior_unit_gap(const std::vector<Int>& taus) {
  size_t n = taus.size();
  for (size_t i = 2; i + 1 <= n - 1; ++i)  // positions 2..n-2, 1-based
    if (taus[i] - taus[i - 1] == 1) return true;
  return false;
}

bool dominates(const std::vector<Int>& gaps_small, const std::vector<Int>& gaps_big) {
  if (gaps_small.size() != gaps_big.size()) return false;
  for (size_t i = 0; i < gaps_small.size(); ++i)
    if (gaps_big[i] < gaps_small[i]) return false;
  return true;
}

void run_indexed(size_t count, int threads, const std::function<void(size_t)>& work) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<size_t> next{0};
  size_t workers = std::min<size_t>(static_cast<size_t>(threads), count);
  std::vector<std::thread> pool;
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        work(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Normality:
      return "normality";
    case SweepKind::VeryAmple:
      return "very-ample";
    case SweepKind::Monotonicity:
      return "monotonicity";
    case SweepKind::VeryAmpleImpliesNormal:
      return "va-implies-normal";
  }
  return "unknown";
}

std::optional<SweepKind> sweep_kind_from_name(const std::string& name) {
  if (name == "normality") return SweepKind::Normality;
  if (name == "very-ample") return SweepKind::VeryAmple;
  if (name == "monotonicity") return SweepKind::Monotonicity;
  if (name == "va-implies-normal") return SweepKind::VeryAmpleImpliesNormal;
  return std::nullopt;
}

SweepReport run_sweep(const SweepSpec& spec) {
  require(spec.d >= 1, ErrorKind::BadInput, "dimension must be positive");
  require(spec.tau_max >= spec.d, ErrorKind::BadInput,
          "tau_max too small to fit any instance");
  auto started = std::chrono::steady_clock::now();

  SweepReport report;
  report.spec = spec;

  int n_min = spec.n_min > 0 ? spec.n_min : spec.d + 1;
  int n_max = spec.n_max > 0 ? spec.n_max : n_min;
  require(n_min >= spec.d + 1 && n_max >= n_min, ErrorKind::BadInput,
          "need d+1 <= n_min <= n_max");

  for (int n = n_min; n <= n_max; ++n)
    for (std::vector<Int>& taus : enumerate_tuples(n, spec.tau_max)) {
      SweepInstance inst;
      inst.mirror = mirror_tuple(taus);
      inst.taus = std::move(taus);
      report.instances.push_back(std::move(inst));
    }

  IdpOptions idp_options;
  idp_options.m_max = spec.m_max;
  idp_options.budget = spec.budget;
  idp_options.threads = 1;  // parallelism is across instances here

  auto classify_error = [](SweepInstance& inst, const Error& e) {
    if (e.kind() == ErrorKind::InstanceTooLarge) {
      inst.status = "budget";
    } else {
      inst.status = "error";
      inst.note = e.what();
      if (e.kind() == ErrorKind::WitnessRefuted) {
        inst.counterexample = true;
        inst.counterexample_reason = "witness construction refuted";
      }
    }
  };

  auto run_normality = [&](SweepInstance& inst) {
    CyclicPolytope poly = build_polytope(ParameterList{spec.d, inst.taus});
    IdpResult r = idp_check(poly, idp_options);
    inst.status = r.normal ? "normal" : "hole";
    inst.hole = r.hole;
    if (spec.d == 3 && !r.normal) {
      inst.counterexample = true;
      inst.counterexample_reason = "dimension-3 instance is not normal";
    }
    if (spec.d == 4) {
      bool unit_gap = has_interior_unit_gap(inst.taus);
      if (unit_gap && r.normal) {
        inst.counterexample = true;
        inst.counterexample_reason = "normal despite an interior unit gap";
      }
      if (!unit_gap && !r.normal) {
        inst.counterexample = true;
        inst.counterexample_reason = "hole despite all interior gaps >= 2";
      }
    }
    if (inst.counterexample && inst.hole)
      inst.revalidated = validate_hole(poly, *inst.hole, spec.budget);
  };

  auto run_very_ample = [&](SweepInstance& inst) {
    CyclicPolytope poly = build_polytope(ParameterList{spec.d, inst.taus});
    std::optional<WitnessFamily> w =
        very_ample_obstruction(poly, spec.k_max, spec.budget);
    if (w) {
      inst.status = "witness";
      inst.witness = std::move(w);
    } else {
      inst.status = "no-witness";
    }
  };

  auto run_cross_tab = [&](SweepInstance& inst) {
    CyclicPolytope poly = build_polytope(ParameterList{spec.d, inst.taus});
    IdpResult r = idp_check(poly, idp_options);
    inst.hole = r.hole;
    std::optional<WitnessFamily> w;
    if (spec.d >= 4) w = very_ample_obstruction(poly, spec.k_max, spec.budget);
    if (w) inst.witness = std::move(w);
    Int bound = spec.m_max.value_or(Int(std::max(2, spec.d - 1)));
    CertifyResult cert = vertex_local_certify(poly, 1, bound, spec.budget, 1);
    inst.certified = cert.certified;
    inst.status = r.normal ? "normal" : (inst.witness ? "witness" : "hole");
  };

  run_indexed(report.instances.size(), spec.threads, [&](size_t i) {
    SweepInstance& inst = report.instances[i];
    try {
      switch (spec.kind) {
        case SweepKind::Normality:
        case SweepKind::Monotonicity:
          run_normality(inst);
          break;
        case SweepKind::VeryAmple:
          run_very_ample(inst);
          break;
        case SweepKind::VeryAmpleImpliesNormal:
          run_cross_tab(inst);
          break;
      }
    } catch (const Error& e) {
      classify_error(inst, e);
    }
  });

  if (spec.kind == SweepKind::Monotonicity) {
    // Pairs (P, P') with the gaps of P' dominating those of P in either
    // orientation; the conjecture expects P normal => P' normal.
    std::vector<std::vector<Int>> gaps;
    gaps.reserve(report.instances.size());
    for (const SweepInstance& inst : report.instances)
      gaps.push_back(gap_sequence(inst.taus));
    for (size_t a = 0; a < report.instances.size(); ++a) {
      if (report.instances[a].status != "normal") continue;
      for (size_t b = 0; b < report.instances.size(); ++b) {
        if (a == b) continue;
        const std::string& status_b = report.instances[b].status;
        if (status_b != "normal" && status_b != "hole") continue;
        std::vector<Int> rev(gaps[b].rbegin(), gaps[b].rend());
        if (!dominates(gaps[a], gaps[b]) && !dominates(gaps[a], rev)) continue;
        SweepPair pair;
        pair.base = a;
        pair.dominating = b;
        pair.counterexample = status_b == "hole";
        if (pair.counterexample) {
          report.instances[b].counterexample = true;
          report.instances[b].counterexample_reason =
              "hole although it dominates a normal instance";
        }
        report.pairs.push_back(pair);
      }
    }
  }

  if (spec.kind == SweepKind::VeryAmpleImpliesNormal) {
    for (size_t i = 0; i < report.instances.size(); ++i) {
      const SweepInstance& inst = report.instances[i];
      if (inst.status == "hole" && !inst.witness) report.candidates.push_back(i);
    }
  }

  for (const SweepInstance& inst : report.instances) {
    if (inst.counterexample) ++report.counterexample_count;
    if (inst.status == "budget" || inst.status == "error") ++report.guarded_count;
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Json sweep_report_to_json(const SweepReport& report, bool include_timing) {
  Json out;
  out["schema"] = kSchemaTag;
  out["report"] = "sweep";
  Json spec;
  spec["kind"] = sweep_kind_name(report.spec.kind);
  spec["d"] = report.spec.d;
  spec["n_min"] = report.spec.n_min > 0 ? report.spec.n_min : report.spec.d + 1;
  spec["n_max"] = report.spec.n_max > 0
                      ? report.spec.n_max
                      : (report.spec.n_min > 0 ? report.spec.n_min : report.spec.d + 1);
  spec["tau_max"] = int_to_json(report.spec.tau_max);
  spec["k_max"] = report.spec.k_max;
  spec["budget"] = report.spec.budget;
  spec["seed"] = report.spec.seed;
  out["spec"] = std::move(spec);

  Json instances = Json::array();
  for (const SweepInstance& inst : report.instances) {
    Json ji;
    Json taus = Json::array();
    for (const Int& t : inst.taus) taus.push_back(int_to_json(t));
    ji["tau"] = std::move(taus);
    Json mirror = Json::array();
    for (const Int& t : inst.mirror) mirror.push_back(int_to_json(t));
    ji["mirror"] = std::move(mirror);
    ji["status"] = inst.status;
    if (inst.hole) ji["hole"] = hole_to_json(*inst.hole);
    if (inst.witness) ji["witness"] = witness_to_json(*inst.witness);
    if (inst.certified.has_value()) ji["certified"] = *inst.certified;
    if (!inst.note.empty()) ji["note"] = inst.note;
    if (inst.counterexample) {
      ji["counterexample"] = inst.counterexample_reason;
      ji["revalidated"] = inst.revalidated;
    }
    instances.push_back(std::move(ji));
  }
  out["instances"] = std::move(instances);

  if (report.spec.kind == SweepKind::Monotonicity) {
    Json pairs = Json::array();
    for (const SweepPair& pair : report.pairs) {
      Json jp;
      jp["base"] = pair.base;
      jp["dominating"] = pair.dominating;
      jp["counterexample"] = pair.counterexample;
      pairs.push_back(std::move(jp));
    }
    out["pairs"] = std::move(pairs);
  }
  if (report.spec.kind == SweepKind::VeryAmpleImpliesNormal)
    out["candidates"] = report.candidates;

  Json totals;
  totals["instances"] = report.instances.size();
  totals["counterexamples"] = report.counterexample_count;
  totals["guarded"] = report.guarded_count;
  out["totals"] = std::move(totals);
  if (include_timing) out["timing"] = Json{{"seconds", report.seconds}};
  return out;
}

}  // namespace cll
