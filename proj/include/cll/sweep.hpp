#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cll/json_io.hpp"
#include "cll/normality.hpp"
#include "cll/veryample.hpp"

namespace cll {

enum class SweepKind { Normality, VeryAmple, Monotonicity, VeryAmpleImpliesNormal };

struct SweepSpec {
  SweepKind kind = SweepKind::Normality;
  int d = 3;
  int n_min = 0;  // 0 means d+1
  int n_max = 0;
  Int tau_max = 6;
  std::optional<Int> m_max;
  int k_max = 3;
  long long budget = kDefaultBudget;
  uint64_t seed = 0;
  int threads = 1;
};

struct SweepInstance {
  std::vector<Int> taus;    // canonical representative, tau_1 = 0
  std::vector<Int> mirror;  // the negation-translation partner
  std::string status;       // normal | hole | witness | no-witness | budget | error
  std::optional<HoleReport> hole;
  std::optional<WitnessFamily> witness;
  std::optional<bool> certified;
  std::string note;
  bool counterexample = false;
  std::string counterexample_reason;
  bool revalidated = false;  // counterexample evidence re-checked from scratch
};

struct SweepPair {
  size_t base = 0;        // instance indices
  size_t dominating = 0;  // gap-dominates base
  bool counterexample = false;
};

struct SweepReport {
  SweepSpec spec;
  std::vector<SweepInstance> instances;
  std::vector<SweepPair> pairs;           // Monotonicity kind only
  std::vector<size_t> candidates;         // VA-implies-normal: unresolved holes
  size_t counterexample_count = 0;
  size_t guarded_count = 0;
  double seconds = 0.0;
};

/// Enumerates all parameter tuples with tau_1 = 0 and tau_n <= tau_max up to
/// the negation symmetry, runs the requested check per instance, and
/// aggregates. Per-instance failures are recorded, never fatal.
SweepReport run_sweep(const SweepSpec& spec);

const char* sweep_kind_name(SweepKind kind);
std::optional<SweepKind> sweep_kind_from_name(const std::string& name);

Json sweep_report_to_json(const SweepReport& report, bool include_timing);

}  // namespace cll
