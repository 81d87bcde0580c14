#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "cll/basis.hpp"
#include "cll/json_io.hpp"
#include "cll/lattice.hpp"
#include "cll/normality.hpp"
#include "cll/sweep.hpp"
#include "cll/veryample.hpp"

namespace {

using namespace cll;

// Exit contract: 0 property holds, 1 counterexample/hole found,
// 2 inconclusive or budget-guarded, 3 usage/config error, 4 internal failure.
constexpr int kExitHolds = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

struct SharedOptions {
  std::string spec_path;
  std::string format = "json";
  int threads = 1;
  long long budget = kDefaultBudget;
  uint64_t seed = 0;
  bool no_timing = false;
};

long long env_default_budget() {
  if (const char* env = std::getenv("CLL_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return kDefaultBudget;
}

void add_shared(CLI::App* cmd, SharedOptions& shared, bool needs_spec = true) {
  auto* spec = cmd->add_option("--spec", shared.spec_path, "polytope spec file (JSON)");
  if (needs_spec) spec->required();
  cmd->add_option("--format", shared.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--threads", shared.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", shared.budget, "enumeration budget per call");
  cmd->add_flag("--no-timing", shared.no_timing, "omit the timing field");
}

CyclicPolytope load_polytope(const SharedOptions& shared) {
  return build_polytope(load_spec_file(shared.spec_path));
}

void emit(const Json& body, const SharedOptions& shared) {
  if (shared.format == "json") {
    std::cout << body.dump(1) << "\n";
    return;
  }
  if (shared.format == "csv") {
    if (body.contains("instances")) {
      std::cout << "tau,status,counterexample\n";
      for (const Json& inst : body.at("instances")) {
        std::string taus;
        for (const Json& t : inst.at("tau")) {
          if (!taus.empty()) taus += " ";
          taus += t.dump();
        }
        std::cout << '"' << taus << '"' << ',' << inst.at("status").get<std::string>()
                  << ',' << (inst.contains("counterexample") ? "true" : "false") << "\n";
      }
      return;
    }
    for (const auto& [key, value] : body.items())
      std::cout << key << ',' << value.dump() << "\n";
    return;
  }
  // text: one line per top-level field, nested values as compact JSON
  for (const auto& [key, value] : body.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
}

std::vector<int> parse_order(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ','))
    out.push_back(std::stoi(piece));
  require(!out.empty() && static_cast<int>(out.size()) <= n, ErrorKind::BadInput,
          "bad order list");
  return out;
}

IVec parse_point(const std::string& text) {
  IVec out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(Int(piece));
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::BadInput, "bad coordinate '" + piece + "'");
    }
  }
  require(!out.empty(), ErrorKind::BadInput, "empty point");
  return out;
}

int run_facets(const SharedOptions& shared) {
  CyclicPolytope p = load_polytope(shared);
  Json out;
  out["schema"] = kSchemaTag;
  out["report"] = "facets";
  Json list = Json::array();
  for (const FacetSet& s : enumerate_facets(p)) list.push_back(s.indices);
  out["count"] = list.size();
  out["facets"] = std::move(list);
  emit(out, shared);
  return kExitHolds;
}

int run_points(const SharedOptions& shared, long long dilate, long long max_points) {
  CyclicPolytope p = load_polytope(shared);
  DilatePointSet set = enumerate_points(p, Int(static_cast<long>(dilate)), shared.budget);
  Json out;
  out["schema"] = kSchemaTag;
  out["report"] = "points";
  out["m"] = int_to_json(set.m);
  out["count"] = set.points.size();
  if (static_cast<long long>(set.points.size()) <= max_points) {
    Json list = Json::array();
    for (const IVec& x : set.points) list.push_back(ivec_to_json(x));
    out["points"] = std::move(list);
  }
  emit(out, shared);
  return kExitHolds;
}

int run_basis(const SharedOptions& shared, const std::string& order_text) {
  CyclicPolytope p = load_polytope(shared);
  std::vector<int> order;
  if (order_text.empty())
    for (int i = 1; i <= p.d() + 1; ++i) order.push_back(i);
  else
    order = parse_order(order_text, p.n());

  LatticeBasis zb = z_basis(p, order);
  LatticeBasis cb = c_basis(p, order);

  Json out;
  out["schema"] = kSchemaTag;
  out["report"] = "basis";
  out["order"] = order;
  Json bvecs = Json::array();
  std::vector<int> prefix;
  for (size_t i = 0; i < order.size(); ++i) {
    prefix.push_back(order[i]);
    Json jb;
    jb["set"] = prefix;
    jb["vector"] = ivec_to_json(zb.vectors[i]);
    bvecs.push_back(std::move(jb));
  }
  out["b_vectors"] = std::move(bvecs);
  out["z_det"] = int_to_json(zb.det);
  Json cvecs = Json::array();
  for (const IVec& c : cb.vectors) cvecs.push_back(ivec_to_json(c));
  out["c_basis"] = std::move(cvecs);
  out["c_det"] = int_to_json(cb.det);

  // The c-basis members lie in A_P and already span Z^{d+1}, so the subgroup
  // generated by A_P has index 1; report it from those witnesses.
  std::vector<IVec> generators = cb.vectors;
  for (int i = 1; i <= p.n(); ++i) generators.push_back(p.vertex(i));
  LatticeIndexResult idx = lattice_index(generators);
  out["lattice_index"] = idx.finite ? int_to_json(idx.index) : Json("infinite");
  emit(out, shared);
  return kExitHolds;
}

int run_idp(const SharedOptions& shared, long long m_max, bool covering_mode) {
  CyclicPolytope p = load_polytope(shared);
  IdpOptions options;
  if (m_max > 0) options.m_max = Int(static_cast<long>(m_max));
  options.budget = shared.budget;
  options.threads = shared.threads;

  Json out;
  out["schema"] = kSchemaTag;

  if (covering_mode && !p.is_simplex()) {
    out["report"] = "normal-check";
    CoveringResult cover = normality_via_covering(p, options);
    if (cover.verified) {
      out["verdict"] = "Normal";
      emit(out, shared);
      return kExitHolds;
    }
    out["verdict"] = "Inconclusive";
    out["failing_simplices"] = cover.failing_simplices;
    emit(out, shared);
    return kExitInconclusive;
  }

  out["report"] = covering_mode ? "normal-check" : "idp-check";
  IdpResult r = idp_check(p, options);
  out["m_max"] = int_to_json(r.m_max_checked);
  if (r.normal) {
    out["verdict"] = "Normal";
    emit(out, shared);
    return kExitHolds;
  }
  out["verdict"] = "HoleFound";
  out["hole"] = hole_to_json(*r.hole);
  emit(out, shared);
  return kExitCounterexample;
}

int run_decompose(const SharedOptions& shared, const std::string& point_text,
                  long long sample_degree, bool force) {
  CyclicPolytope p = load_polytope(shared);
  IVec alpha;
  if (!point_text.empty()) {
    alpha = parse_point(point_text);
    require(alpha.size() == static_cast<size_t>(p.d()) + 1, ErrorKind::BadInput,
            "point must have d+1 coordinates (degree first)");
  } else {
    require(sample_degree >= 1, ErrorKind::BadInput,
            "need --point or --sample-degree");
    alpha = sample_lattice_point(p, Int(static_cast<long>(sample_degree)), shared.seed);
  }
  DecompositionCertificate cert = full_decompose(p, alpha, force);
  Json out;
  out["schema"] = kSchemaTag;
  out["report"] = "decompose";
  out["certificate"] = certificate_to_json(cert);
  out["valid"] = validate_certificate(p, cert);
  emit(out, shared);
  return kExitHolds;
}

int run_very_ample(const SharedOptions& shared, int k_max, bool strict_witness) {
  CyclicPolytope p = load_polytope(shared);
  Json out;
  out["schema"] = kSchemaTag;
  out["report"] = strict_witness ? "witness" : "very-ample-check";

  if (strict_witness) {
    require(p.d() == 4, ErrorKind::HypothesisViolated, "witness construction needs d = 4");
    require(p.delta(2, 3) == 1 || p.delta(p.n() - 2, p.n() - 1) == 1,
            ErrorKind::HypothesisViolated,
            "needs Delta_23 = 1 or Delta_{n-2,n-1} = 1");
  }
  std::optional<WitnessFamily> w = very_ample_obstruction(p, k_max, shared.budget);
  if (w) {
    out["verdict"] = "NotVeryAmple";
    out["witness"] = witness_to_json(*w);
    emit(out, shared);
    return kExitCounterexample;
  }
  out["verdict"] = "NoObstruction";
  out["note"] = "no hypothesis matched; this is not a very-ampleness certificate";
  emit(out, shared);
  return kExitInconclusive;
}

int run_sweep_cmd(const SharedOptions& shared, SweepSpec spec) {
  spec.budget = shared.budget;
  spec.seed = shared.seed;
  spec.threads = shared.threads;
  SweepReport report = run_sweep(spec);
  emit(sweep_report_to_json(report, !shared.no_timing), shared);
  if (report.counterexample_count > 0) return kExitCounterexample;
  if (report.guarded_count > 0) return kExitInconclusive;
  return kExitHolds;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::SamplingExhausted:
      return kExitInconclusive;
    case ErrorKind::GuaranteeViolated:
    case ErrorKind::IntegralityViolation:
    case ErrorKind::NoSolution:
    case ErrorKind::DecompositionFailed:
    case ErrorKind::WitnessRefuted:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic-lattice-lab: exact lattice computations on integral cyclic polytopes"};
  app.require_subcommand(1);

  SharedOptions shared;
  shared.budget = env_default_budget();

  long long dilate = 1;
  long long max_points = 100000;
  std::string order_text;
  long long m_max = 0;
  std::string point_text;
  long long sample_degree = 0;
  bool force = false;
  int k_max = 3;
  SweepSpec sweep_spec;
  std::string sweep_kind = "normality";
  long long sweep_m_max = 0;

  CLI::App* facets_cmd = app.add_subcommand("facets", "facet sets via Gale evenness");
  add_shared(facets_cmd, shared);

  CLI::App* points_cmd = app.add_subcommand("points", "lattice points of a dilate");
  add_shared(points_cmd, shared);
  points_cmd->add_option("--dilate", dilate, "dilation degree m")->required();
  points_cmd->add_option("--max-points", max_points,
                         "omit the point list above this count");

  CLI::App* basis_cmd = app.add_subcommand("basis", "b-vectors, bases, lattice index");
  add_shared(basis_cmd, shared);
  basis_cmd->add_option("--order", order_text, "comma-separated vertex order");

  CLI::App* normal_cmd = app.add_subcommand("normal-check", "covering-based normality");
  add_shared(normal_cmd, shared);
  normal_cmd->add_option("--m-max", m_max, "override the degree bound");

  CLI::App* idp_cmd = app.add_subcommand("idp-check", "graded decomposition check");
  add_shared(idp_cmd, shared);
  idp_cmd->add_option("--m-max", m_max, "override the degree bound");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "constructive decomposition");
  add_shared(decompose_cmd, shared);
  decompose_cmd->add_option("--point", point_text, "homogenized point, comma-separated");
  decompose_cmd->add_option("--sample-degree", sample_degree, "sample a point of this degree");
  decompose_cmd->add_option("--seed", shared.seed, "sampler seed");
  decompose_cmd->add_flag("--force", force, "skip the gap hypothesis; validate outputs");

  CLI::App* va_cmd = app.add_subcommand("very-ample-check", "non-very-ampleness dispatch");
  add_shared(va_cmd, shared);
  va_cmd->add_option("--k-max", k_max, "verify k = 1..k_max");

  CLI::App* witness_cmd = app.add_subcommand("witness", "explicit d=4 witness construction");
  add_shared(witness_cmd, shared);
  witness_cmd->add_option("--k-max", k_max, "verify k = 1..k_max");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "conjecture sweeps at desk scale");
  add_shared(sweep_cmd, shared, /*needs_spec=*/false);
  sweep_cmd->add_option("--kind", sweep_kind,
                        "normality|very-ample|monotonicity|va-implies-normal");
  sweep_cmd->add_option("--d", sweep_spec.d, "dimension")->required();
  sweep_cmd->add_option("--n-min", sweep_spec.n_min, "smallest vertex count (default d+1)");
  sweep_cmd->add_option("--n-max", sweep_spec.n_max, "largest vertex count");
  long long sweep_tau_max = 6;
  sweep_cmd->add_option("--tau-max", sweep_tau_max, "largest parameter value")->required();
  sweep_cmd->add_option("--k-max", sweep_spec.k_max, "witness verification depth");
  sweep_cmd->add_option("--m-max", sweep_m_max, "override the degree bound");
  sweep_cmd->add_option("--seed", shared.seed, "sweep seed (recorded in the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(facets_cmd)) return run_facets(shared);
    if (app.got_subcommand(points_cmd)) return run_points(shared, dilate, max_points);
    if (app.got_subcommand(basis_cmd)) return run_basis(shared, order_text);
    if (app.got_subcommand(normal_cmd)) return run_idp(shared, m_max, true);
    if (app.got_subcommand(idp_cmd)) return run_idp(shared, m_max, false);
    if (app.got_subcommand(decompose_cmd))
      return run_decompose(shared, point_text, sample_degree, force);
    if (app.got_subcommand(va_cmd)) return run_very_ample(shared, k_max, false);
    if (app.got_subcommand(witness_cmd)) return run_very_ample(shared, k_max, true);
    if (app.got_subcommand(sweep_cmd)) {
      auto kind = sweep_kind_from_name(sweep_kind);
      require(kind.has_value(), ErrorKind::BadInput, "unknown sweep kind '" + sweep_kind + "'");
      sweep_spec.kind = *kind;
      sweep_spec.tau_max = Int(static_cast<long>(sweep_tau_max));
      if (sweep_m_max > 0) sweep_spec.m_max = Int(static_cast<long>(sweep_m_max));
      return run_sweep_cmd(shared, sweep_spec);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
