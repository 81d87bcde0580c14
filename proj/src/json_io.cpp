#include "cll/json_io.hpp"

#include <fstream>

namespace cll {

Json int_to_json(const Int& v) {
  if (fits_int64(v)) return Json(static_cast<int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::BadInput, "malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  fail(ErrorKind::BadInput, "expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return Json(q.get_num().get_str());
  return Json(q.get_num().get_str() + "/" + q.get_den().get_str());
}

Json ivec_to_json(const IVec& v) {
  Json out = Json::array();
  for (const Int& c : v) out.push_back(int_to_json(c));
  return out;
}

IVec ivec_from_json(const Json& j) {
  require(j.is_array(), ErrorKind::BadInput, "expected an array of integers");
  IVec out;
  for (const Json& c : j) out.push_back(int_from_json(c));
  return out;
}

Json qvec_to_json(const QVec& v) {
  Json out = Json::array();
  for (const Rat& c : v) out.push_back(rat_to_json(c));
  return out;
}

ParameterList params_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("tau"), ErrorKind::BadInput,
          "spec must be an object with \"d\" and \"tau\"");
  ParameterList params;
  Int d = int_from_json(j.at("d"));
  require(d >= 1 && fits_int64(d) && d.get_si() <= 1000, ErrorKind::BadInput,
          "implausible dimension");
  params.d = static_cast<int>(d.get_si());
  for (const Json& t : j.at("tau")) params.taus.push_back(int_from_json(t));
  return params;
}

Json params_to_json(const ParameterList& params) {
  Json out;
  out["d"] = params.d;
  Json taus = Json::array();
  for (const Int& t : params.taus) taus.push_back(int_to_json(t));
  out["tau"] = std::move(taus);
  return out;
}

ParameterList load_spec_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::BadInput, "cannot open spec file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::BadInput, std::string("spec file is not valid JSON: ") + e.what());
  }
  return params_from_json(j);
}

Json hole_to_json(const HoleReport& hole) {
  Json out;
  out["m"] = int_to_json(hole.m);
  out["alpha"] = ivec_to_json(hole.alpha);
  out["reason"] = "NotSumOfLowerDegrees";
  return out;
}

Json certificate_to_json(const DecompositionCertificate& cert) {
  Json out;
  out["alpha"] = ivec_to_json(cert.alpha);
  out["degree"] = int_to_json(cert.alpha.empty() ? Int(0) : cert.alpha[0]);
  Json parts = Json::array();
  for (const IVec& part : cert.parts) parts.push_back(ivec_to_json(part));
  out["parts"] = std::move(parts);
  return out;
}

Json witness_to_json(const WitnessFamily& w) {
  Json out;
  out["p"] = ivec_to_json(w.p);
  out["base_vertex"] = w.base_vertex;
  out["negated"] = w.negated;
  Json instance;
  instance["d"] = w.instance_d;
  Json taus = Json::array();
  for (const Int& t : w.instance_taus) taus.push_back(int_to_json(t));
  instance["tau"] = std::move(taus);
  out["instance"] = std::move(instance);
  out["coefficients"] = qvec_to_json(w.coefficients);
  out["beyond_facet"] = w.violated_facet;
  Json checks = Json::array();
  for (const KCheck& c : w.checks) {
    Json jc;
    jc["k"] = c.k;
    jc["degree"] = int_to_json(c.degree);
    jc["in_cone"] = c.in_cone;
    jc["hole"] = c.hole;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  out["verified_k"] = w.verified_k;
  out["construction"] =
      w.construction == WitnessConstruction::Direct4D ? "Direct4D" : "FacetReduction";
  Json chain = Json::array();
  for (const FacetChainStep& step : w.chain) {
    Json js;
    js["facet"] = step.facet;
    Json st = Json::array();
    for (const Int& t : step.sub_taus) st.push_back(int_to_json(t));
    js["sub_tau"] = std::move(st);
    chain.push_back(std::move(js));
  }
  out["chain"] = std::move(chain);
  return out;
}

}  // namespace cll
