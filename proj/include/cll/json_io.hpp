#pragma once

#include <string>

#include <json.hpp>

#include "cll/core.hpp"
#include "cll/normality.hpp"
#include "cll/veryample.hpp"

namespace cll {

// Field order is part of the report contract, so everything uses ordered_json.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "cyclic-lattice-lab/1";

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; both forms parse back.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// Rationals serialize as strings, "n" or "n/d".
Json rat_to_json(const Rat& q);

Json ivec_to_json(const IVec& v);
IVec ivec_from_json(const Json& j);
Json qvec_to_json(const QVec& v);

/// Polytope spec file: {"d": <int>, "tau": [<int>, ...]}.
ParameterList params_from_json(const Json& j);
Json params_to_json(const ParameterList& params);
ParameterList load_spec_file(const std::string& path);

Json hole_to_json(const HoleReport& hole);
Json certificate_to_json(const DecompositionCertificate& cert);
Json witness_to_json(const WitnessFamily& w);

}  // namespace cll
