#pragma once

#include <json.hpp>

#include "specnp/isospec.hpp"
#include "specnp/nptest.hpp"
#include "specnp/symprod.hpp"

namespace specnp {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im]; matrices as
// {"n": k, "data": [[[re,im], ...], ...]} row-major.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);

Json poly_to_json(const ComplexPoly& p);
ComplexPoly poly_from_json(const Json& j, const std::string& where);

Json sym_point_to_json(const SymPoint& x);
SymPoint sym_point_from_json(const Json& j, const std::string& where);

Json blaschke_to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const Json& j, const std::string& where);

Json holo_to_json(const HoloFunction& f);
HoloFunction holo_from_json(const Json& j, const std::string& where);

Json dataset_to_json(const InterpolationData& data);
InterpolationData dataset_from_json(const Json& j, const std::string& where);

Json verdict_to_json(const Verdict& v);

Json spectral_data_to_json(const SpectralData& sd, bool full);

Json config_to_json(const Config& cfg);
Config config_from_json(const Json& j, const std::string& where);

/// All wire schemas, keyed by name.
Json schemas();

}  // namespace specnp
