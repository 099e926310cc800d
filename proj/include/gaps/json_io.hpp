#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gaps/base_change.hpp"
#include "gaps/principal_series.hpp"
#include "gaps/verma.hpp"
#include "gaps/weyl.hpp"

namespace gaps::io {

using json = nlohmann::json;

// malformed or inconsistent external input
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const PadicScalar& x);
json to_json(const UnramifiedScalar& x);
PadicScalar scalar_from_json(const json& j, i64 p, int cap);

json to_json(const QSeries& f);
json to_json(const LSeries& f);
QSeries series_from_json(const json& j);

json to_json(const IwahoriMatrix& g);
IwahoriMatrix matrix_from_json(const json& j, i64 p, int cap);

json to_json(const Character& chi);
json to_json(const PSVector& f);
PSVector psvector_from_json(const json& j);

json to_json(const XZ& xz);
json to_json(const DecayReport& r);
json to_json(const PhiReport& r, bool verdict);
json to_json(const IrreducibilityVerdict& v);
json to_json(const BruhatComponent& c);
json to_json(const ResScalarsContext& ctx);
json to_json(const AnalyticVerdict& v);

// "1,-2,3/5" -> parameters c_i
Character parse_character(const std::string& text, i64 p, int cap);
// "2,3,1" -> permutation
WeylElement parse_permutation(const std::string& text);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace gaps::io
