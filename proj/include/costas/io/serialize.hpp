#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "costas/cauchy/sandbox.hpp"
#include "costas/cauchy/transforms.hpp"
#include "costas/cloud/cloud.hpp"
#include "costas/exact/quad_ext.hpp"
#include "costas/indicator/indicator.hpp"
#include "costas/perm/costas.hpp"
#include "costas/ruler/constructions.hpp"
#include "costas/ruler/greedy.hpp"

// JSON and CSV forms of the library's objects. Rationals are always written
// as "num/den" strings.
namespace costas::io {

using nlohmann::json;

json to_json(const exact::Rational& r);
exact::Rational rational_from_json(const json& j);
/// {"a": "num/den", "b": "num/den", "d": int}
json to_json(const exact::QuadExt& x);
exact::QuadExt quad_ext_from_json(const json& j);
json to_json(const indicator::RealRep& x);

json to_json(const perm::Permutation& p);
json to_json(const perm::CostasReport& report);

json to_json(const ruler::IntRuler& r);
/// Accepts {"marks": [...]} or a bare array.
std::vector<std::int64_t> marks_from_json(const json& j);
json to_json(const ruler::RatRuler& r);
json to_json(const ruler::OptimalityReport& r);
json to_json(const ruler::SidonReport<std::int64_t>& r);
/// candidate,accepted,conflict,level,k,cell_lo,cell_hi
std::string greedy_log_csv(const std::vector<ruler::GreedyStep>& log);

json to_json(const indicator::IndicatorParams& p);
json to_json(const indicator::ScanReport& r, const indicator::IndicatorParams& p, std::uint64_t seed);
json to_json(const indicator::Witness& w, const exact::Rational& c);

json to_json(const cauchy::HamelVector& v);
cauchy::HamelVector hamel_from_json(const json& j);
/// {"symbols": [{"id", "radicand"}], "perm": [...], "scale": ["num/den", ...]}
json to_json(const cauchy::QLinearMap& map);
cauchy::QLinearMap map_from_json(const json& j);
json to_json(const cauchy::ProbeResult& r);

/// {"stages": n, "geometry": "unit"|"expanding", "points": [{"x", "y", "stage", "cell": [j, k]}]}
json to_json(const cloud::CloudState& s);
/// Missing "geometry" means unit.
cloud::CloudState cloud_from_json(const json& j);
json to_json(const cloud::CloudReport& r);
/// x,y,stage,j,k,x_embed,y_embed
std::string cloud_csv(const cloud::CloudState& s);

/// Fixed-point decimal with the given number of fractional digits.
std::string decimal(const exact::Rational& r, int digits);

}  // namespace costas::io
