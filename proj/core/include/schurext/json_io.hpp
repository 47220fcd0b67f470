#pragma once

#include <map>

#include <nlohmann/json.hpp>

#include "schurext/exactlin.hpp"
#include "schurext/report.hpp"
#include "schurext/resolutions.hpp"
#include "schurext/series.hpp"
#include "schurext/speccomplex.hpp"

namespace schurext {

using nlohmann::json;

// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

json dims_to_json(const std::map<int, std::size_t>& dims);
std::map<int, std::size_t> dims_from_json(const json& j);

namespace lin {
void to_json(json& j, const Ring& r);
void from_json(const json& j, Ring& r);
void to_json(json& j, const HomologyGroup& g);
void from_json(const json& j, HomologyGroup& g);
void to_json(json& j, const IntegerMatrix& m);
void from_json(const json& j, IntegerMatrix& m);
// {"ring":..., "degrees":[lo,hi], "terms":{n:rank}, "diffs":{n:[[...]]}}
void to_json(json& j, const ChainComplex& c);
void from_json(const json& j, ChainComplex& c);
}  // namespace lin

namespace comb {
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
}  // namespace comb

namespace spec {
void to_json(json& j, const ExtTable& t);
void from_json(const json& j, ExtTable& t);
}  // namespace spec

namespace series {
// {"tmax":..., "umax":..., "coeffs":[[i,j,c],...]}
void to_json(json& j, const BiPoly& b);
void from_json(const json& j, BiPoly& b);
}  // namespace series

namespace res {
void to_json(json& j, const ResolutionShape& s);
void from_json(const json& j, ResolutionShape& s);
}  // namespace res

void to_json(json& j, const CheckReport& r);
void from_json(const json& j, CheckReport& r);

}  // namespace schurext
