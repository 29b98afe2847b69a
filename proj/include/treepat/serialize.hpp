#pragma once

#include "treepat/ratfun.hpp"

#include <json.hpp>

namespace treepat {

// {"num":[0,1,-2],"den":[1,-3,1]} <-> (x - 2x^2)/(1 - 3x + x^2).
// Coefficients beyond int64 are emitted as decimal strings.
nlohmann::json int_to_json(const Int& v);
nlohmann::json poly_to_json(const Polynomial& p);
nlohmann::json seq_to_json(const std::vector<Int>& terms);
nlohmann::json gf_to_json(const RationalGF& g);
RationalGF gf_from_json(const nlohmann::json& j);

}  // namespace treepat
