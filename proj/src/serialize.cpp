#include "treepat/serialize.hpp"

#include <limits>

namespace treepat {

using nlohmann::json;

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

json poly_to_json(const Polynomial& p) {
    json a = json::array();
    for (const Int& c : p.coeffs()) a.push_back(int_to_json(c));
    if (a.empty()) a.push_back(0);
    return a;
}

json seq_to_json(const std::vector<Int>& terms) {
    json a = json::array();
    for (const Int& t : terms) a.push_back(int_to_json(t));
    return a;
}

json gf_to_json(const RationalGF& g) { return json{{"num", poly_to_json(g.num())}, {"den", poly_to_json(g.den())}}; }

namespace {

std::vector<Int> coeffs_from_json(const json& a) {
    std::vector<Int> out;
    out.reserve(a.size());
    for (const auto& c : a) {
        if (c.is_string())
            out.emplace_back(c.get<std::string>());
        else
            out.emplace_back(c.get<long long>());
    }
    return out;
}

}  // namespace

RationalGF gf_from_json(const json& j) {
    return RationalGF(Polynomial(coeffs_from_json(j.at("num"))), Polynomial(coeffs_from_json(j.at("den"))));
}

}  // namespace treepat
