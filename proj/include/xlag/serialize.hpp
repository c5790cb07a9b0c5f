#pragma once

#include "deform2.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace xlag {

using json = nlohmann::json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ["num", "den"], decimal strings
inline json scalar_to_json(const Scalar& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

inline Scalar scalar_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw FormatError("rational must be [\"num\", \"den\"]");
    Integer n, d;
    if (n.set_str(j[0].get<std::string>(), 10) != 0 || d.set_str(j[1].get<std::string>(), 10) != 0)
        throw FormatError("rational parts must be decimal integers");
    if (d == 0) throw FormatError("zero denominator");
    return make_scalar(n, d);
}

inline void to_json(json& j, const YPoly& p) {
    json cs = json::array();
    for (const auto& c : p.coeffs()) cs.push_back(scalar_to_json(c));
    j = json{{"var", "y"}, {"coeffs", cs}};
}

inline void from_json(const json& j, YPoly& p) {
    if (!j.is_object() || j.value("var", "") != "y" || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw FormatError("polynomial must be {\"var\": \"y\", \"coeffs\": [...]}");
    std::vector<Scalar> cs;
    for (const auto& c : j["coeffs"]) cs.push_back(scalar_from_json(c));
    p = YPoly(std::move(cs));
}

inline void to_json(json& j, const YRatFun& f) { j = json{{"num", f.num()}, {"den", f.den()}}; }

inline void from_json(const json& j, YRatFun& f) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw FormatError("rational function needs num and den");
    YPoly den = j["den"].get<YPoly>();
    if (den.is_zero()) throw FormatError("zero denominator");
    f = ratfun_reduce(j["num"].get<YPoly>(), den);
}

inline void to_json(json& j, const WaveFunction& w) {
    j = json{{"constant", scalar_to_json(w.constant)}, {"a", scalar_to_json(w.a)}, {"s", w.s},
             {"num", w.num}, {"den", w.den}};
}

inline void from_json(const json& j, WaveFunction& w) {
    if (!j.is_object()) throw FormatError("wave function must be an object");
    try {
        w = WaveFunction::make(scalar_from_json(j.at("constant")), scalar_from_json(j.at("a")), j.at("s").get<int>(),
                               j.at("num").get<YPoly>(), j.at("den").get<YPoly>());
    } catch (const json::exception& e) {
        throw FormatError(std::string("wave function: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline void to_json(json& j, const SuperpotentialForm& w) {
    json terms = json::array();
    for (const auto& t : w.logTerms) terms.push_back(json{{"sign", t.sign}, {"poly", t.poly}});
    j = json{{"invR", scalar_to_json(w.invR)}, {"linR", scalar_to_json(w.linR)}, {"logTerms", terms}};
}

inline void from_json(const json& j, SuperpotentialForm& w) {
    try {
        w = SuperpotentialForm{};
        w.invR = scalar_from_json(j.at("invR"));
        w.linR = scalar_from_json(j.at("linR"));
        for (const auto& t : j.at("logTerms")) w.logTerms.push_back({t.at("sign").get<int>(), t.at("poly").get<YPoly>()});
    } catch (const json::exception& e) {
        throw FormatError(std::string("superpotential: ") + e.what());
    }
}

}  // namespace xlag
