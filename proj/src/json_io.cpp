#include "stringy/json_io.hpp"

namespace stringy {

using nlohmann::json;

namespace {

json coeff_to_json(const mpz_class& c) {
    if (c.fits_slong_p())
        return static_cast<int64_t>(c.get_si());
    return c.get_str();
}

mpz_class coeff_from_json(const json& j) {
    if (j.is_number_integer())
        return mpz_class(static_cast<long>(j.get<int64_t>()));
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    raise(ErrorCode::IoError, "coefficient must be an integer or decimal string");
}

} // namespace

json lp_to_json(const LaurentPoly& p) {
    json pairs = json::array();
    for (const auto& [e, c] : p.terms())
        pairs.push_back(json::array({e, coeff_to_json(c)}));
    return pairs;
}

LaurentPoly lp_from_json(const json& j) {
    if (!j.is_array())
        raise(ErrorCode::IoError, "polynomial must be an array of [exponent, coefficient]");
    LaurentPoly p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            raise(ErrorCode::IoError, "polynomial term must be an [exponent, coefficient] pair");
        p.add_term(pair[0].get<int64_t>(), coeff_from_json(pair[1]));
    }
    return p;
}

json rf_to_json(const RatFunc& f) {
    return json{{"num", lp_to_json(f.num())}, {"den", lp_to_json(f.den())}};
}

RatFunc rf_from_json(const json& j) {
    return RatFunc(lp_from_json(j.at("num")), lp_from_json(j.at("den")));
}

json ms_to_json(const IntMultiset& m) {
    json pairs = json::array();
    for (const auto& [v, mult] : m.counts())
        pairs.push_back(json::array({v, mult}));
    return pairs;
}

IntMultiset ms_from_json(const json& j) {
    if (!j.is_array())
        raise(ErrorCode::IoError, "multiset must be an array of [value, multiplicity]");
    IntMultiset m;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            raise(ErrorCode::IoError, "multiset entry must be a [value, multiplicity] pair");
        m.insert(pair[0].get<int64_t>(), pair[1].get<int64_t>());
    }
    return m;
}

json spec_to_json(const RepSpec& s) {
    return json{{"p", s.p()}, {"d", s.parts()}};
}

RepSpec spec_from_json(const json& j) {
    int64_t p = j.at("p").get<int64_t>();
    if (j.contains("d_plus"))
        return RepSpec::from_plus(p, j.at("d_plus").get<std::vector<int64_t>>());
    return RepSpec(p, j.at("d").get<std::vector<int64_t>>());
}

json fraction_to_json(const Fraction& f) { return f.to_string(); }

Fraction fraction_from_json(const json& j) {
    if (j.is_number_integer())
        return Fraction(static_cast<long>(j.get<int64_t>()));
    return Fraction::parse(j.get<std::string>());
}

} // namespace stringy
