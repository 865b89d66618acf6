#include "witt/json_io.hpp"

namespace witt {

Json ring_to_json(const RingSpec& r) {
    Json j;
    switch (r.kind()) {
        case RingKind::integers: j["kind"] = "integers"; break;
        case RingKind::rationals: j["kind"] = "rationals"; break;
        case RingKind::p_local:
            j["kind"] = "p-local-rationals";
            j["p"] = r.p();
            break;
        case RingKind::mod_prime_power:
            j["kind"] = "mod-prime-power";
            j["p"] = r.p();
            j["N"] = r.precision();
            break;
        case RingKind::prime_field:
            j["kind"] = "prime-field";
            j["p"] = r.p();
            break;
    }
    return j;
}

RingSpec ring_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return RingSpec::integers();
    if (kind == "rationals") return RingSpec::rationals();
    if (kind == "p-local-rationals") return RingSpec::p_local(j.at("p").get<long>());
    if (kind == "mod-prime-power")
        return RingSpec::mod_prime_power(j.at("p").get<long>(), j.at("N").get<int>());
    if (kind == "prime-field") return RingSpec::prime_field(j.at("p").get<long>());
    throw invalid_value("unknown ring kind: " + kind);
}

namespace {

Json coeff_array(const std::vector<RingElem>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

std::vector<RingElem> parse_coeffs(const Json& arr, const RingSpec& r) {
    std::vector<RingElem> out;
    out.reserve(arr.size());
    for (const auto& x : arr) out.push_back(RingElem::parse(r, x.get<std::string>()));
    return out;
}

} // namespace

Json series_to_json(const TruncSeries& s) {
    Json j;
    j["kind"] = "series";
    j["ring"] = ring_to_json(s.ring());
    j["truncation"] = s.trunc();
    j["coeffs"] = coeff_array(s.coeffs());
    return j;
}

TruncSeries series_from_json(const Json& j) {
    const RingSpec r = ring_from_json(j.at("ring"));
    std::vector<RingElem> c = parse_coeffs(j.at("coeffs"), r);
    if (j.contains("truncation")
        && j.at("truncation").get<int>() != static_cast<int>(c.size()) - 1)
        throw invalid_value("series truncation does not match coefficient count");
    return TruncSeries(r, std::move(c));
}

Json big_witt_to_json(const BigWittVec& w) {
    Json j;
    j["kind"] = "big-witt";
    j["ring"] = ring_to_json(w.ring());
    j["truncation"] = w.trunc();
    j["coords"] = coeff_array(w.coords());
    return j;
}

BigWittVec big_witt_from_json(const Json& j) {
    if (j.at("kind").get<std::string>() != "big-witt")
        throw invalid_value("expected a big-witt value");
    const RingSpec r = ring_from_json(j.at("ring"));
    std::vector<RingElem> c = parse_coeffs(j.at("coords"), r);
    if (j.contains("truncation")
        && j.at("truncation").get<int>() != static_cast<int>(c.size()))
        throw invalid_value("truncation does not match coordinate count");
    return BigWittVec(r, std::move(c));
}

Json p_witt_to_json(const PWittVec& w) {
    Json j;
    j["kind"] = "p-witt";
    j["prime"] = w.prime();
    j["length"] = w.length();
    j["ring"] = ring_to_json(w.ring());
    j["coords"] = coeff_array(w.coords());
    return j;
}

PWittVec p_witt_from_json(const Json& j) {
    if (j.at("kind").get<std::string>() != "p-witt")
        throw invalid_value("expected a p-witt value");
    const long p = j.at("prime").get<long>();
    const RingSpec r = ring_from_json(j.at("ring"));
    std::vector<RingElem> c = parse_coeffs(j.at("coords"), r);
    if (j.contains("length") && j.at("length").get<int>() != static_cast<int>(c.size()))
        throw invalid_value("length does not match coordinate count");
    return PWittVec(p, r, std::move(c));
}

Json artin_hasse_to_json(const ArtinHasseElement& ah) {
    Json j;
    j["h"] = ah.h;
    j["p"] = ah.p;
    j["series"] = coeff_array(ah.series.coeffs());
    j["big_witt"] = big_witt_to_json(ah.big);
    j["p_typical"] = p_witt_to_json(ah.p_typical);
    Json ghosts;
    for (long n = 1; n <= ah.trunc; ++n)
        ghosts[std::to_string(n)] = ah.big.ghost(n).str();
    j["ghosts"] = ghosts;
    return j;
}

Json fixture_to_json(const QuotientPresentation& q) {
    Json j;
    j["p"] = q.p;
    j["modulus_exponent"] = q.modulus_exponent;
    j["degree_bound"] = q.degree_bound;
    Json rels = Json::array();
    for (const auto& r : q.relations) {
        Json row = Json::array();
        for (const auto& c : r) {
            if (!c.fits_slong_p()) throw invalid_value("fixture coefficient too large for JSON");
            row.push_back(c.get_si());
        }
        rels.push_back(row);
    }
    j["relations"] = rels;
    return j;
}

QuotientPresentation fixture_from_json(const Json& j) {
    QuotientPresentation q;
    q.p = j.at("p").get<long>();
    q.modulus_exponent = j.at("modulus_exponent").get<int>();
    q.degree_bound = j.at("degree_bound").get<int>();
    for (const auto& row : j.at("relations")) {
        std::vector<mpz_class> r;
        for (const auto& c : row) r.emplace_back(c.get<long>());
        q.relations.push_back(std::move(r));
    }
    return q;
}

Json fixture_report_to_json(const FixtureReport& rep) {
    Json j;
    Json lengths = Json::array(), exps = Json::array();
    for (const auto& c : rep.checks) {
        lengths.push_back(c.length);
        exps.push_back(c.mod_p_exponent);
    }
    j["lengths"] = lengths;
    j["mod_p_exponents"] = exps;
    j["status"] = rep.pass() ? "pass" : "fail";
    if (!rep.pass()) {
        Json f = Json::array();
        for (const auto& s : rep.failures) f.push_back(s);
        j["failures"] = f;
    }
    return j;
}

Json ah_check_report_to_json(const AhCheckReport& rep) {
    Json j;
    j["h"] = rep.h;
    j["p"] = rep.p;
    j["trunc"] = rep.trunc;
    j["samples"] = rep.samples;
    j["height1_projection_is_one"] = rep.height1_projection_is_one;
    j["splitting_square_commutes"] = rep.splitting_square_commutes;
    j["multiplication_invertible"] = rep.multiplication_invertible;
    j["status"] = rep.pass() ? "pass" : "fail";
    if (!rep.pass()) {
        Json f = Json::array();
        for (const auto& s : rep.failures) f.push_back(s);
        j["failures"] = f;
    }
    return j;
}

} // namespace witt
