#include "bsf/report.hpp"

#include "bsf/errors.hpp"

namespace bsf {

void VerificationReport::record_mismatch(unsigned n, const Rational& lhs, const Rational& rhs) {
    if (!first_mismatch) first_mismatch = Mismatch{n, lhs, rhs};
}

void VerificationReport::absorb(const SeriesComparison& cmp, unsigned index_offset) {
    if (!cmp.equal) record_mismatch(*cmp.mismatch_index + index_offset, cmp.lhs, cmp.rhs);
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["statement"] = report.statement;
    j["parameters"] = report.parameters;
    j["order"] = report.order;
    j["status"] = report.exact() ? "exact" : "fail";
    if (report.first_mismatch) {
        j["first_mismatch"] = {{"n", report.first_mismatch->n},
                               {"lhs", to_string(report.first_mismatch->lhs)},
                               {"rhs", to_string(report.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (!report.details.empty()) j["details"] = report.details;
    return j;
}

nlohmann::json to_json(const Rational& q) {
    return nlohmann::json::array({numerator_of(q).str(), denominator_of(q).str()});
}

nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& c : s.coefficients()) coeffs.push_back(to_json(c));
    return {{"order", s.order()}, {"coefficients", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    try {
        std::vector<Rational> coeffs;
        for (auto& pair : j.at("coefficients")) {
            Integer num(pair.at(0).get<std::string>());
            Integer den(pair.at(1).get<std::string>());
            if (den == 0) throw ValidationError("zero denominator in series JSON");
            coeffs.emplace_back(num, den);
        }
        TruncatedSeries s(std::move(coeffs));
        if (s.order() != j.at("order").get<unsigned>()) throw ValidationError("series JSON order does not match");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed series JSON: ") + e.what());
    }
}

}  // namespace bsf
