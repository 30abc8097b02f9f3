#pragma once

#include "bsf/rational.hpp"
#include "bsf/series.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace bsf {

struct Mismatch {
    /// Size / power index whose coefficient first disagrees.
    unsigned n = 0;
    Rational lhs;
    Rational rhs;
};

/// Outcome of an exact verification. Failure is data, never an exception.
struct VerificationReport {
    std::string statement;
    nlohmann::json parameters = nlohmann::json::object();
    unsigned order = 0;
    std::optional<Mismatch> first_mismatch;
    /// Free-form extra facts (counts, auxiliary checks) that travel with the report.
    nlohmann::json details = nlohmann::json::object();

    bool exact() const { return !first_mismatch; }
    /// Keeps the earliest mismatch already recorded.
    void record_mismatch(unsigned n, const Rational& lhs, const Rational& rhs);
    /// Folds a series comparison in; `index_offset` maps coefficient index to n.
    void absorb(const SeriesComparison& cmp, unsigned index_offset = 0);
};

/// {"statement", "parameters", "order", "status": "exact"|"fail", "first_mismatch": {n, lhs, rhs}|null}
nlohmann::json to_json(const VerificationReport& report);

/// [numerator, denominator] as decimal strings.
nlohmann::json to_json(const Rational& q);
/// {"order": M, "coefficients": [[num, den], ...]}
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace bsf
