#include "bsf/covariance.hpp"

#include "bsf/errors.hpp"

#include <sstream>

namespace bsf {

namespace {

void require_positive(const Rational& beta2) {
    if (beta2 <= 0) throw ValidationError("beta^2 must be positive, got " + to_string(beta2));
}

}  // namespace

CovarianceSpec CovarianceSpec::constant_one(Rational beta2) {
    require_positive(beta2);
    return CovarianceSpec(Family::constant_one, std::move(beta2));
}

CovarianceSpec CovarianceSpec::inverse_linear(Rational beta2) {
    require_positive(beta2);
    return CovarianceSpec(Family::inverse_linear, std::move(beta2));
}

CovarianceSpec CovarianceSpec::geometric(Rational rho, Rational beta2) {
    require_positive(beta2);
    if (abs(rho) > 1) throw ValidationError("geometric correlation needs |rho| <= 1, got " + to_string(rho));
    CovarianceSpec c(Family::geometric, std::move(beta2));
    c.rho_ = std::move(rho);
    return c;
}

CovarianceSpec CovarianceSpec::table(std::vector<Rational> r, Rational beta2) {
    require_positive(beta2);
    if (r.empty() || r.front() != 1) throw ValidationError("correlation table must start with r(0) = 1");
    for (std::size_t m = 0; m < r.size(); ++m)
        if (abs(r[m]) > 1)
            throw ValidationError("correlation r(" + std::to_string(m) + ") = " + to_string(r[m]) + " exceeds 1");
    CovarianceSpec c(Family::table, std::move(beta2));
    c.table_ = std::move(r);
    return c;
}

CovarianceSpec CovarianceSpec::parse(std::string_view family, Rational beta2) {
    if (family == "constant" || family == "constant-one") return constant_one(std::move(beta2));
    if (family == "inverse-linear") return inverse_linear(std::move(beta2));
    if (family.starts_with("geometric:"))
        return geometric(parse_rational(family.substr(10)), std::move(beta2));
    if (family.starts_with("table:")) {
        std::vector<Rational> r;
        std::stringstream in{std::string(family.substr(6))};
        std::string item;
        while (std::getline(in, item, ',')) r.push_back(parse_rational(item));
        return table(std::move(r), std::move(beta2));
    }
    throw ValidationError("unknown covariance '" + std::string(family) +
                          "' (expected constant, inverse-linear, geometric:rho, table:...)");
}

Rational CovarianceSpec::correlation(unsigned lag) const {
    switch (family_) {
        case Family::constant_one: return 1;
        case Family::inverse_linear: return Rational(1, lag + 1);
        case Family::geometric: return power(rho_, lag);
        case Family::table:
            if (lag >= table_.size())
                throw RangeError("correlation table has no lag " + std::to_string(lag) + " (max " +
                                 std::to_string(table_.size() - 1) + ")");
            return table_[lag];
    }
    return 0;
}

std::optional<unsigned> CovarianceSpec::max_lag() const {
    if (family_ == Family::table) return static_cast<unsigned>(table_.size() - 1);
    return std::nullopt;
}

BareWeights CovarianceSpec::bare_weights(unsigned max_index) const {
    std::vector<Rational> b;
    b.reserve(max_index);
    for (unsigned k = 1; k <= max_index; ++k) b.push_back(scaled(2 * k - 1));
    return BareWeights::explicit_list(std::move(b));
}

std::string CovarianceSpec::describe() const {
    std::string family;
    switch (family_) {
        case Family::constant_one: family = "constant"; break;
        case Family::inverse_linear: family = "inverse-linear"; break;
        case Family::geometric: family = "geometric:" + to_string(rho_); break;
        case Family::table:
            family = "table:";
            for (std::size_t m = 0; m < table_.size(); ++m) family += (m ? "," : "") + to_string(table_[m]);
            break;
    }
    return family + " beta2=" + to_string(beta2_);
}

}  // namespace bsf
