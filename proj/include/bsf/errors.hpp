#pragma once

#include <stdexcept>
#include <string>

namespace bsf {

/// A size, order or index outside the supported range (n = 0, above the cap, K exceeded, ...).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed input data: bad encodings, invalid Dyck paths, laws that do not normalize.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Formal composition outside its domain, e.g. a non-polynomial degree function of a
/// series with nonzero constant term.
class CompositionDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotPositiveDefiniteError : public std::runtime_error {
public:
    NotPositiveDefiniteError(const std::string& what, std::size_t leading_minor)
        : std::runtime_error(what), leading_minor_(leading_minor) {}
    /// 1-based order of the first leading principal minor that fails.
    std::size_t leading_minor() const { return leading_minor_; }

private:
    std::size_t leading_minor_;
};

}  // namespace bsf
